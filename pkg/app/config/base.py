# app/config/base.py
"""
Configurazione base della libreria e della CLI.

Questo file definisce la classe Config, da cui ereditano:
- DevelopmentConfig
- ProductionConfig
- TestingConfig

Ogni impostazione è sovrascrivibile con una variabile d'ambiente omonima
(i file .env vengono caricati dagli entry point, non da qui).
"""

import logging
import os
from pathlib import Path

# Logging durante il bootstrap (prima di setup_logging)
logging.basicConfig(level=logging.INFO, format="%(levelname)s:%(name)s:%(message)s")
log = logging.getLogger("app.config.base")

# -------------------------------------------------------
# 1. BASE_DIR → percorso assoluto del progetto
# -------------------------------------------------------
try:
    BASE_DIR = Path(__file__).resolve().parent.parent.parent
except Exception as e:
    raise RuntimeError(f"Impossibile determinare BASE_DIR: {e}")


def env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return float(raw)
    except ValueError:
        log.warning("Valore non numerico per %s: %r, uso %s", name, raw, default)
        return default


def env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        log.warning("Valore non intero per %s: %r, uso %s", name, raw, default)
        return default


def env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes")


# -------------------------------------------------------
# 2. CONFIGURAZIONE BASE (eredita tutto)
# -------------------------------------------------------
class Config:
    """Configurazione base condivisa."""

    ENV = "base"
    DEBUG = False
    TESTING = False

    # ---------------------------------------------------
    # VERIFICA
    # ---------------------------------------------------
    VERIFY_TOLERANCE = env_float("VERIFY_TOLERANCE", 1e-9)
    ERRATUM_THRESHOLD = env_float("ERRATUM_THRESHOLD", 1e-6)
    POLE_FLOOR = env_float("POLE_FLOOR", 1e-12)
    RANDOM_SEED = env_int("RANDOM_SEED", 0)
    XI_SAMPLE_COUNT = env_int("XI_SAMPLE_COUNT", 50)
    XI_SAMPLE_RANGE = env_float("XI_SAMPLE_RANGE", 3.0)
    VERIFY_GRID = os.getenv("VERIFY_GRID", "10x5")

    # ---------------------------------------------------
    # FIGURE
    # ---------------------------------------------------
    CURVE_POINTS = env_int("CURVE_POINTS", 1001)
    SURFACE_POINTS = env_int("SURFACE_POINTS", 201)
    CURVE_RESIDUAL_STRIDE = env_int("CURVE_RESIDUAL_STRIDE", 10)
    SURFACE_RESIDUAL_STRIDE = env_int("SURFACE_RESIDUAL_STRIDE", 20)
    FLOAT_DIGITS = env_int("FLOAT_DIGITS", 17)
    OUTPUT_DIR = Path(os.getenv("OUTPUT_DIR", str(BASE_DIR / "output")))

    # ---------------------------------------------------
    # SISTEMI ALGEBRICI
    # ---------------------------------------------------
    MAX_SYSTEM_M = env_int("MAX_SYSTEM_M", 3)

    # ---------------------------------------------------
    # LOGGING
    # ---------------------------------------------------
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
    LOG_TO_FILE = env_bool("LOG_TO_FILE", True)
    LOG_DIR = BASE_DIR / "instance" / "logs"

    APP_NAME = os.getenv("APP_NAME", "Murnaghan Rod Solitons")

    # Accesso comodo alla root del progetto
    BASE_DIR = BASE_DIR
