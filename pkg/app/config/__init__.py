# app/config/__init__.py
"""
Inizializzazione del pacchetto di configurazione.

Responsabilità:
1. Identificare l'ambiente di esecuzione (SOLITON_ENV).
2. Istanziare la classe di configurazione appropriata.
3. Eseguire le validazioni critiche *post-inizializzazione*.
4. Esportare l'istanza `config`.

Pattern: Strategy (selezione della classe) + Fail Fast (validazione immediata).
"""
import logging
import os
from typing import List

from .base import Config
from .development import DevelopmentConfig
from .production import ProductionConfig
from .testing import TestingConfig

logging.basicConfig(level=logging.INFO, format="%(levelname)s:%(name)s:%(message)s")
log = logging.getLogger(__name__)

CONFIG_CLASSES = {
    "development": DevelopmentConfig,
    "production": ProductionConfig,
    "testing": TestingConfig,
}


# --- 1. Determinazione della Classe di Configurazione ---


def select_environment(raw: str | None) -> str:
    """Normalizza SOLITON_ENV; valori sconosciuti tornano a 'development'."""
    env = raw.strip().lower() if raw and raw.strip() else "development"
    if env not in CONFIG_CLASSES:
        log.warning(
            "Valore SOLITON_ENV sconosciuto: %r. Verrà utilizzata DevelopmentConfig.", raw
        )
        env = "development"
    return env


# --- 2. Validazioni critiche ---


def validate_config(cfg: Config) -> None:
    """
    Raccoglie tutte le violazioni e solleva un unico ValueError.

    Raises:
        ValueError: Se almeno un'impostazione non è valida.
    """
    validation_errors: List[str] = []
    for name in ("VERIFY_TOLERANCE", "ERRATUM_THRESHOLD", "POLE_FLOOR", "XI_SAMPLE_RANGE"):
        if not getattr(cfg, name) > 0:
            validation_errors.append(f"{name} deve essere > 0")
    for name in ("CURVE_POINTS", "SURFACE_POINTS"):
        if getattr(cfg, name) < 1:
            validation_errors.append(f"{name} deve essere >= 1")
    for name in ("CURVE_RESIDUAL_STRIDE", "SURFACE_RESIDUAL_STRIDE"):
        if getattr(cfg, name) < 1:
            validation_errors.append(f"{name} deve essere >= 1")
    if cfg.XI_SAMPLE_COUNT < 0:
        validation_errors.append("XI_SAMPLE_COUNT deve essere >= 0")
    if cfg.MAX_SYSTEM_M < 1:
        validation_errors.append("MAX_SYSTEM_M deve essere >= 1")
    if not 1 <= cfg.FLOAT_DIGITS <= 17:
        validation_errors.append("FLOAT_DIGITS deve essere fra 1 e 17")

    if validation_errors:
        for error in validation_errors:
            log.critical("Errore Configurazione: %s", error)
        raise ValueError(
            f"Validazione critica della configurazione fallita: {'; '.join(validation_errors)}"
        )


def load_config(raw_env: str | None = None) -> Config:
    env = select_environment(raw_env if raw_env is not None else os.getenv("SOLITON_ENV"))
    ConfigClass = CONFIG_CLASSES[env]
    log.debug("Istanziazione della classe: %s", ConfigClass.__name__)
    cfg = ConfigClass()
    validate_config(cfg)
    log.debug("Configurazione caricata e validata per l'ambiente '%s'.", env)
    return cfg


# --- 3. Istanza esportata ---
config = load_config()

__all__ = ["Config", "config", "load_config", "validate_config"]
