# app/logging_config.py
"""
Configurazione del logging della libreria e della CLI.

Crea una directory per i log in instance/logs e configura:
1. Un RotatingFileHandler per scrivere log persistenti su file.
2. Un StreamHandler che scrive su stderr.

stdout resta riservato all'output della CLI (JSON, tabelle): per questo la
console usa stderr. In testing il file è disattivato.
"""
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Optional

LOGGER_NAME = "app"


def _level(config: Any) -> int:
    if getattr(config, "TESTING", False):
        return logging.WARNING
    level = logging.getLevelName(str(getattr(config, "LOG_LEVEL", "INFO")).upper())
    return level if isinstance(level, int) else logging.INFO


def setup_logging(config: Any, log_dir: Optional[Path] = None) -> logging.Logger:
    """
    Configura il logger del pacchetto `app`.

    Args:
        config: Istanza di configurazione (LOG_LEVEL, LOG_TO_FILE, LOG_DIR).
        log_dir: Cartella dei log; default `config.LOG_DIR`.

    Returns:
        logging.Logger: Il logger radice del pacchetto.

    Raises:
        RuntimeError: Se la creazione della directory dei log fallisce.
    """
    log_level = _level(config)

    # 1. Formato di log standard
    log_formatter = logging.Formatter(
        "%(asctime)s [%(levelname)s] %(name)s: %(message)s "
        "[in %(pathname)s:%(lineno)d]",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    logger = logging.getLogger(LOGGER_NAME)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    # 2. RotatingFileHandler (log su file)
    if getattr(config, "LOG_TO_FILE", False):
        target = Path(log_dir or config.LOG_DIR)
        try:
            target.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            logging.error(f"Errore nella creazione della directory dei log {target}: {e}")
            raise RuntimeError(f"Impossibile creare la directory dei log: {e}")
        file_handler = RotatingFileHandler(
            target / "soliton.log", maxBytes=10 * 1024 * 1024, backupCount=5  # 10 MB
        )
        file_handler.setFormatter(log_formatter)
        file_handler.setLevel(log_level)
        logger.addHandler(file_handler)

    # 3. StreamHandler (console su stderr)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(log_formatter)
    console_handler.setLevel(log_level)
    logger.addHandler(console_handler)

    logger.setLevel(log_level)
    # Evita la doppia stampa tramite il basicConfig del root logger
    logger.propagate = False

    logger.debug("Logging configurato con successo")
    return logger
