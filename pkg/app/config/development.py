# app/config/development.py
"""
Configurazione per lo sviluppo locale: log dettagliati su console e file.
"""

import os

from app.config.base import Config


class DevelopmentConfig(Config):
    ENV = "development"
    DEBUG = True

    LOG_LEVEL = os.getenv("LOG_LEVEL", "DEBUG").upper()
