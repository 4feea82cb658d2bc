# app/config/production.py
"""
Configurazione per le esecuzioni batch (verifica completa, emissione figure).
"""

import os

from app.config.base import Config


class ProductionConfig(Config):
    ENV = "production"
    DEBUG = False

    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
