# app/config/testing.py
"""
Configurazione per i test automatizzati.

Obiettivi: velocità (griglie delle figure ridotte) e isolamento (nessun file
di log, output in una cartella temporanea scelta dai fixture).
"""

from app.config.base import Config


class TestingConfig(Config):
    ENV = "testing"
    TESTING = True
    DEBUG = False

    # Solo avvisi: i test controllano stdout e stderr della CLI
    LOG_LEVEL = "WARNING"
    LOG_TO_FILE = False

    # Griglie piccole; le dimensioni complete sono coperte dai test di performance
    CURVE_POINTS = 101
    SURFACE_POINTS = 21
    CURVE_RESIDUAL_STRIDE = 10
    SURFACE_RESIDUAL_STRIDE = 10
