# run.py
"""
Entry point della CLI.

Carica le variabili d'ambiente da .env (se presenti) e avvia il gruppo di
comandi definito in commands.py:

    python run.py verify --allow-errata
    python run.py figure fig1 --out output/fig1
"""

import logging
import sys

from dotenv import load_dotenv

# --- Variabili d'ambiente ---
if load_dotenv():
    logging.getLogger(__name__).debug("run.py: variabili d'ambiente caricate da .env")

try:
    from commands import main
except ImportError as e:  # pragma: no cover
    logging.basicConfig(level=logging.CRITICAL)
    logging.critical(f"FATAL ERROR: impossibile importare commands.py: {e}")
    sys.exit(1)


if __name__ == "__main__":
    main()
