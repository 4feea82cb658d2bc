# app/__init__.py

"""
Solitoni dell'equazione d'onda dispersiva in un'asta di materiale di Murnaghan.

Sottopacchetti:
- models.materials: parametri derivati esatti del materiale;
- jet: aritmetica dei jet di Taylor troncati;
- catalog: registro delle famiglie di soluzioni e loro valutazione;
- cas: sistemi algebrici dei due metodi e verifica dei candidati;
- verify: residui e report di verifica;
- figures: dataset dei grafici di riferimento.
"""

__version__ = "1.0.0"
