# app_factory.py
"""
Factory del contesto applicativo usato dalla CLI e dai test.

Il contesto raccoglie la configurazione validata e il logger del pacchetto
e costruisce gli oggetti derivati (griglia di verifica, densità delle figure).
"""

import logging
from dataclasses import dataclass
from typing import Any, Optional

# --- 1. Configurazione (DEVE essere la prima) ---
try:
    from app.config import Config, config
except (ImportError, ValueError, RuntimeError) as e:
    logging.basicConfig(level=logging.CRITICAL)
    logging.critical(f"FATAL: configurazione non valida all'avvio: {e}", exc_info=False)
    raise RuntimeError(f"Configuration failed: {e}")

from app.figures.writer import GridSettings
from app.logging_config import setup_logging
from app.verify.reports import GridSpec

log = logging.getLogger(__name__)


@dataclass
class SolitonApp:
    config: Config
    logger: logging.Logger

    def grid_spec(self, **overrides: Any) -> GridSpec:
        """GridSpec dalle impostazioni, con eventuali sostituzioni puntuali."""
        nx, nt = GridSpec.parse_counts(self.config.VERIFY_GRID)
        values = dict(
            nx=nx,
            nt=nt,
            xi_count=self.config.XI_SAMPLE_COUNT,
            xi_range=self.config.XI_SAMPLE_RANGE,
            seed=self.config.RANDOM_SEED,
            tolerance=self.config.VERIFY_TOLERANCE,
            erratum_threshold=self.config.ERRATUM_THRESHOLD,
            pole_floor=self.config.POLE_FLOOR,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return GridSpec(**values)  # type: ignore[arg-type]

    def figure_settings(self) -> GridSettings:
        return GridSettings(
            curve_points=self.config.CURVE_POINTS,
            surface_points=self.config.SURFACE_POINTS,
            curve_stride=self.config.CURVE_RESIDUAL_STRIDE,
            surface_stride=self.config.SURFACE_RESIDUAL_STRIDE,
            digits=self.config.FLOAT_DIGITS,
            pole_floor=self.config.POLE_FLOOR,
        )


def create_app(is_testing: bool = False, config_object: Optional[Config] = None) -> SolitonApp:
    """
    Crea il contesto applicativo.

    Args:
        is_testing: Se True forza TestingConfig.
        config_object: Configurazione esplicita (ha la precedenza).

    Returns:
        SolitonApp: Configurazione e logger pronti.
    """
    if config_object is not None:
        cfg = config_object
    elif is_testing:
        from app.config.testing import TestingConfig

        cfg = TestingConfig()
    else:
        cfg = config

    try:
        logger = setup_logging(cfg)
    except Exception as e:
        logging.basicConfig(level=logging.ERROR)
        logging.error(f"Errore nella configurazione del logging: {e}", exc_info=True)
        logger = logging.getLogger("app")
    logger.debug("Contesto creato per l'ambiente %s", getattr(cfg, "ENV", "unknown").upper())
    return SolitonApp(config=cfg, logger=logger)
