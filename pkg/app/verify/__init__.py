from .identities import IdentityCheck, identity_suite
from .presets import default_inputs
from .reports import GridSpec, ResidualReport, Status, classify
from .residuals import aux_residual, ode_residual, pde_residual
from .runner import verify_catalog, verify_family

__all__ = [
    "GridSpec",
    "IdentityCheck",
    "ResidualReport",
    "Status",
    "aux_residual",
    "classify",
    "default_inputs",
    "identity_suite",
    "ode_residual",
    "pde_residual",
    "verify_catalog",
    "verify_family",
]
