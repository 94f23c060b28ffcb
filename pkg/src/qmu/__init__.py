"""Verified numerics for q-series: theta functions, basic hypergeometric
series, q-Borel summation, the little mu-function and its identities."""

from .numerics import (
    CVal,
    Divergent,
    Modulus,
    NonConvergent,
    NonFinite,
    PoleHit,
    QSeriesError,
    Residual,
    SummationPolicy,
)

__version__ = "0.1.0"

__all__ = [
    "CVal",
    "Divergent",
    "Modulus",
    "NonConvergent",
    "NonFinite",
    "PoleHit",
    "QSeriesError",
    "Residual",
    "SummationPolicy",
]
