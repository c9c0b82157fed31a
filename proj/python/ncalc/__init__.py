"""Calculus over finite-dimensional associative algebras."""

from ._ncalc import (
    Algebra,
    Element,
    NcalcError,
    Poly,
    TensorPoly,
    Verdict,
    algebra,
    check_integrable,
    classify,
    commutator,
    conj,
    exp,
    gateaux,
    integrate_complex,
    integrate_path,
    minkowski,
    norm,
    path_dependence_gap,
    poincare,
    product_operator_norm,
    rescale_norm,
    series_coefficients,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
