"""Spectrum of the Cauchy operator |Delta|^(1/2) on (-1, 1) with a zero exterior condition."""

from ._core import (
    __version__,
    apply_even_basis,
    apply_odd_basis,
    assemble,
    ci,
    cin,
    disprove,
    eigenfunction,
    eigh,
    element,
    element_analytic,
    ground_state_approximant,
    si,
    solve_parity,
    spectrum,
)

__all__ = [
    "__version__",
    "apply_even_basis",
    "apply_odd_basis",
    "assemble",
    "ci",
    "cin",
    "disprove",
    "eigenfunction",
    "eigh",
    "element",
    "element_analytic",
    "ground_state_approximant",
    "si",
    "solve_parity",
    "spectrum",
]
