"""Exact computational toolkit for Laplacian algebras over the rationals.

Polynomial calculus, harmonic decomposition, Groebner-based subalgebra
membership, Laplacian closure verdicts, generalized polarizations,
Jordan/Clifford homogeneity tests, and finite-group invariant generation.
All arithmetic is exact; every verdict is reproducible for a fixed seed.
"""

from ._core import (
    BudgetError,
    InputError,
    Polynomial,
    __version__,
    apolar_inner,
    check_laplacian,
    classical_polarizations,
    clifford_system,
    finite_group_invariants,
    grad_inner,
    harmonic_decompose,
    homogeneity_compare,
    kns_check,
    laplacian_closure,
    membership,
    parse,
    quadratic_homogeneity_test,
    r_squared,
    run_job,
    schur_ratios,
    sphere_moment,
    transcendence_degree,
)

__all__ = [
    "BudgetError",
    "InputError",
    "Polynomial",
    "__version__",
    "apolar_inner",
    "check_laplacian",
    "classical_polarizations",
    "clifford_system",
    "finite_group_invariants",
    "grad_inner",
    "harmonic_decompose",
    "homogeneity_compare",
    "kns_check",
    "laplacian_closure",
    "membership",
    "parse",
    "quadratic_homogeneity_test",
    "r_squared",
    "run_job",
    "schur_ratios",
    "sphere_moment",
    "transcendence_degree",
]
