"""Additive 1-perfect codes in Doob graphs D(m, n' + n'')."""

from .check_matrix import (
    CheckMatrix,
    VerificationReport,
    code_cardinality,
    coverage_table,
    syndrome,
    syndrome_subgroup,
    verify_perfect,
)
from .constructions import (
    admissible_params,
    alt_d707,
    base_d814,
    construct,
    delta_step,
    gamma_step,
    increase_npp,
    quasi_cyclic,
)
from .doob_space import Shape, Vertex, distance, weight
from .galois_ring import GaloisRing, make_ring

__all__ = [
    "CheckMatrix",
    "GaloisRing",
    "Shape",
    "VerificationReport",
    "Vertex",
    "admissible_params",
    "alt_d707",
    "base_d814",
    "code_cardinality",
    "construct",
    "coverage_table",
    "delta_step",
    "distance",
    "gamma_step",
    "increase_npp",
    "make_ring",
    "quasi_cyclic",
    "syndrome",
    "syndrome_subgroup",
    "verify_perfect",
    "weight",
]
