"""Exact-arithmetic engine for the bounded-height diagram algebra towers.

Gram matrices and determinants of standard modules, one-cup Chebyshev
series, Rollet branching graphs with the marginal-vertex identity, real
root certification for the determinant families, and bootstrap elements
certifying submodule embeddings at special parameter values.
"""

from .exactmath import Polynomial, PolyMatrix, Q, RationalFunction
from .cheby import ChebSeries, cheb_u, quantum_number
from .diagrams import PairPartition, compose, flip, half_basis, one_cup_basis
from .gram import (ModuleLabel, factor_one_cup, gram_det, gram_det_lnp,
                   gram_matrix, one_cup_det, one_cup_series)
from .rollet import (RolletGraph, arm_verify, chebyshev_c, dimension,
                     marginal_v, tl_recursive_det)
from .morphisms import XiElement, divisibility_check, solve_xi, submodule_verify, xi_step

__version__ = "0.1.0"

__all__ = [
    "Polynomial", "PolyMatrix", "Q", "RationalFunction",
    "ChebSeries", "cheb_u", "quantum_number",
    "PairPartition", "compose", "flip", "half_basis", "one_cup_basis",
    "ModuleLabel", "factor_one_cup", "gram_det", "gram_det_lnp",
    "gram_matrix", "one_cup_det", "one_cup_series",
    "RolletGraph", "arm_verify", "chebyshev_c", "dimension", "marginal_v",
    "tl_recursive_det",
    "XiElement", "divisibility_check", "solve_xi", "submodule_verify", "xi_step",
    "__version__",
]
