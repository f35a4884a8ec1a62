"""sosforms: a workbench for sums-of-squares composition formulas.

Verifies and constructs bilinear formulas of type [r, s, n], decides the
Hopf condition by two independent engines (binomial parity and exact
arithmetic in the cohomology rings of deleted quadrics), tabulates the Chow
rings and Gysin maps of split quadrics, and searches for formulas over small
odd-prime fields.
"""

from .chow import (
    ChowClass,
    GysinTable,
    chow_mul,
    dq_additive_basis_localization,
    even_intersection_table,
    gysin_pullback,
    gysin_pushforward,
    projection_formula_check,
    quadric_generator_degrees,
)
from .formulas import (
    HurwitzSystem,
    SosFormula,
    construct_classical,
    construct_hurwitz_radon,
    construct_trivial,
    homotopy_invariance_check,
    orthonormal_vectors,
)
from .grading import BiDegree, ceil_half
from .hopf import (
    BoundEntry,
    HopfTriple,
    binom_parity,
    binom_parity_pascal,
    bound_table,
    hopf_admissible,
    hopf_lower_bound,
    rho,
)
from .motivic import (
    DQClass,
    DQRingSpec,
    M2Poly,
    TensorClass,
    bockstein,
    diagonal_power,
    dq_mul,
    dq_power_a,
    hopf_via_motivic,
    motivic_binomial_mismatches,
    restrict_class,
    ring_additive_basis,
    tensor_mul,
)
from .poly import SparsePoly, hyperbolic_coordinate_change
from .rings import (
    CoeffRing,
    GaussianExt,
    IntegerRing,
    PrimeField,
    QQ,
    RationalField,
    ZZ,
    gaussian_ext,
)
from .search import (
    SearchOptions,
    SearchProblem,
    SearchResult,
    SweepReport,
    hopf_consistency_sweep,
    search,
)

__version__ = "0.1.0"

__all__ = [
    "BiDegree",
    "BoundEntry",
    "ChowClass",
    "CoeffRing",
    "DQClass",
    "DQRingSpec",
    "GaussianExt",
    "GysinTable",
    "HopfTriple",
    "HurwitzSystem",
    "IntegerRing",
    "M2Poly",
    "PrimeField",
    "QQ",
    "RationalField",
    "SearchOptions",
    "SearchProblem",
    "SearchResult",
    "SosFormula",
    "SparsePoly",
    "SweepReport",
    "TensorClass",
    "ZZ",
    "binom_parity",
    "binom_parity_pascal",
    "bockstein",
    "bound_table",
    "ceil_half",
    "chow_mul",
    "construct_classical",
    "construct_hurwitz_radon",
    "construct_trivial",
    "diagonal_power",
    "dq_additive_basis_localization",
    "dq_mul",
    "dq_power_a",
    "even_intersection_table",
    "gaussian_ext",
    "gysin_pullback",
    "gysin_pushforward",
    "homotopy_invariance_check",
    "hopf_admissible",
    "hopf_consistency_sweep",
    "hopf_lower_bound",
    "hopf_via_motivic",
    "hyperbolic_coordinate_change",
    "motivic_binomial_mismatches",
    "orthonormal_vectors",
    "projection_formula_check",
    "quadric_generator_degrees",
    "restrict_class",
    "rho",
    "ring_additive_basis",
    "search",
    "tensor_mul",
]
