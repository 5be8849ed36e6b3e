"""Exact-arithmetic tools for deciding whether matrix Lie algebras are algebraic.

Everything works over the rationals: Jordan-Chevalley decomposition,
replica algebras, sample-based algebraicity verdicts, algebraic hulls,
and constructors for a family of non-algebraic nilpotent examples.
"""

from . import catalog
from .algebraicity import (
    Adjunction,
    HullReport,
    NilpotentDecomposition,
    Verdict,
    Witness,
    algebraic_hull,
    check_algebraic,
    nilpotent_decomposition,
)
from .errors import (
    AlgLieError,
    DimensionMismatch,
    NotClosed,
    NotInSpan,
    NotNilpotent,
    NotNilpotentAlgebra,
    NotSemisimple,
    ParamDomain,
    RoundLimitExceeded,
    SplitFailure,
)
from .jordan import Eigenstructure, JordanPair, eigenstructure, is_nilpotent_matrix, is_semisimple, jordan_decompose
from .liealg import (
    LieSubalgebra,
    UnipotenceCertificate,
    center,
    derived_subalgebra,
    generate_lie,
    is_filiform,
    is_ideal,
    is_nilpotent_algebra,
    is_subalgebra,
    is_unipotent,
    lower_central_series,
    nilindex,
    structure_constants,
)
from .ratlinalg import IntegerLattice, Q, QMatrix, QPoly, Subspace, bracket, charpoly, integer_kernel, minpoly
from .replica import ReplicaResult, replica, replica_nilpotent, replica_semisimple

__version__ = "0.1.0"

__all__ = [
    "Adjunction",
    "AlgLieError",
    "DimensionMismatch",
    "Eigenstructure",
    "HullReport",
    "IntegerLattice",
    "JordanPair",
    "LieSubalgebra",
    "NilpotentDecomposition",
    "NotClosed",
    "NotInSpan",
    "NotNilpotent",
    "NotNilpotentAlgebra",
    "NotSemisimple",
    "ParamDomain",
    "Q",
    "QMatrix",
    "QPoly",
    "ReplicaResult",
    "RoundLimitExceeded",
    "SplitFailure",
    "Subspace",
    "UnipotenceCertificate",
    "Verdict",
    "Witness",
    "algebraic_hull",
    "bracket",
    "catalog",
    "center",
    "charpoly",
    "check_algebraic",
    "derived_subalgebra",
    "eigenstructure",
    "generate_lie",
    "integer_kernel",
    "is_filiform",
    "is_ideal",
    "is_nilpotent_algebra",
    "is_nilpotent_matrix",
    "is_semisimple",
    "is_subalgebra",
    "is_unipotent",
    "jordan_decompose",
    "lower_central_series",
    "minpoly",
    "nilindex",
    "nilpotent_decomposition",
    "replica",
    "replica_nilpotent",
    "replica_semisimple",
    "structure_constants",
]
