"""2-rank of the class group of real cyclic quartic fields Q(sqrt(n*eps0*sqrt(ell))).

ell is a prime = 5 (mod 8), eps0 the fundamental unit of Q(sqrt(ell)), and n a
squarefree positive integer prime to ell.  The rank is computed two
independent ways (closed-form case expressions, and the ambiguous-class
formula through explicit norm-residue character tables) which must agree.
"""

from .classify import Classification, ShapePattern, classify_small_rank, enumerate_rank
from .errors import (
    EllNotFiveMod8,
    EllNotPrime,
    FieldInputError,
    InternalCheckError,
    NNotPositive,
    NotCoprime,
    NotQuadraticResidue,
    NotSquarefree,
)
from .ntheory import TwoSquares, factor_squarefree, factorize, is_prime, legendre, quartic_symbol, two_squares
from .quad import FundamentalUnit, SplittingType, fundamental_unit, splitting_type
from .quartic import (
    Conductor,
    DefiningPolynomial,
    FieldInput,
    WilliamsForm,
    conductor,
    defining_polynomial,
    from_williams,
    to_williams,
    validate,
    validate_ell,
    zink_reduce,
)
from .rank import (
    CharacterTable,
    NShape,
    RamProfile,
    RankResult,
    character_table,
    n_shape,
    r_star,
    ram_profile,
    rank_closed,
    rank_unified,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "ShapePattern",
    "classify_small_rank",
    "enumerate_rank",
    "EllNotFiveMod8",
    "EllNotPrime",
    "FieldInputError",
    "InternalCheckError",
    "NNotPositive",
    "NotCoprime",
    "NotQuadraticResidue",
    "NotSquarefree",
    "TwoSquares",
    "factor_squarefree",
    "factorize",
    "is_prime",
    "legendre",
    "quartic_symbol",
    "two_squares",
    "FundamentalUnit",
    "SplittingType",
    "fundamental_unit",
    "splitting_type",
    "Conductor",
    "DefiningPolynomial",
    "FieldInput",
    "WilliamsForm",
    "conductor",
    "defining_polynomial",
    "from_williams",
    "to_williams",
    "validate",
    "validate_ell",
    "zink_reduce",
    "CharacterTable",
    "NShape",
    "RamProfile",
    "RankResult",
    "character_table",
    "n_shape",
    "r_star",
    "ram_profile",
    "rank_closed",
    "rank_unified",
    "__version__",
]
