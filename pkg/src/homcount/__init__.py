"""Exact counting, enumeration, and verification of homogeneous colored linear orderings.

The package works with the finite encodings of two infinite families:
multicolored models (finite sequences of singly-colored R-points and
set-colored S-points, every color used at most once) and symbolic ordering
descriptions (sequences of singleton blocks and shuffles). Counting formulas,
generating functions, asymptotics, and brute-force enumeration are
cross-validated against each other; everything except the asymptotics module
is exact arbitrary-precision arithmetic.
"""

from homcount.combinatorics import BigCount, ExactRational, binomial, factorial, stirling2
from homcount.correspondence import (
    classify_cnm,
    contract_colored,
    contract_description,
    expand_colored,
    expand_model,
    is_finite_homogeneous,
)
from homcount.counting import (
    SequenceId,
    closed_form_I,
    count_I,
    count_L,
    fubini,
    j_surjective,
    k1,
    k2,
)
from homcount.enumeration import (
    BruteForceCapError,
    count_by_enumeration,
    enumerate_models,
    enumerate_ordered_set_partitions,
    enumerate_surjective,
)
from homcount.model import (
    ColoredDescription,
    ColorPoint,
    ColorShuffle,
    Finite,
    FiniteColoredOrdering,
    InfiniteKind,
    MulticoloredModel,
    OMEGA,
    OMEGA_STAR,
    OrderingDescription,
    RPoint,
    SPoint,
    Shuffle,
    SingletonBlock,
    ZETA,
    canonical_compare,
    validate_description,
    validate_model,
)

__all__ = [
    "BigCount",
    "ExactRational",
    "binomial",
    "factorial",
    "stirling2",
    "SequenceId",
    "count_I",
    "closed_form_I",
    "count_L",
    "j_surjective",
    "k1",
    "k2",
    "fubini",
    "BruteForceCapError",
    "count_by_enumeration",
    "enumerate_models",
    "enumerate_surjective",
    "enumerate_ordered_set_partitions",
    "expand_model",
    "contract_description",
    "expand_colored",
    "contract_colored",
    "classify_cnm",
    "is_finite_homogeneous",
    "MulticoloredModel",
    "RPoint",
    "SPoint",
    "OrderingDescription",
    "SingletonBlock",
    "Shuffle",
    "Finite",
    "InfiniteKind",
    "OMEGA",
    "OMEGA_STAR",
    "ZETA",
    "ColoredDescription",
    "ColorPoint",
    "ColorShuffle",
    "FiniteColoredOrdering",
    "validate_model",
    "validate_description",
    "canonical_compare",
]

__version__ = "0.1.0"
