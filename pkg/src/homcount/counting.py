"""Closed-form and recursive counting formulas, exact over Python ints.

Two model families are counted, plus their surjective (all colors used)
refinements:

* count_I(k): adjacency-constrained models over colors 1..k, split into K1/K2
  by the tag of the first point (K1 counts S-first models and the empty model,
  K2 counts R-first models).
* count_L(k): unconstrained models, with j_surjective(k) counting those that
  use every color; fubini(k) counts the all-S-point surjective models, which
  are exactly the ordered set partitions of a k-set.

closed_form_I evaluates the direct summation formula verbatim. Its outer sum
starts at one point, so it counts only the NONEMPTY constrained models:
closed_form_I(k) + 1 == count_I(k). Both values are exposed on purpose; the
recurrence value is the one matching the reference term lists.

Sequence indexing conventions (also used by the CLI exports): I is listed from
k=1, everything else from k=0. All recurrences are memoized in grown tables.
"""

from __future__ import annotations

import enum
import threading
from math import ceil

from homcount.combinatorics import binomial, factorial, stirling2


class SequenceId(str, enum.Enum):
    I = "I"
    L = "L"
    J_SURJECTIVE = "J_surjective"
    K1 = "K1"
    K2 = "K2"
    FUBINI = "Fubini"
    I_CLOSED_NONEMPTY = "I_closed_nonempty"


_k1_table: list[int] = [1]
_k2_table: list[int] = [0]
_j_table: list[int] = [1]
_fubini_table: list[int] = [1]
# growth derives each entry from earlier ones; racing growers would duplicate rows
_k_lock = threading.Lock()
_j_lock = threading.Lock()
_fubini_lock = threading.Lock()


def _require_nonnegative(k: int) -> None:
    if k < 0:
        raise ValueError(f"sequence index must be nonnegative, got {k}")


def _extend_k_tables(k: int) -> None:
    if len(_k1_table) > k:
        return
    with _k_lock:
        while len(_k1_table) <= k:
            n = len(_k1_table)
            _k1_table.append(
                sum(binomial(n, i) * (_k1_table[i] + _k2_table[i]) for i in range(n))
            )
            _k2_table.append(n * _k1_table[n - 1])


def k1(k: int) -> int:
    """Surjective constrained models whose first point is an S-point (1 at k=0)."""
    _require_nonnegative(k)
    _extend_k_tables(k)
    return _k1_table[k]


def k2(k: int) -> int:
    """Surjective constrained models whose first point is an R-point."""
    _require_nonnegative(k)
    _extend_k_tables(k)
    return _k2_table[k]


def count_I(k: int) -> int:
    """Constrained models over colors 1..k, empty model included.

    The reference term list for this sequence starts at k=1.
    """
    _require_nonnegative(k)
    _extend_k_tables(k)
    return sum((_k1_table[i] + _k2_table[i]) * binomial(k, i) for i in range(k + 1))


def closed_form_I(k: int) -> int:
    """Direct summation for the nonempty constrained models: count_I(k) - 1.

    m runs over the colors actually used, n over the number of points, r over
    the number of R-points (never two in a row, so at most ceil(n/2)); the
    inner product picks the R positions, their colors and order, the order of
    the S color sets, and the partition of the remaining colors into them.
    """
    _require_nonnegative(k)
    total = 0
    for m in range(1, k + 1):
        inner = 0
        for n in range(1, m + 1):
            for r in range(ceil(n / 2) + 1):
                inner += (
                    binomial(n - r + 1, r)
                    * binomial(m, r)
                    * factorial(r)
                    * factorial(n - r)
                    * stirling2(m - r, n - r)
                )
        total += binomial(k, m) * inner
    return total


def _extend_j_table(k: int) -> None:
    if len(_j_table) > k:
        return
    with _j_lock:
        while len(_j_table) <= k:
            n = len(_j_table)
            _j_table.append(
                2 * n * _j_table[n - 1]
                + sum(binomial(n, i) * _j_table[n - i] for i in range(2, n + 1))
            )


def j_surjective(k: int) -> int:
    """Unconstrained models using all k colors."""
    _require_nonnegative(k)
    _extend_j_table(k)
    return _j_table[k]


def count_L(k: int) -> int:
    """Unconstrained models over colors 1..k: the homogeneous k-colored orderings.

    The sum includes the i=0 term (the empty ordering); starting it at i=1
    would contradict every reference term from L(1) on.
    """
    _require_nonnegative(k)
    _extend_j_table(k)
    return sum(_j_table[i] * binomial(k, i) for i in range(k + 1))


def fubini(k: int) -> int:
    """Ordered set partitions of a k-set."""
    _require_nonnegative(k)
    if len(_fubini_table) <= k:
        with _fubini_lock:
            while len(_fubini_table) <= k:
                n = len(_fubini_table)
                _fubini_table.append(
                    sum(binomial(n, i) * _fubini_table[n - i] for i in range(1, n + 1))
                )
    return _fubini_table[k]


_SEQUENCE_FUNCTIONS = {
    SequenceId.I: count_I,
    SequenceId.L: count_L,
    SequenceId.J_SURJECTIVE: j_surjective,
    SequenceId.K1: k1,
    SequenceId.K2: k2,
    SequenceId.FUBINI: fubini,
    SequenceId.I_CLOSED_NONEMPTY: closed_form_I,
}

# first index of the published term list for each sequence
SEQUENCE_START = {
    SequenceId.I: 1,
    SequenceId.L: 0,
    SequenceId.J_SURJECTIVE: 0,
    SequenceId.K1: 0,
    SequenceId.K2: 0,
    SequenceId.FUBINI: 0,
    SequenceId.I_CLOSED_NONEMPTY: 1,
}


def sequence_value(seq: SequenceId, k: int) -> int:
    """Recurrence/closed-form value of the named sequence at index k."""
    return _SEQUENCE_FUNCTIONS[seq](k)
