"""Exact truncated power series over rationals, and the counting generating functions.

A TruncatedSeries holds coefficients 0..order as Fractions; index j is the
coefficient of x^j. Arithmetic between series of different orders truncates to
the smaller order. Everything is exact: a non-integer where an integer count
is expected is reported as an error, never rounded.

The three counting series:

* egf_f: 1/(2 - x - e^x), built as geometric composed with e^x + x - 1; its
  coefficient counts (k! times coefficient k) are j_surjective.
* egf_H: e^x / (2 - x - e^x), built as e^x times the reciprocal of the
  denominator; its counts are count_L.
* egf_fubini: 1/(2 - e^x); its counts are the ordered set partition numbers.

egf_H and egf_f deliberately take different construction routes (reciprocal
vs composition), so the identity H = exp * f cross-checks both primitives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from homcount.combinatorics import factorial

Coefficient = Union[Fraction, int]


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]  # index j = coefficient of x^j; length = order + 1

    def __init__(self, coeffs: Iterable[Coefficient]):
        values = tuple(Fraction(c) for c in coeffs)
        if not values:
            raise ValueError("a truncated series has at least its constant term")
        object.__setattr__(self, "coeffs", values)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def ps_constant(value: Coefficient, order: int) -> TruncatedSeries:
    return TruncatedSeries([Fraction(value)] + [Fraction(0)] * order)


def ps_exp(order: int) -> TruncatedSeries:
    """Taylor series of e^x: coefficient j is 1/j!."""
    return TruncatedSeries(Fraction(1, factorial(j)) for j in range(order + 1))


def ps_geometric(order: int) -> TruncatedSeries:
    """1/(1-x): all coefficients 1."""
    return TruncatedSeries([Fraction(1)] * (order + 1))


def _common_order(a: TruncatedSeries, b: TruncatedSeries) -> int:
    return min(a.order, b.order)


def ps_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = _common_order(a, b)
    return TruncatedSeries(a.coeffs[j] + b.coeffs[j] for j in range(n + 1))


def ps_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = _common_order(a, b)
    return TruncatedSeries(
        sum(a.coeffs[i] * b.coeffs[j - i] for i in range(j + 1)) for j in range(n + 1)
    )


def ps_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """b with a*b = 1 up to the truncation order."""
    if a.coeffs[0] == 0:
        raise ValueError("series not invertible: zero constant term")
    inv0 = 1 / a.coeffs[0]
    out = [inv0]
    for j in range(1, a.order + 1):
        out.append(-inv0 * sum(a.coeffs[i] * out[j - i] for i in range(1, j + 1)))
    return TruncatedSeries(out)


def ps_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(x)) by Horner evaluation; inner must vanish at 0."""
    if inner.coeffs[0] != 0:
        raise ValueError("composition requires an inner series with zero constant term")
    n = _common_order(outer, inner)
    result = ps_constant(outer.coeffs[n], n)
    for j in range(n - 1, -1, -1):
        result = ps_add(ps_mul(result, inner), ps_constant(outer.coeffs[j], n))
    return result


def _denominator(order: int) -> TruncatedSeries:
    # 2 - x - e^x: constant 1, then -2, then -1/j!
    coeffs = [Fraction(1)]
    if order >= 1:
        coeffs.append(Fraction(-2))
    for j in range(2, order + 1):
        coeffs.append(Fraction(-1, factorial(j)))
    return TruncatedSeries(coeffs)


def egf_f(order: int) -> TruncatedSeries:
    """1/(2 - x - e^x): coefficient counts are the surjective model numbers."""
    g1 = [Fraction(0)]  # e^x + x - 1
    if order >= 1:
        g1.append(Fraction(2))
    for j in range(2, order + 1):
        g1.append(Fraction(1, factorial(j)))
    return ps_compose(ps_geometric(order), TruncatedSeries(g1))


def egf_H(order: int) -> TruncatedSeries:
    """e^x / (2 - x - e^x): coefficient counts are the k-colored ordering numbers."""
    return ps_mul(ps_exp(order), ps_reciprocal(_denominator(order)))


def egf_fubini(order: int) -> TruncatedSeries:
    """1/(2 - e^x): coefficient counts are the ordered set partition numbers."""
    coeffs = [Fraction(1)]
    for j in range(1, order + 1):
        coeffs.append(Fraction(-1, factorial(j)))
    return TruncatedSeries(ps_reciprocal(TruncatedSeries(coeffs)).coeffs)


def egf_counts(s: TruncatedSeries, k: int) -> int:
    """k! times coefficient k, which must come out a nonnegative integer."""
    if not 0 <= k <= s.order:
        raise ValueError(f"coefficient {k} outside series order {s.order}")
    value = s.coeffs[k] * factorial(k)
    if value.denominator != 1 or value < 0:
        raise ValueError(
            f"k!*[x^{k}] = {value} is not a nonnegative integer; series was built wrong"
        )
    return int(value)
