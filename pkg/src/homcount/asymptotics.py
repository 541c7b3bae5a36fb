"""Double-precision singularity analysis for the counting generating functions.

The dominant pole of e^x/(2-x-e^x) sits where 2 - x - e^x = 0, at
Z = 2 - W(e^2) with W the principal Lambert branch. The residues there give
the first-order coefficient approximation A(k) and the limiting fraction of
surjective models 1/W(e^2). This module is the only inexact one in the
package: everything is IEEE double, and tolerances are pinned by the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from homcount.combinatorics import factorial
from homcount.counting import count_I, count_L, j_surjective

_GROWTH_BASE = 2.123  # base of the proven I(k) growth bound
_MAX_RATIO_K = 170  # log-factorial range used by the ratio table


def lambert_w0(t: float) -> float:
    """Principal Lambert W on t >= 0: the w with w*e^w = t.

    Halley iteration from w = log(1+t); converges to machine precision in a
    handful of steps anywhere on the nonnegative axis.
    """
    if t < 0:
        raise ValueError(f"lambert_w0 requires a nonnegative argument, got {t}")
    if t == 0:
        return 0.0
    w = math.log1p(t)
    for _ in range(50):
        e = math.exp(w)
        f = w * e - t
        step = f / (e * (w + 1) - (w + 2) * f / (2 * (w + 1)))
        w -= step
        if abs(step) < 1e-15:
            break
    return w


@dataclass(frozen=True)
class AsymptoticConstants:
    Z: float  # dominant pole of e^x/(2-x-e^x)
    R: float  # residue of e^x/(2-x-e^x) at Z
    S: float  # residue of 1/(2-x-e^x) at Z
    limit_ratio: float  # S/R = 1/W(e^2): limiting surjective proportion
    p_star: float  # maximizer of the growth-bound expression
    M: float  # its maximum, the growth-bound base ~2.12243


def constants() -> AsymptoticConstants:
    w = lambert_w0(math.exp(2))
    e2 = math.exp(2)
    ew = math.exp(w)
    z = 2 - w
    r = -e2 / (ew + e2)
    s = -ew / (ew + e2)
    root = math.sqrt(1 + 4 * math.log(2))
    p = (-1 + root) / (2 * root)
    q = p / (1 - p)
    entropy = -(q * math.log2(q) + (1 - q) * math.log2(1 - q))
    m = (1 / math.log(2)) ** (1 - p) * 2 ** ((1 - p) * entropy)
    return AsymptoticConstants(Z=z, R=r, S=s, limit_ratio=s / r, p_star=p, M=m)


def _log_approx_A(k: int) -> float:
    c = constants()
    return math.log(-c.R) + math.lgamma(k + 1) + (k + 1) * math.log(1 / c.Z)


def approx_A(k: int) -> float:
    """First-order approximation -k! * R * (1/Z)^(k+1) of the k-color count.

    Exact double product up to k=20; log-space beyond to dodge factorial
    overflow. Past k ~ 148 the true value exceeds the double range and the
    result saturates to inf.
    """
    if not 0 <= k <= _MAX_RATIO_K:
        raise ValueError(f"approx_A supports 0 <= k <= {_MAX_RATIO_K}, got {k}")
    c = constants()
    if k <= 20:
        return -factorial(k) * c.R * (1 / c.Z) ** (k + 1)
    try:
        return math.exp(_log_approx_A(k))
    except OverflowError:
        return math.inf


def growth_bound_M() -> float:
    """The exact maximized growth-bound expression, approximately 2.12243."""
    return constants().M


def growth_bound_grid_check(samples: int = 2000) -> float:
    """Grid maximum of the bound expression over (0, 1/2); cross-check for p_star."""
    best = 0.0
    for i in range(1, samples):
        p = 0.5 * i / samples
        q = p / (1 - p)
        entropy = -(q * math.log2(q) + (1 - q) * math.log2(1 - q)) if 0 < q < 1 else 0.0
        best = max(best, (1 / math.log(2)) ** (1 - p) * 2 ** ((1 - p) * entropy))
    return best


def bound_ratio_I(k: int) -> float:
    """count_I(k) / (k! * 2.123^k), the diagnostic for the growth bound."""
    if k < 0:
        raise ValueError(f"bound_ratio_I requires k >= 0, got {k}")
    log_ratio = (
        math.log(count_I(k)) - math.lgamma(k + 1) - k * math.log(_GROWTH_BASE)
    )
    return math.exp(log_ratio)


@dataclass(frozen=True)
class RatioRow:
    k: int
    l_over_a: float  # exact count / first-order approximation
    j_over_l: float  # surjective fraction, tending to 1/W(e^2)


def ratio_report(k_max: int) -> list[RatioRow]:
    """Convergence table for the approximation and the surjective proportion."""
    if not 0 <= k_max <= _MAX_RATIO_K:
        raise ValueError(f"ratio_report supports 0 <= k_max <= {_MAX_RATIO_K}, got {k_max}")
    rows = []
    for k in range(k_max + 1):
        l_count = count_L(k)
        # math.log takes arbitrary ints, so this never overflows
        l_over_a = math.exp(math.log(l_count) - _log_approx_A(k))
        j_over_l = math.exp(math.log(j_surjective(k)) - math.log(l_count))
        rows.append(RatioRow(k=k, l_over_a=l_over_a, j_over_l=j_over_l))
    return rows
