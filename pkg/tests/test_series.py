"""Series ring identities and generating-function counts against the recurrences."""

import random
from fractions import Fraction

import pytest

from homcount.counting import count_L, fubini, j_surjective
from homcount.series import (
    TruncatedSeries,
    egf_counts,
    egf_f,
    egf_fubini,
    egf_H,
    ps_add,
    ps_compose,
    ps_constant,
    ps_exp,
    ps_geometric,
    ps_mul,
    ps_reciprocal,
)

N = 25  # verification order


def frac(a, b=1):
    return Fraction(a, b)


def binomial_convolution_oracle(a, b, order):
    """Plain double-loop Cauchy product, independent of ps_mul."""
    return [
        sum(a[i] * b[j - i] for i in range(j + 1) if i < len(a) and j - i < len(b))
        for j in range(order + 1)
    ]


def test_exp_and_geometric_prefixes():
    assert ps_exp(2).coeffs == (frac(1), frac(1), frac(1, 2))
    assert ps_geometric(3).coeffs == (frac(1),) * 4
    assert ps_exp(0).coeffs == (frac(1),)


def test_mul_matches_convolution_oracle():
    a, b = ps_exp(3), ps_exp(3)
    expected = binomial_convolution_oracle(list(a.coeffs), list(b.coeffs), 3)
    got = ps_mul(a, b)
    assert list(got.coeffs) == expected
    # e^x * e^x = e^{2x}: coefficient j is 2^j / j!
    assert got.coeffs == (frac(1), frac(2), frac(2), frac(4, 3))


def test_add_and_mul_identities():
    s = egf_f(6)
    zero = ps_constant(0, 6)
    one = ps_constant(1, 6)
    assert ps_add(s, zero) == s
    assert ps_mul(s, one) == s


def test_truncation_to_smaller_order():
    assert ps_add(ps_exp(5), ps_exp(2)).order == 2
    assert ps_mul(ps_exp(5), ps_exp(2)).order == 2


def test_reciprocal_examples():
    alt = ps_reciprocal(TruncatedSeries([1, 1, 0, 0, 0]))
    assert alt.coeffs == (frac(1), frac(-1), frac(1), frac(-1), frac(1))
    halves = ps_reciprocal(TruncatedSeries([2, 0, 0]))
    assert halves.coeffs == (frac(1, 2), frac(0), frac(0))
    with pytest.raises(ValueError, match="not invertible"):
        ps_reciprocal(TruncatedSeries([0, 1]))


def test_reciprocal_property_randomized():
    rng = random.Random(1105)
    one = ps_constant(1, 8)
    for _ in range(25):
        coeffs = [Fraction(rng.randint(1, 5))] + [
            Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(8)
        ]
        a = TruncatedSeries(coeffs)
        assert ps_mul(a, ps_reciprocal(a)) == one


def test_compose_identity_and_constant():
    geo = ps_geometric(5)
    x = TruncatedSeries([0, 1, 0, 0, 0, 0])
    assert ps_compose(geo, x) == geo
    s = ps_exp(4)
    assert ps_compose(s, ps_constant(0, 4)) == ps_constant(1, 4)
    with pytest.raises(ValueError, match="zero constant"):
        ps_compose(geo, ps_constant(1, 5))


def test_compose_geometric_with_exp_plus_x_minus_one():
    # prefix of 1/(2-x-e^x); counts 1, 2, 9, 61 are the surjective numbers
    g1 = TruncatedSeries([0, 2, frac(1, 2), frac(1, 6)])
    got = ps_compose(ps_geometric(3), g1)
    assert got.coeffs == (frac(1), frac(2), frac(9, 2), frac(61, 6))


def test_egf_prefix_values():
    assert egf_H(2).coeffs == (frac(1), frac(3), frac(7))
    assert egf_f(0).coeffs == (frac(1),)
    assert egf_fubini(3).coeffs == (frac(1), frac(1), frac(3, 2), frac(13, 6))


def test_egf_counts_examples():
    assert egf_counts(egf_H(5), 3) == 95
    assert egf_counts(egf_f(5), 3) == 61
    assert egf_counts(egf_fubini(5), 4) == 75


def test_egf_counts_errors():
    with pytest.raises(ValueError, match="outside"):
        egf_counts(egf_H(3), 4)
    with pytest.raises(ValueError, match="not a nonnegative integer"):
        egf_counts(TruncatedSeries([frac(1, 3)]), 0)


def test_H_counts_match_recurrence():
    H = egf_H(N)
    for k in range(N + 1):
        assert egf_counts(H, k) == count_L(k)


def test_f_counts_match_recurrence():
    f = egf_f(N)
    for k in range(N + 1):
        assert egf_counts(f, k) == j_surjective(k)


def test_fubini_counts_match_recurrence():
    h = egf_fubini(N)
    for k in range(N + 1):
        assert egf_counts(h, k) == fubini(k)


def test_H_is_exp_times_f():
    # reciprocal route (H) against composition route (f)
    for order in (0, 1, 5, 12, N):
        assert egf_H(order) == ps_mul(ps_exp(order), egf_f(order))


def test_coefficients_are_nonnegative():
    for s in (egf_H(N), egf_f(N), egf_fubini(N)):
        assert all(c >= 0 for c in s.coeffs)
