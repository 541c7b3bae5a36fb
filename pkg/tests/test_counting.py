"""Recurrences and closed forms against the reference term lists and the stream oracle."""

import pytest

from homcount.combinatorics import binomial
from homcount.counting import (
    SequenceId,
    closed_form_I,
    count_I,
    count_L,
    fubini,
    j_surjective,
    k1,
    k2,
    sequence_value,
)
from homcount.enumeration import (
    count_by_enumeration,
    count_ordered_set_partitions_by_enumeration,
    count_surjective_by_enumeration,
    enumerate_models,
    surjective_first_point_split,
)

I_TERMS = [
    3, 12, 71, 558, 5487, 64734, 891039, 14016774, 248057927, 4877703126,
    105504350679, 2489510252238, 63638447941551,
]  # k = 1..13
L_TERMS = [
    1, 3, 14, 95, 858, 9687, 131244, 2074515, 37475342, 761600375,
    17197534296, 427167206259, 11574924994554,
]  # k = 0..12


def test_k1_k2_base_and_unrolled_values():
    assert (k1(0), k2(0)) == (1, 0)
    assert (k1(2), k2(2)) == (5, 2)
    assert (k1(3), k2(3)) == (28, 15)


def test_count_I_reference_terms():
    assert [count_I(k) for k in range(1, 14)] == I_TERMS


def test_count_L_reference_terms():
    assert [count_L(k) for k in range(13)] == L_TERMS


def test_closed_form_examples():
    assert closed_form_I(1) == 2
    assert closed_form_I(2) == 11
    assert closed_form_I(3) == 70


def test_closed_form_is_count_I_minus_one():
    for k in range(1, 14):
        assert closed_form_I(k) + 1 == count_I(k)


def test_closed_form_counts_nonempty_models():
    for k in range(1, 6):
        nonempty = sum(1 for m in enumerate_models(k, True) if m.points)
        assert closed_form_I(k) == nonempty


def test_j_surjective_values():
    assert j_surjective(0) == 1
    assert j_surjective(2) == 9
    assert j_surjective(3) == 61


def test_fubini_values():
    assert fubini(0) == 1
    assert fubini(3) == 13
    assert fubini(4) == 75


def test_count_I_equals_brute_force():
    for k in range(1, 7):
        assert count_I(k) == count_by_enumeration(k, True)


def test_count_L_equals_brute_force():
    for k in range(7):
        assert count_L(k) == count_by_enumeration(k, False)


def test_j_surjective_equals_brute_force():
    for k in range(7):
        assert j_surjective(k) == count_surjective_by_enumeration(k, False)


def test_k_split_equals_brute_force():
    for k in range(7):
        assert k1(k) + k2(k) == count_surjective_by_enumeration(k, True)
    for k in range(6):
        s_first, r_first = surjective_first_point_split(k, True)
        assert (s_first, r_first) == (k1(k), k2(k))


def test_fubini_equals_brute_force():
    for k in range(8):
        assert fubini(k) == count_ordered_set_partitions_by_enumeration(k)


def test_binomial_transform_of_j():
    for k in range(21):
        assert count_L(k) == sum(binomial(k, i) * j_surjective(i) for i in range(k + 1))


def test_sequence_dispatch():
    assert sequence_value(SequenceId.I, 5) == 5487
    assert sequence_value(SequenceId.L, 6) == 131244
    assert sequence_value(SequenceId.K1, 2) == 5
    assert sequence_value(SequenceId.FUBINI, 4) == 75
    assert sequence_value(SequenceId.I_CLOSED_NONEMPTY, 2) == 11


def test_negative_index_rejected():
    for fn in (count_I, count_L, j_surjective, k1, k2, fubini, closed_form_I):
        with pytest.raises(ValueError):
            fn(-1)
