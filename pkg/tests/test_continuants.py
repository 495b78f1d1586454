import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import GOLDEN_P
from tricontinuants.continuants import (
    DEFAULT_MAX_K,
    PERIODIC,
    c_poly,
    chi1,
    d_poly,
    delta,
    em_denominator,
    em_numerator,
    g_poly,
    h_poly,
    k_denominator,
    k_numerator,
    periodic,
    phi,
    poly_by_name,
    r_poly,
    rho,
    shift_up,
    sigma,
)
from tricontinuants.monoid_ring import Polynomial, substitute

P = Polynomial.parse
ks = st.integers(0, 12)


def _zero_b(g):
    return 0 if g.letter == "b" else None


def _zero_a_b0(g):
    return 0 if g.letter == "a" or g.subscript == 0 else None


def test_listed_r_agree_through_5(golden_r):
    for k in range(6):
        assert r_poly(k) == golden_r[k], k


def test_listed_r6_differs_by_two_dropped_leading_letters(golden_r):
    printed = golden_r[6]
    diff = printed - r_poly(6)
    # each misprinted word is the true word with its leading a6 removed
    assert diff == P("-b1 b0 + a4 a1 + a6 b1 b0 - a6 a4 a1")
    assert len(printed) == len(r_poly(6)) == 149


def test_listed_p():
    for k, text in GOLDEN_P.items():
        assert k_numerator(k) == P(text)


def test_em_initial_values():
    assert em_numerator(0) == P("b0")
    assert em_numerator(1) == P("b1 b0 + a1")
    assert em_denominator(0) == 1
    assert em_denominator(1) == P("b1")


def test_em_numerator_support_is_fibonacci():
    fib = [0, 1]
    while len(fib) < 20:
        fib.append(fib[-1] + fib[-2])
    assert len(em_numerator(4)) == 8
    for k in range(14):
        assert len(em_numerator(k)) == fib[k + 2]


def test_em_denominator_is_shifted_numerator():
    for k in range(1, 12):
        assert em_denominator(k + 1) == shift_up(em_numerator(k)), k


def test_k_denominator_initial_values():
    assert k_denominator(0) == 1
    assert k_denominator(1) == P("1 + b1")


def test_k_denominator_from_next_numerator():
    assert k_denominator(4) == -phi(k_numerator(5))


def test_r_examples():
    assert r_poly(2) == P("a2 b0 - b2 + b2 a1 + b2 b1 b0 + b2 b0")
    r4 = r_poly(4)
    assert r4.constant == 1 and len(r4.support() - {()}) == 28
    assert r_poly(6) == k_numerator(6) - r_poly(5)


def test_r_negative_seeds():
    assert (r_poly(-3), r_poly(-2), r_poly(-1)) == (0, 1, 0)


def test_p_support_size_at_7():
    p = [1, 4, 8]
    while len(p) < 8:
        p.append(p[-1] + 2 * p[-2] + 2 * p[-3])
    assert len(k_numerator(7)) == p[7]


def test_periodic_examples():
    assert sigma(5) == -1
    assert rho(4) == 1
    assert periodic("upsilon", 13) == 1
    assert [chi1(k) for k in range(4)] == [0, 1, 0, -1]
    with pytest.raises(ValueError):
        periodic("nope", 0)


def test_periodic_sums_are_consistent():
    for k in range(24):
        assert sigma(k) == -sigma(k + 3)
        assert rho(k) == -rho(k + 3)
    assert {s.period for s in PERIODIC.values()} == {6, 4, 12}


@pytest.mark.parametrize("k", [-1, DEFAULT_MAX_K + 1])
def test_out_of_range_k(k):
    with pytest.raises(ValueError):
        k_numerator(k)


def test_non_int_k():
    with pytest.raises(TypeError):
        r_poly(2.0)


def test_explicit_cap_can_be_raised():
    assert len(r_poly(DEFAULT_MAX_K + 1, max_k=DEFAULT_MAX_K + 1)) > 0


def test_poly_by_name():
    assert poly_by_name("R", 3) == r_poly(3)
    with pytest.raises(ValueError):
        poly_by_name("Z", 1)


def test_delta_example():
    assert delta(em_numerator(1)) == k_numerator(1)
    assert delta(P("b0")) == P("b0")


@given(ks)
def test_structure_relation(k):
    assert k_numerator(k) == r_poly(k) + r_poly(k - 1)


@given(ks)
def test_specializations(k):
    assert c_poly(k) == substitute(k_numerator(k), _zero_b)
    assert d_poly(k) == substitute(k_denominator(k), _zero_b)
    assert g_poly(k) == substitute(k_numerator(k), _zero_a_b0)
    assert h_poly(k) == substitute(k_denominator(k), _zero_a_b0)


@given(ks)
def test_every_word_strictly_descending(k):
    for p in (r_poly(k), k_numerator(k), k_denominator(k), em_numerator(k)):
        for m, _c in p.items():
            subs = [g.subscript for g in m]
            assert subs == sorted(set(subs), reverse=True)


@given(ks)
def test_r_constant_and_unit_coefficients(k):
    r = r_poly(k)
    assert r.constant == rho(k)
    assert all(c in (1, -1) for _m, c in r.items())


@given(ks)
def test_em_numerator_has_unit_coefficients(k):
    assert all(c == 1 for _m, c in em_numerator(k).items())
