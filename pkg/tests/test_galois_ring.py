import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from doobcodes.galois_ring import (
    PRESET_MODULI,
    RingError,
    format_element,
    make_ring,
    parse_element,
    preset_ring,
)
from oracles import ring_mul_sympy

R3 = preset_ring(3)


def elements(delta):
    return st.tuples(*[st.integers(0, 3)] * delta)


@pytest.mark.parametrize("delta", [3, 5, 7])
def test_presets_are_primitive(delta):
    ring = make_ring(delta)
    n = 2**delta - 1
    assert ring.power(ring.xi, n) == ring.one
    assert all(ring.power(ring.xi, k) != ring.one for k in range(1, n))


def test_reducible_modulus_rejected():
    with pytest.raises(RingError, match="reducible"):
        make_ring(3, (0, 1, 0, 1))  # x^3 + x = x(x^2 + 1)


def test_non_primitive_modulus_rejected():
    # x^4 + x^3 + x^2 + x + 1 is irreducible mod 2 but x has order 5 there,
    # and the lift through Z4 cannot do better than order 5 mod 2
    with pytest.raises(RingError, match="primitive"):
        make_ring(4, (1, 1, 1, 1, 1))


def test_bad_modulus_shape():
    with pytest.raises(RingError):
        make_ring(3, (3, 1, 2, 2))  # not monic
    with pytest.raises(RingError):
        make_ring(3, (3, 1, 1))
    with pytest.raises(RingError):
        make_ring(1, (1, 1))
    with pytest.raises(RingError):
        make_ring(11)  # no preset


def test_mul_examples():
    xi2 = R3.power(R3.xi, 2)
    assert R3.mul(R3.xi, xi2) == (1, 3, 2)
    assert R3.mul((2, 0, 0), (2, 0, 0)) == (0, 0, 0)
    for c in R3.elements:
        assert R3.mul(R3.one, c) == c
    with pytest.raises(RingError):
        R3.mul((1, 0), (1, 0, 0))


@pytest.mark.parametrize("delta", [3, 5])
def test_mul_matches_sympy(delta):
    ring = preset_ring(delta)
    rng = random.Random(delta)
    for _ in range(200):
        a = tuple(rng.randrange(4) for _ in range(delta))
        b = tuple(rng.randrange(4) for _ in range(delta))
        assert ring.mul(a, b) == ring_mul_sympy(a, b, PRESET_MODULI[delta])


def test_power():
    assert R3.power((1, 2, 3), 0) == R3.one
    assert R3.power(R3.xi, 7) == R3.one
    R5 = preset_ring(5)
    assert R5.power(R5.xi, 31) == R5.one
    assert R5.xi_power(-1) == R5.power(R5.xi, 30)


def test_teichmuller_and_decomposition():
    xi, xi2 = R3.xi, R3.power(R3.xi, 2)
    c = R3.add(xi, R3.scale(2, xi2))
    assert R3.teichmuller(c) == xi
    assert R3.two_adic(c) == (xi, xi2)
    assert R3.teichmuller((2, 0, 0)) == R3.zero
    assert R3.two_adic(R3.zero) == (R3.zero, R3.zero)
    assert R3.two_adic((3, 0, 0)) == (R3.one, R3.one)
    for t in R3.teichmuller_set():
        assert R3.teichmuller(t) == t
    assert len(R3.teichmuller_set()) == 8


def test_is_unit():
    assert R3.is_unit(R3.xi)
    assert not R3.is_unit(R3.scale(2, R3.xi))
    assert R3.is_unit(R3.add(R3.one, R3.scale(2, R3.xi)))


def test_frobenius_examples():
    xi = R3.xi
    assert R3.frobenius(xi) == R3.power(xi, 2)
    assert R3.frobenius((2, 0, 0)) == (2, 0, 0)
    one_2xi = R3.add(R3.one, R3.scale(2, xi))
    assert R3.frobenius(one_2xi) == R3.add(R3.one, R3.scale(2, R3.power(xi, 2)))


def test_halve():
    assert R3.halve((2, 0, 2)) == (1, 0, 1)
    assert R3.halve((0, 0, 0)) == (0, 0, 0)
    with pytest.raises(RingError):
        R3.halve((1, 0, 0))


def test_element_list_pairing_and_counts():
    for delta in (3, 5):
        ring = preset_ring(delta)
        t = ring.unit_count
        assert t == (2**delta - 1) * 2**delta
        els = ring.elements
        assert len(els) == len(set(els)) == 4**delta
        assert all(ring.is_unit(u) for u in els[:t])
        assert not any(ring.is_unit(u) for u in els[t:])
        for i in range(t):
            assert ring.add(els[i], els[t - 1 - i]) == ring.zero
    assert sum(map(R3.is_unit, itertools.product(range(4), repeat=3))) == 56


def test_teichmuller_closed_under_mul():
    T = set(R3.teichmuller_set())
    assert all(R3.mul(a, b) in T for a in T for b in T)


def test_xi_log_roundtrip():
    ring = preset_ring(5)
    for k in range(31):
        assert ring.xi_log(ring.xi_power(k)) == k
    with pytest.raises(RingError):
        ring.xi_log(ring.zero)


def test_text_form():
    assert parse_element("132", 3) == (1, 3, 2)
    assert format_element((1, 3, 2)) == "132"
    with pytest.raises(RingError):
        parse_element("14", 2)


@given(elements(5), elements(5))
def test_frobenius_is_automorphism_delta5(a, b):
    ring = preset_ring(5)
    f = ring.frobenius
    assert f(ring.add(a, b)) == ring.add(f(a), f(b))
    assert f(ring.mul(a, b)) == ring.mul(f(a), f(b))


@given(elements(7))
def test_frobenius_order_divides_delta_7(c):
    ring = preset_ring(7)
    x = c
    for _ in range(7):
        x = ring.frobenius(x)
    assert x == c


@given(elements(7))
def test_two_adic_roundtrip_delta7(c):
    ring = preset_ring(7)
    a, b = ring.two_adic(c)
    assert ring.add(a, ring.scale(2, b)) == c
    assert ring.is_teichmuller(a) and ring.is_teichmuller(b)
    assert ring.is_unit(c) == (a != ring.zero)


@pytest.mark.parametrize("delta", [3, 5])
def test_teichmuller_table_matches_squaring(delta):
    ring = preset_ring(delta)
    for c in itertools.product(range(4), repeat=delta):
        assert ring.teichmuller(c) == ring.teichmuller_by_squaring(c)


@given(elements(5))
def test_frobenius_matches_direct_formula(c):
    ring = preset_ring(5)
    a, b = ring.two_adic(c)
    assert ring.frobenius(c) == ring.add(ring.mul(a, a), ring.scale(2, ring.mul(b, b)))
