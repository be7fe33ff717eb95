"""Linearized polynomials: ring laws, division, Euclid chains, root spaces."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from rankcodes.gf import frob, named_field
from rankcodes.linpoly import (
    LinearizedPoly,
    format_linpoly,
    lp_add,
    lp_euclid_chain,
    lp_eval,
    lp_is_right_divisor,
    lp_right_divmod,
    lp_root_space,
    lp_roots_exhaustive,
    lp_sub,
    lp_symb_mul,
    parse_linpoly,
)

F8 = named_field(2, 3)
F256 = named_field(2, 8)


def a(k, spec=F8):
    return spec.alpha(k)


def poly(spec, terms):
    return LinearizedPoly(spec, {i: spec.from_int(v) for i, v in terms.items()})


def random_poly(rng, spec, max_deg):
    terms = {i: spec.from_int(rng.randrange(spec.size)) for i in range(max_deg + 1)}
    return LinearizedPoly(spec, terms)


# -- ring structure -------------------------------------------------------------------

small = st.dictionaries(st.integers(0, 3), st.integers(0, 7), max_size=4)


@given(small, small, small)
def test_symb_mul_associative_and_distributive(fa, fb, fc):
    F, G, H = (poly(F8, d) for d in (fa, fb, fc))
    assert lp_symb_mul(lp_symb_mul(F, G), H) == lp_symb_mul(F, lp_symb_mul(G, H))
    assert lp_symb_mul(F, lp_add(G, H)) == lp_add(lp_symb_mul(F, G), lp_symb_mul(F, H))


def test_symb_mul_is_noncommutative():
    F = poly(F8, {1: 1})            # z^[1]
    G = LinearizedPoly(F8, {0: a(1)})  # a*z
    # z^[1] * (a z) = a^2 z^[1]  but  (a z) * z^[1] = a z^[1]
    assert lp_symb_mul(F, G) != lp_symb_mul(G, F)
    assert lp_symb_mul(F, G) == LinearizedPoly(F8, {1: a(2)})
    assert lp_symb_mul(G, F) == LinearizedPoly(F8, {1: a(1)})


@given(small, st.integers(0, 7), st.integers(0, 7))
def test_eval_is_additive_and_composes(fd, xv, yv):
    F = poly(F8, fd)
    x, y = F8.from_int(xv), F8.from_int(yv)
    assert lp_eval(F, x + y) == lp_eval(F, x) + lp_eval(F, y)


@given(small, small, st.integers(0, 7))
def test_symb_mul_matches_composition(fd, gd, xv):
    F, G = poly(F8, fd), poly(F8, gd)
    x = F8.from_int(xv)
    assert lp_eval(lp_symb_mul(F, G), x) == lp_eval(F, lp_eval(G, x))


# -- right division -------------------------------------------------------------------

def test_right_division_roundtrips():
    rng = random.Random(3)
    for _ in range(10_000):
        spec = F8 if rng.random() < 0.5 else F256
        G = random_poly(rng, spec, rng.randrange(1, 4))
        if G.is_zero():
            continue
        F = random_poly(rng, spec, rng.randrange(0, 6))
        Q, R = lp_right_divmod(F, G)
        assert R.degree < G.degree
        assert lp_add(lp_symb_mul(Q, G), R) == F


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        lp_right_divmod(poly(F8, {1: 1}), LinearizedPoly.zero(F8))


def test_multi_term_quotient():
    # F = z^[2], G = a^4 z^[1] + a^3 z: quotient needs both a z^[1] and a z term.
    F = LinearizedPoly.monomial(F8, 2)
    G = LinearizedPoly(F8, {1: a(4), 0: a(3)})
    Q, R = lp_right_divmod(F, G)
    assert Q == LinearizedPoly(F8, {1: a(6), 0: a(1)})
    assert R == LinearizedPoly(F8, {0: a(4)})


# -- Euclid chain ---------------------------------------------------------------------

def test_euclid_chain_single_error_syndrome():
    # Syndrome polynomial of the 3-symbol code example: S = a^3 z + a^4 z^[1].
    F0 = LinearizedPoly.monomial(F8, 2)
    S = LinearizedPoly(F8, {0: a(3), 1: a(4)})
    chain = lp_euclid_chain(F0, S, stop_degree=1)
    assert chain.m == 1
    assert chain.F[2] == LinearizedPoly(F8, {0: a(4)})


def test_euclid_chain_seven_symbol_example():
    # Reduced syndromes of the (7,2) decode with two erasures removed.
    A = F256.alpha
    F0 = LinearizedPoly.monomial(F256, 4)
    S = LinearizedPoly(F256, {0: A(95), 1: A(68), 2: A(44), 3: A(48)})
    chain = lp_euclid_chain(F0, S, stop_degree=2)
    assert chain.m == 2
    assert chain.F[2] == LinearizedPoly(F256, {2: A(103), 1: A(136), 0: A(39)})
    assert chain.F[3] == LinearizedPoly(F256, {1: A(48), 0: A(72)})


def test_euclid_chain_rejects_bad_inputs():
    F0 = LinearizedPoly.monomial(F8, 2)
    with pytest.raises(ZeroDivisionError):
        lp_euclid_chain(F0, LinearizedPoly.zero(F8), 1)
    with pytest.raises(ValueError):
        lp_euclid_chain(F0, LinearizedPoly.monomial(F8, 2), 1)


# -- root spaces ----------------------------------------------------------------------

def test_root_space_of_frobenius_minus_identity():
    # z^[1] - z vanishes exactly on the prime subfield.
    F = LinearizedPoly(F8, {1: F8.one(), 0: F8.one()})
    basis = lp_root_space(F)
    assert len(basis) == 1
    assert basis[0] == F8.one()


def test_root_space_matches_exhaustive_oracle():
    rng = random.Random(17)
    specs = [named_field(2, 3), named_field(2, 5), named_field(3, 3), named_field(2, 8)]
    for _ in range(200):
        spec = rng.choice(specs)
        F = random_poly(rng, spec, rng.randrange(0, 4))
        if F.is_zero():
            continue
        basis = lp_root_space(F)
        # Span the basis over GF(p) and compare against brute force.
        span = {spec.zero()}
        for b in basis:
            span = {s + b.scale(c) for s in span for c in range(spec.p)} | span
        assert span == lp_roots_exhaustive(F)
        assert len(span) == spec.p ** len(basis)


def test_right_divisor_of_field_polynomial():
    # z^[1] + z has kernel GF(2), a subfield, so it right-divides z^[3] + z.
    G = LinearizedPoly(F8, {1: F8.one(), 0: F8.one()})
    ok, H = lp_is_right_divisor(G, 3)
    assert ok
    target = lp_sub(LinearizedPoly.monomial(F8, 3), LinearizedPoly.monomial(F8, 0))
    assert lp_symb_mul(H, G) == target


def test_non_divisor_detected():
    G = LinearizedPoly(F8, {1: F8.one(), 0: a(1)})  # kernel {0, a^6}: not q-closed enough
    ok, H = lp_is_right_divisor(G, 1)
    assert not ok and H is None


# -- text format ----------------------------------------------------------------------

def test_linpoly_text_roundtrip():
    spec = named_field(2, 5)
    F = LinearizedPoly(spec, {0: spec.alpha(24), 1: spec.alpha(3)})
    text = format_linpoly(F)
    assert text == "a^24*z[0] + a^3*z[1]"
    assert parse_linpoly(spec, text) == F
    assert format_linpoly(LinearizedPoly.zero(spec)) == "0"
    assert parse_linpoly(spec, "0").is_zero()
