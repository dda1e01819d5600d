"""Tests for Buchberger, quotient bases, and ideal quotient / saturation."""

import random

import pytest

from a1deg.errors import NotZeroDimensionalError, ZeroInputError
from a1deg.fields import GF, QQ
from a1deg.groebner import (
    GroebnerBasis,
    groebner_basis,
    ideal_intersection,
    ideal_quotient,
    ideal_quotient_by_ideal,
    normal_form,
    primary_component,
    s_polynomial,
    saturation,
)
from a1deg.polynomials import DEGREVLEX, LEX, PolyRing


def rand_poly(rng, ring, max_deg=3, terms=4):
    p = ring.zero
    for _ in range(terms):
        mono = [0] * ring.nvars
        for _ in range(rng.randrange(max_deg + 1)):
            mono[rng.randrange(ring.nvars)] += 1
        p = p + ring.const(rng.randrange(ring.field.characteristic)) * ring.monomial(
            tuple(mono)
        )
    return p


def test_known_basis_two_vars():
    R = PolyRing(QQ, ["x1", "x2"])
    gb = groebner_basis([R.parse("x1*x2"), R.parse("x1 + x2")])
    assert list(gb) == [R.parse("x1 + x2"), R.parse("x2^2")]
    assert gb.quotient_basis() == [(0, 0), (0, 1)]
    assert gb.quotient_dimension() == 2


def test_known_basis_line_and_circle():
    R = PolyRing(QQ, ["x", "y"])
    gb = groebner_basis([R.parse("x^2 + y^2 - 1"), R.parse("x - y")])
    assert list(gb) == [R.parse("x - y"), R.parse("y^2 - 1/2")]
    assert gb.normal_form(R.parse("x^2")) == R.parse("1/2")


def test_univariate_is_euclid():
    R = PolyRing(QQ, ["x"])
    gb = groebner_basis([R.parse("x^3 - x"), R.parse("x^2 - 1")])
    assert list(gb) == [R.parse("x^2 - 1")]


def test_whole_ring_and_zero_ideal():
    R = PolyRing(QQ, ["x", "y"])
    gb = groebner_basis([R.parse("x"), R.parse("x - 1")])
    assert gb.is_whole_ring()
    assert gb.quotient_basis() == []
    with pytest.raises(ZeroInputError):
        groebner_basis([])
    zero = groebner_basis([R.zero])
    assert len(zero) == 0
    with pytest.raises(NotZeroDimensionalError):
        zero.quotient_basis()


def test_not_zero_dimensional():
    R = PolyRing(QQ, ["x", "y"])
    gb = groebner_basis([R.parse("x*y - 1")])
    assert not gb.is_zero_dimensional()
    with pytest.raises(NotZeroDimensionalError):
        gb.quotient_basis()


def test_quotient_basis_box():
    R = PolyRing(QQ, ["x", "y"])
    gb = groebner_basis([R.parse("x^2"), R.parse("y^3")])
    names = [str(R.monomial(m)) for m in gb.quotient_basis()]
    assert names == ["1", "y", "x", "y^2", "x*y", "x*y^2"]


def test_determinism_under_generator_shuffles():
    rng = random.Random(23)
    F = GF(7)
    R = PolyRing(F, ["x", "y", "z"])
    for _ in range(10):
        gens = [rand_poly(rng, R) for _ in range(3)]
        if all(not g for g in gens):
            continue
        gb1 = groebner_basis(gens)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        gb2 = groebner_basis(shuffled)
        assert gb1 == gb2


def test_buchberger_certificate_and_reducedness():
    # every S-polynomial of the output must reduce to zero, and no term of
    # any element may be divisible by another element's leading monomial
    rng = random.Random(5)
    F = GF(7)
    R = PolyRing(F, ["x", "y"])
    for _ in range(30):
        gens = [rand_poly(rng, R) for _ in range(2)]
        if all(not g for g in gens):
            continue
        gb = groebner_basis(gens)
        polys = list(gb)
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                assert not gb.normal_form(s_polynomial(polys[i], polys[j]))
        from a1deg.polynomials import mono_divides

        lms = gb.leading_monomials()
        for i, g in enumerate(polys):
            assert g.leading_coefficient() == 1
            for mono in g.terms:
                for j, lm in enumerate(lms):
                    if i != j:
                        assert not mono_divides(lm, mono)
        # membership certificate: random combinations reduce to zero
        h = sum((rand_poly(rng, R, 2, 2) * g for g in gens), R.zero)
        assert gb.contains(h)


def test_normal_form_is_linear_and_idempotent():
    rng = random.Random(8)
    F = GF(11)
    R = PolyRing(F, ["x", "y"])
    gens = [R.parse("x^2 + y"), R.parse("y^2 - 3")]
    gb = groebner_basis(gens)
    for _ in range(25):
        a, b = rand_poly(rng, R), rand_poly(rng, R)
        c = rng.randrange(1, 11)
        assert gb.normal_form(a + b.scale(c)) == gb.normal_form(a) + gb.normal_form(
            b
        ).scale(c)
        assert gb.normal_form(gb.normal_form(a)) == gb.normal_form(a)


def test_membership_independent_of_order():
    rng = random.Random(4)
    F = GF(13)
    R = PolyRing(F, ["x", "y"])
    gens = [R.parse("x^2*y - 1"), R.parse("x*y^2 - x")]
    drl = groebner_basis(gens, DEGREVLEX)
    lex = groebner_basis(gens, LEX)
    for _ in range(25):
        f = rand_poly(rng, R)
        mixed = f + rand_poly(rng, R, 2, 2) * gens[0] + rand_poly(rng, R, 2, 2) * gens[1]
        assert drl.contains(mixed) == drl.contains(f)
        assert drl.contains(mixed) == lex.contains(mixed)


def test_ideal_intersection():
    R = PolyRing(QQ, ["x", "y"])
    meet = ideal_intersection([R.parse("x")], [R.parse("y")])
    assert list(meet) == [R.parse("x*y")]
    meet = ideal_intersection([R.parse("x - 1")], [R.parse("x + 1")])
    assert list(meet) == [R.parse("x^2 - 1")]


def test_ideal_quotient():
    R = PolyRing(QQ, ["x", "y"])
    q = ideal_quotient([R.parse("x^2*y"), R.parse("x*y^2")], R.parse("x*y"))
    assert list(q) == [R.parse("y"), R.parse("x")]
    # (I : 1) = I
    gb = groebner_basis([R.parse("x^2 - y")])
    assert ideal_quotient(gb, R.one) == gb
    with pytest.raises(ZeroInputError):
        ideal_quotient(gb, R.zero)


def test_saturation_strips_a_component():
    R = PolyRing(QQ, ["x", "y"])
    # I = (x^2 * (x - 1), y): a fat point at the origin plus a simple point
    gens = [R.parse("x^2*(x-1)"), R.parse("y")]
    sat = saturation(gens, [R.var("x"), R.var("y")])
    assert list(sat) == [R.parse("y"), R.parse("x - 1")] or list(sat) == [
        R.parse("x - 1"),
        R.parse("y"),
    ]
    assert saturation(sat, [R.var("x"), R.var("y")]) == sat


def test_primary_component_splits_dimensions():
    # the running two-variable example: a length-4 component at the origin
    # and a length-2 component at (1, +-sqrt(1/2))
    R = PolyRing(QQ, ["x1", "x2"])
    gens = [R.parse("(x1 - 1)*x1*x2"), R.parse("x1^2 - 2*x2^2")]
    total = groebner_basis(gens)
    assert total.quotient_dimension() == 6

    origin = primary_component(gens, [R.var("x1"), R.var("x2")])
    other = primary_component(gens, [R.parse("x1 - 1"), R.parse("x2^2 - 1/2")])
    assert origin.quotient_dimension() == 4
    assert other.quotient_dimension() == 2
    # the two components intersect back to the whole ideal
    assert ideal_intersection(origin, other) == total
    # and the saturation away from the origin is exactly the other component
    assert saturation(gens, [R.var("x1"), R.var("x2")]) == other


def test_primary_component_when_ideal_is_local():
    R = PolyRing(QQ, ["x"])
    gens = [R.parse("x^3")]
    comp = primary_component(gens, [R.var("x")])
    assert comp == groebner_basis(gens)


def test_quotient_by_ideal():
    R = PolyRing(QQ, ["x", "y"])
    gens = [R.parse("x^2"), R.parse("x*y")]
    q = ideal_quotient_by_ideal(gens, [R.var("x"), R.var("y")])
    # (I : (x, y)) = (x) here
    assert list(q) == [R.parse("x")]
    with pytest.raises(ZeroInputError):
        ideal_quotient_by_ideal(gens, [R.zero])
