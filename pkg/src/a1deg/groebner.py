"""Groebner bases and the ideal operations the degree computations need.

Buchberger's algorithm with the coprimality and chain criteria and normal
selection (smallest lcm first).  Output bases are reduced (auto-reduced, monic
leading coefficients, sorted by leading monomial), hence unique for a given
ideal and order, which keeps every downstream computation deterministic.

Ideal quotient and saturation go through an elimination variable appended
after the ring's own variables, ordered by the ``elimlast`` block order, using
I cap J = (u*I + (1-u)*J) cap k[x].
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence, Union

from .errors import NotZeroDimensionalError, RingMismatchError, ZeroInputError
from .polynomials import (
    DEGREVLEX,
    ELIM_LAST,
    MonomialOrder,
    Poly,
    PolyRing,
    fresh_name,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_quot,
)

GensLike = Union["GroebnerBasis", Sequence[Poly]]


def normal_form(
    f: Poly, basis: Iterable[Poly], order: MonomialOrder = DEGREVLEX
) -> Poly:
    """Remainder of f under division by basis (unique when basis is a GB)."""
    k = f.ring.field
    divisors = [
        (g.leading_monomial(order), g.terms[g.leading_monomial(order)], g.terms)
        for g in basis
        if g
    ]
    work = dict(f.terms)
    rem: dict = {}
    while work:
        lm = max(work, key=order.key)
        lc = work.pop(lm)
        for g_lm, g_lc, g_terms in divisors:
            if mono_divides(g_lm, lm):
                q_mono = mono_quot(lm, g_lm)
                q_c = k.div(lc, g_lc)
                for m2, c2 in g_terms.items():
                    if m2 == g_lm:
                        continue
                    mono = mono_mul(q_mono, m2)
                    c = k.mul(q_c, c2)
                    cur = work.get(mono)
                    s = k.sub(cur, c) if cur is not None else k.neg(c)
                    if k.is_zero(s):
                        if cur is not None:
                            del work[mono]
                    else:
                        work[mono] = s
                break
        else:
            rem[lm] = lc
    return Poly(f.ring, rem)


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder = DEGREVLEX) -> Poly:
    k = f.ring.field
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    l = mono_lcm(lf, lg)
    a = Poly(f.ring, {mono_quot(l, lf): k.inv(f.terms[lf])})
    b = Poly(f.ring, {mono_quot(l, lg): k.inv(g.terms[lg])})
    return a * f - b * g


class GroebnerBasis:
    """A reduced Groebner basis together with its ring and order."""

    __slots__ = ("ring", "order", "polys")

    def __init__(self, ring: PolyRing, order: MonomialOrder, polys: Sequence[Poly]):
        self.ring = ring
        self.order = order
        self.polys = tuple(polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and other.ring == self.ring
            and other.order == self.order
            and other.polys == self.polys
        )

    def __repr__(self) -> str:
        return f"GroebnerBasis({list(self.polys)})"

    def normal_form(self, f: Poly) -> Poly:
        return normal_form(f, self.polys, self.order)

    def contains(self, f: Poly) -> bool:
        return not self.normal_form(f)

    def is_whole_ring(self) -> bool:
        return any(g.is_constant() and g for g in self.polys)

    def leading_monomials(self) -> list[tuple]:
        return [g.leading_monomial(self.order) for g in self.polys]

    def is_zero_dimensional(self) -> bool:
        """Whether the quotient is a finite-dimensional vector space."""
        if self.is_whole_ring():
            return True
        n = self.ring.nvars
        seen = [False] * n
        for lm in self.leading_monomials():
            nz = [i for i, e in enumerate(lm) if e]
            if len(nz) == 1:
                seen[nz[0]] = True
        return all(seen)

    def quotient_basis(self) -> list[tuple]:
        """Standard monomials of R/I, sorted ascending in the basis order."""
        if self.is_whole_ring():
            return []
        n = self.ring.nvars
        lms = self.leading_monomials()
        bounds = [None] * n
        for lm in lms:
            nz = [i for i, e in enumerate(lm) if e]
            if len(nz) == 1:
                i = nz[0]
                if bounds[i] is None or lm[i] < bounds[i]:
                    bounds[i] = lm[i]
        if any(b is None for b in bounds):
            raise NotZeroDimensionalError(
                "the ideal does not cut out finitely many points"
            )
        out = [
            mono
            for mono in product(*(range(b) for b in bounds))
            if not any(mono_divides(lm, mono) for lm in lms)
        ]
        out.sort(key=self.order.key)
        return out

    def quotient_dimension(self) -> int:
        return len(self.quotient_basis())


def _gens(gens: GensLike) -> list[Poly]:
    if isinstance(gens, GroebnerBasis):
        return list(gens.polys)
    return list(gens)


def groebner_basis(gens: GensLike, order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal the generators span."""
    gens = _gens(gens)
    if not gens:
        raise ZeroInputError("no generators")
    ring = gens[0].ring
    basis: list[Poly] = []
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators live in different rings")
        if g and g.monic(order) not in basis:
            basis.append(g.monic(order))
    if not basis:
        return GroebnerBasis(ring, order, ())

    lms = [g.leading_monomial(order) for g in basis]
    pairs: dict[tuple[int, int], tuple] = {}

    def add_pairs(j: int) -> None:
        for i in range(j):
            pairs[(i, j)] = mono_lcm(lms[i], lms[j])

    for j in range(len(basis)):
        add_pairs(j)

    while pairs:
        (i, j) = min(pairs, key=lambda ij: (order.key(pairs[ij]), ij))
        lcm_ij = pairs.pop((i, j))
        # coprime leading monomials: the S-polynomial reduces to zero
        if lcm_ij == mono_mul(lms[i], lms[j]):
            continue
        # chain criterion: some k divides the lcm and both pairs are settled
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not mono_divides(lms[k], lcm_ij):
                continue
            a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                skip = True
                break
        if skip:
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h:
            basis.append(h.monic(order))
            lms.append(h.leading_monomial(order))
            add_pairs(len(basis) - 1)

    # minimalize: drop elements whose leading monomial another one divides
    keep: list[Poly] = []
    keep_lms: list[tuple] = []
    for idx in sorted(range(len(basis)), key=lambda i: order.key(lms[i])):
        lm = lms[idx]
        if any(mono_divides(other, lm) for other in keep_lms):
            continue
        keep.append(basis[idx])
        keep_lms.append(lm)
    # tail-reduce each element against the others
    reduced = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1 :]
        reduced.append(normal_form(g, others, order).monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return GroebnerBasis(ring, order, reduced)


# ---------------------------------------------------------------------------
# ideal operations


def _lift(ring: PolyRing, big: PolyRing, f: Poly) -> Poly:
    images = {n: big.var(n) for n in ring.names}
    return f.substitute(images, ring=big)


def ideal_intersection(a: GensLike, b: GensLike) -> GroebnerBasis:
    """Reduced degrevlex basis of the intersection of two ideals."""
    a, b = _gens(a), _gens(b)
    ring = a[0].ring
    aux = fresh_name(ring.names, "u")
    big = PolyRing(ring.field, ring.names + (aux,))
    u = big.var(aux)
    lifted = [u * _lift(ring, big, f) for f in a if f]
    lifted += [(1 - u) * _lift(ring, big, g) for g in b if g]
    if not lifted:
        return GroebnerBasis(ring, DEGREVLEX, ())
    elim = groebner_basis(lifted, ELIM_LAST)
    down = []
    for g in elim:
        if all(m[-1] == 0 for m in g.terms):
            down.append(Poly(ring, {m[:-1]: c for m, c in g.terms.items()}))
    if not down:
        return GroebnerBasis(ring, DEGREVLEX, ())
    return groebner_basis(down, DEGREVLEX)


def ideal_quotient(gens: GensLike, g: Poly) -> GroebnerBasis:
    """Reduced basis of (I : g) = (I cap (g)) / g."""
    gens = _gens(gens)
    if not g:
        raise ZeroInputError("ideal quotient by zero")
    meet = ideal_intersection(gens, [g])
    if not len(meet):
        return meet
    return groebner_basis([f.exact_div(g) for f in meet], DEGREVLEX)


def ideal_quotient_by_ideal(gens: GensLike, divisors: GensLike) -> GroebnerBasis:
    """(I : J) for J spanned by the divisors: the meet of the (I : g)."""
    out = None
    for g in _gens(divisors):
        if not g:
            continue
        q = ideal_quotient(gens, g)
        out = q if out is None else ideal_intersection(out, q)
    if out is None:
        raise ZeroInputError("ideal quotient by the zero ideal")
    return out


def saturation(gens: GensLike, j_gens: GensLike) -> GroebnerBasis:
    """(I : J^infinity), stabilized by reduced-basis equality."""
    cur = groebner_basis(_gens(gens), DEGREVLEX)
    while True:
        nxt = ideal_quotient_by_ideal(cur, j_gens)
        if nxt == cur:
            return cur
        cur = nxt


def primary_component(gens: GensLike, point_gens: GensLike) -> GroebnerBasis:
    """The primary component of a zero-dimensional I at the maximal ideal m.

    Computed as I : (I : m^infinity); the saturation strips the component at
    m, and quotienting I by what is left isolates it again.
    """
    away = saturation(gens, point_gens)
    if away.is_whole_ring():
        # every zero of I already lies at m
        return groebner_basis(gens, DEGREVLEX)
    return ideal_quotient_by_ideal(gens, away)
