"""Grothendieck-Witt classes of nondegenerate symmetric bilinear forms.

A class is stored as ``h`` copies of the hyperbolic plane H plus a tuple of
rank-one forms <u_1>, ..., <u_r> whose entries are canonical square-class
representatives.  Simplification folds every pair <u>, <v> with -uv a square
into a copy of H; the surviving multiset of square classes is independent of
the pairing order, so the stored shape is canonical and ``==`` is structural.

Equality of the underlying forms is decided by field-specific invariants:
rank and discriminant over a finite field; rank, signature, discriminant and
Hasse invariants (via Hilbert symbols) over the rationals.  Over rational
function fields only the canonical shape is compared, which is sound but may
miss exotic equalities; every class this package produces is already in
canonical shape, so that is enough in practice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DegenerateFormError,
    FieldMismatchError,
    UnsupportedFieldError,
    ZeroInputError,
)
from .fields import (
    Field,
    FunctionField,
    PrimeField,
    Rationals,
    Scalar,
    factorize,
    is_square,
    signature_sign,
    square_class,
)
from .linalg import symmetric_diagonalize


@dataclass(frozen=True)
class GWClass:
    field: Field
    hyperbolic: int
    units: tuple[Scalar, ...]

    @classmethod
    def of(
        cls, field: Field, hyperbolic: int = 0, units: Iterable[object] = ()
    ) -> "GWClass":
        """Build a class from any diagonal entries, normalizing as needed."""
        entries = [field.scalar(u) for u in units]
        base = simplify(field, entries)
        return cls(field, base.hyperbolic + hyperbolic, base.units)

    @property
    def rank(self) -> int:
        return 2 * self.hyperbolic + len(self.units)

    def disc(self) -> Scalar:
        """Square class of the discriminant (-1)^h * u_1 * ... * u_r."""
        acc = self.field.one
        if self.hyperbolic % 2:
            acc = -acc
        for u in self.units:
            acc = acc * u
        return square_class(acc)

    def signature(self) -> int | None:
        """Signature, when the field admits a real embedding we track."""
        try:
            signature_sign(self.field.one)
        except UnsupportedFieldError:
            return None
        return sum(signature_sign(u) for u in self.units)

    def diagonal(self) -> list[Scalar]:
        """A diagonal Gram representative: h blocks <1,-1> then the units."""
        out: list[Scalar] = []
        for _ in range(self.hyperbolic):
            out.append(self.field.one)
            out.append(-self.field.one)
        out.extend(self.units)
        return out

    def __add__(self, other: "GWClass") -> "GWClass":
        _same_field(self, other)
        base = simplify(self.field, list(self.units) + list(other.units))
        return GWClass(
            self.field,
            self.hyperbolic + other.hyperbolic + base.hyperbolic,
            base.units,
        )

    def __mul__(self, other: "GWClass") -> "GWClass":
        _same_field(self, other)
        h = (
            2 * self.hyperbolic * other.hyperbolic
            + self.hyperbolic * len(other.units)
            + other.hyperbolic * len(self.units)
        )
        prods = [u * v for u in self.units for v in other.units]
        base = simplify(self.field, prods)
        return GWClass(self.field, h + base.hyperbolic, base.units)

    def __rmul__(self, other: int) -> "GWClass":
        if not isinstance(other, int) or other < 0:
            return NotImplemented
        out = GWClass(self.field, 0, ())
        for _ in range(other):
            out = out + self
        return out

    def __str__(self) -> str:
        return render_text(self.hyperbolic, [str(u) for u in self.units])

    def to_json(self) -> dict:
        return {
            "hyperbolic": self.hyperbolic,
            "units": [str(u) for u in self.units],
            "rank": self.rank,
            "disc": str(self.disc()),
            "signature": self.signature(),
        }


def render_text(hyperbolic: int, units: Sequence[str]) -> str:
    parts = []
    if hyperbolic == 1:
        parts.append("H")
    elif hyperbolic:
        parts.append(f"{hyperbolic}H")
    if units:
        parts.append("<" + ",".join(units) + ">")
    return " + ".join(parts) if parts else "0"


def _same_field(a: GWClass, b: GWClass) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"classes over {a.field} and {b.field}")


def simplify(field: Field, entries: Sequence[Scalar]) -> GWClass:
    """Fold hyperbolic pairs out of a diagonal form and canonicalize the rest.

    <u> + <v> is hyperbolic exactly when -uv is a square, and the multiset of
    surviving square classes does not depend on which eligible pair is folded
    first, so a greedy sweep gives the canonical answer.
    """
    pool: list[Scalar] = []
    for e in entries:
        s = field.scalar(e)
        if not s:
            raise ZeroInputError("zero diagonal entry in a bilinear form")
        pool.append(s)
    pool.sort(key=lambda s: field.sort_key(s.value))
    used = [False] * len(pool)
    h = 0
    for i in range(len(pool)):
        if used[i]:
            continue
        for j in range(i + 1, len(pool)):
            if used[j]:
                continue
            ok, _ = is_square(-(pool[i] * pool[j]))
            if ok:
                used[i] = used[j] = True
                h += 1
                break
    survivors = [square_class(pool[i]) for i in range(len(pool)) if not used[i]]
    survivors.sort(key=lambda s: field.sort_key(s.value))
    return GWClass(field, h, tuple(survivors))


def diagonalize(gram: Sequence[Sequence[Scalar]], field: Field) -> list[Scalar]:
    """Diagonal entries of a congruent diagonal form; the form must be
    nondegenerate."""
    n = len(gram)
    for row in gram:
        if len(row) != n:
            raise DegenerateFormError("Gram matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i][j] != gram[j][i]:
                raise DegenerateFormError("Gram matrix is not symmetric")
    diag, _ = symmetric_diagonalize(gram, field)
    if any(not d for d in diag):
        raise DegenerateFormError("bilinear form is degenerate")
    return diag


def class_of_gram(field: Field, gram: Sequence[Sequence[Scalar]]) -> GWClass:
    if not gram:
        return GWClass(field, 0, ())
    return simplify(field, diagonalize(gram, field))


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroInputError(f"{a} is divisible by {p}")
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def hilbert_symbol(a: int, b: int, p: int) -> int:
    """Hilbert symbol (a, b)_p over the p-adics, for nonzero integers."""
    if a == 0 or b == 0:
        raise ZeroInputError("Hilbert symbol needs nonzero arguments")
    if p == 2:
        alpha, u = _split(a, 2)
        beta, v = _split(b, 2)
        eps_u, eps_v = (u - 1) // 2, (v - 1) // 2
        omega_u, omega_v = (u * u - 1) // 8, (v * v - 1) // 8
        e = eps_u * eps_v + alpha * omega_v + beta * omega_u
        return -1 if e % 2 else 1
    alpha, u = _split(a, p)
    beta, v = _split(b, p)
    sym = 1
    if alpha % 2 and beta % 2 and (p - 1) // 2 % 2:
        sym = -sym
    if beta % 2:
        sym *= legendre(u, p)
    if alpha % 2:
        sym *= legendre(v, p)
    return sym


def _split(a: int, p: int) -> tuple[int, int]:
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v, a


def hasse_invariant(diag: Sequence[int], p: int) -> int:
    """Product of Hilbert symbols (d_i, d_j)_p over i < j."""
    out = 1
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            out *= hilbert_symbol(diag[i], diag[j], p)
    return out


def _rational_diagonal_ints(c: GWClass) -> list[int]:
    out = []
    for s in c.diagonal():
        f = s.value
        assert isinstance(f, Fraction)
        out.append(f.numerator * f.denominator)
    return out


def _relevant_primes(entries: Iterable[int]) -> list[int]:
    primes = {2}
    for e in entries:
        primes.update(factorize(abs(e)))
    return sorted(primes)


def equals(a: GWClass, b: GWClass) -> bool:
    """Whether two classes are equal as forms, not just structurally."""
    _same_field(a, b)
    if a.rank != b.rank:
        return False
    if a.rank == 0:
        return True
    field = a.field
    if isinstance(field, PrimeField):
        return a.disc() == b.disc()
    if isinstance(field, Rationals):
        if a.signature() != b.signature() or a.disc() != b.disc():
            return False
        da = _rational_diagonal_ints(a)
        db = _rational_diagonal_ints(b)
        for p in _relevant_primes(da + db):
            if hasse_invariant(da, p) != hasse_invariant(db, p):
                return False
        return True
    if isinstance(field, FunctionField):
        return a.hyperbolic == b.hyperbolic and a.units == b.units
    raise UnsupportedFieldError(f"no equality test over {field}")
