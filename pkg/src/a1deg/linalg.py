"""Small dense exact matrices: products, inverses, congruence diagonalization.

Matrices are lists of rows of ``Scalar``; everything here is O(n^3) Gaussian
elimination, which is plenty for the Gram and base-change matrices that show
up (a few dozen rows at most).
"""

from __future__ import annotations

from typing import Sequence

from .errors import DegenerateFormError
from .fields import Field, Scalar

Matrix = list[list[Scalar]]


def identity_matrix(field: Field, n: int) -> Matrix:
    return [
        [field.one if i == j else field.zero for j in range(n)] for i in range(n)
    ]


def transpose(a: Sequence[Sequence[Scalar]]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def scalar_det(a: Sequence[Sequence[Scalar]], field: Field) -> Scalar:
    n = len(a)
    if n == 0:
        return field.one
    work = [list(row) for row in a]
    det = field.one
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if work[i][k]:
                pivot = i
                break
        if pivot is None:
            return field.zero
        if pivot != k:
            work[k], work[pivot] = work[pivot], work[k]
            det = -det
        det = det * work[k][k]
        inv = work[k][k].inverse()
        for i in range(k + 1, n):
            if not work[i][k]:
                continue
            c = work[i][k] * inv
            for j in range(k, n):
                work[i][j] = work[i][j] - c * work[k][j]
    return det


def mat_inverse(a: Sequence[Sequence[Scalar]], field: Field) -> Matrix:
    n = len(a)
    work = [list(row) + irow for row, irow in zip(a, identity_matrix(field, n))]
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if work[i][k]:
                pivot = i
                break
        if pivot is None:
            raise DegenerateFormError("matrix is singular")
        work[k], work[pivot] = work[pivot], work[k]
        inv = work[k][k].inverse()
        work[k] = [x * inv for x in work[k]]
        for i in range(n):
            if i != k and work[i][k]:
                c = work[i][k]
                work[i] = [x - c * y for x, y in zip(work[i], work[k])]
    return [row[n:] for row in work]


def symmetric_diagonalize(
    gram: Sequence[Sequence[Scalar]], field: Field
) -> tuple[list[Scalar], Matrix]:
    """Congruence-diagonalize a symmetric matrix over a field of char != 2.

    Returns (diagonal entries, S) with S^T * gram * S diagonal.  Zero rows
    stay as zero diagonal entries; the caller decides whether that is an
    error.
    """
    n = len(gram)
    m = [list(row) for row in gram]
    s = identity_matrix(field, n)

    def add_col(dst: int, src: int, c: Scalar) -> None:
        # column op on m and s, plus the mirrored row op on m
        for i in range(n):
            m[i][dst] = m[i][dst] + c * m[i][src]
        for j in range(n):
            m[dst][j] = m[dst][j] + c * m[src][j]
        for i in range(n):
            s[i][dst] = s[i][dst] + c * s[i][src]

    def swap(a: int, b: int) -> None:
        for i in range(n):
            m[i][a], m[i][b] = m[i][b], m[i][a]
        m[a], m[b] = m[b], m[a]
        for i in range(n):
            s[i][a], s[i][b] = s[i][b], s[i][a]

    for k in range(n):
        if not m[k][k]:
            moved = False
            for l in range(k + 1, n):
                if m[l][l]:
                    swap(k, l)
                    moved = True
                    break
            if not moved:
                for l in range(k + 1, n):
                    if m[k][l]:
                        # diagonal is zero there too, so this lands 2*m[k][l]
                        add_col(k, l, field.one)
                        moved = True
                        break
            if not moved:
                continue  # the whole active row is zero
        pivot = m[k][k]
        inv = pivot.inverse()
        for i in range(k + 1, n):
            if m[k][i]:
                add_col(i, k, -(m[k][i] * inv))
    return [m[i][i] for i in range(n)], s
