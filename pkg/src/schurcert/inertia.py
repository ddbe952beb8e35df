"""Exact inertia of symmetric rational matrices by congruence reduction.

Sylvester's law of inertia makes the triple (n+, n0, n-) invariant under
congruence, so pivoting with exact Schur complements — including the split
of an off-diagonal pivot into a hyperbolic (+1, -1) pair — computes it with
no eigenvalue computation and no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ValidationError

Matrix = Sequence[Sequence[Fraction]]


@dataclass(frozen=True)
class InertiaReport:
    """Signature data of a symmetric pairing, plus optional verdict fields.

    ``hl_flag`` is nondegeneracy (no zero eigenvalues).  ``hr_flag`` and
    ``positivity_scalar`` are filled by callers that also check the defining
    positivity integral; they stay ``None`` for a bare inertia computation.
    """

    n_plus: int
    n_zero: int
    n_minus: int
    det_sign: int
    hl_flag: bool
    hr_flag: bool | None = None
    positivity_scalar: Fraction | None = None

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)

    @property
    def dimension(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    def __str__(self) -> str:
        return f"({self.n_plus},{self.n_zero},{self.n_minus})"


def _to_rows(matrix: Matrix) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValidationError("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValidationError(
                    f"matrix is not symmetric at ({i},{j}): "
                    f"{rows[i][j]} != {rows[j][i]}"
                )
    return rows


def inertia_triple(matrix: Matrix) -> tuple[int, int, int]:
    """(n+, n0, n-) of a symmetric matrix, by exact congruence reduction."""
    m = _to_rows(matrix)
    live = list(range(len(m)))
    n_plus = n_minus = 0
    while live:
        pivot = next((j for j in live if m[j][j] != 0), None)
        if pivot is not None:
            d = m[pivot][pivot]
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            live.remove(pivot)
            col = {r: m[r][pivot] for r in live}
            for r in live:
                cr = col[r]
                if cr == 0:
                    continue
                for s in live:
                    m[r][s] -= cr * col[s] / d
            continue
        off = next(
            ((j, k) for j in live for k in live if k > j and m[j][k] != 0), None
        )
        if off is None:
            break  # remaining block is zero
        j, k = off
        a = m[j][k]
        n_plus += 1
        n_minus += 1
        live.remove(j)
        live.remove(k)
        colj = {r: m[r][j] for r in live}
        colk = {r: m[r][k] for r in live}
        for r in live:
            for s in live:
                m[r][s] -= (colj[r] * colk[s] + colk[r] * colj[s]) / a
    return n_plus, len(m) - n_plus - n_minus, n_minus


def inertia(matrix: Matrix) -> InertiaReport:
    """Full signature report; non-symmetric input is rejected."""
    p, z, m = inertia_triple(matrix)
    det_sign = 0 if z > 0 else (1 if m % 2 == 0 else -1)
    return InertiaReport(
        n_plus=p, n_zero=z, n_minus=m, det_sign=det_sign, hl_flag=(z == 0)
    )


def quadratic_value(matrix: Matrix, v: Sequence[Fraction], w=None) -> Fraction:
    """Q(v, w) for the symmetric matrix Q; ``Q(v, v)`` when w is omitted."""
    if w is None:
        w = v
    n = len(matrix)
    if len(v) != n or len(w) != n:
        raise ValidationError("vector length does not match the matrix")
    total = Fraction(0)
    for i in range(n):
        vi = Fraction(v[i])
        if vi == 0:
            continue
        row = matrix[i]
        total += vi * sum(Fraction(row[j]) * Fraction(w[j]) for j in range(n))
    return total


def congruent(matrix: Matrix, p: Matrix) -> list[list[Fraction]]:
    """P^T M P, exactly."""
    n = len(matrix)
    if len(p) != n or any(len(row) != len(p[0]) for row in p):
        raise ValidationError("incompatible congruence matrix")
    k = len(p[0])
    mp = [
        [sum(Fraction(matrix[i][j]) * Fraction(p[j][c]) for j in range(n)) for c in range(k)]
        for i in range(n)
    ]
    return [
        [sum(Fraction(p[j][r]) * mp[j][c] for j in range(n)) for c in range(k)]
        for r in range(k)
    ]


def kernel_basis(phi: Sequence[Fraction]) -> list[list[Fraction]]:
    """Basis of the kernel of a nonzero covector, as column vectors."""
    n = len(phi)
    phi = [Fraction(x) for x in phi]
    pivot = next((i for i, x in enumerate(phi) if x != 0), None)
    if pivot is None:
        raise ValidationError("covector is zero; kernel is everything")
    basis = []
    for i in range(n):
        if i == pivot:
            continue
        vec = [Fraction(0)] * n
        vec[i] = Fraction(1)
        vec[pivot] = -phi[i] / phi[pivot]
        basis.append(vec)
    return basis


def restrict_to_kernel(matrix: Matrix, phi: Sequence[Fraction]) -> list[list[Fraction]]:
    """Gram matrix of Q restricted to ker(phi), in the standard kernel basis."""
    basis = kernel_basis(phi)
    cols = [[basis[c][r] for c in range(len(basis))] for r in range(len(phi))]
    return congruent(matrix, cols)


def rational_det(matrix: Matrix) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValidationError("matrix is not square")
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = rows[r][col] / pivot
            if factor == 0:
                continue
            for c in range(col, n):
                rows[r][c] -= factor * rows[col][c]
    return det


def matrix_rank(matrix: Matrix) -> int:
    """Exact rank by row reduction (matrix need not be square)."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    n_cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(n_cols):
        pr = next((r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None)
        if pr is None:
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        pivot = rows[pivot_row][col]
        for r in range(pivot_row + 1, len(rows)):
            factor = rows[r][col] / pivot
            if factor:
                for c in range(col, n_cols):
                    rows[r][c] -= factor * rows[pivot_row][c]
        pivot_row += 1
        rank += 1
    return rank
