"""Exact linear algebra over the rationals.

Matrices are lists of rows; entries are ``int`` or ``fractions.Fraction``.
Every routine clears denominators row by row and hands the integer matrix
to the fraction-free kernels in :mod:`takiff_lab._kernels`.  No floating
point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from ._kernels import bareiss_rank, bareiss_rref

Vector = list
Matrix = list


def norm(q):
    """Return ``q`` as an ``int`` when it is integral, else as a Fraction."""
    if type(q) is Fraction and q.denominator == 1:
        return q.numerator
    return q


def to_rational(value) -> Fraction | int:
    """Parse ``int``, ``Fraction`` or strings such as ``"-3/4"``."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return norm(value)
    return norm(Fraction(value))


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _int_row(row: Sequence) -> list[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def integer_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    return [_int_row(r) for r in rows]


def primitive(vec: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector (first nonzero > 0)."""
    v = _int_row(vec)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return v
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return [x // g for x in v]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([norm(sum((x * col[k] for k, x in nz), 0)) if nz else 0 for col in bt])
    return out


def matvec(a: Matrix, v: Sequence) -> Vector:
    nz = [(k, x) for k, x in enumerate(v) if x]
    return [norm(sum((row[k] * x for k, x in nz), 0)) for row in a]


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[norm(x - y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[norm(x + y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(c, a: Matrix) -> Matrix:
    return [[norm(c * x) for x in row] for row in a]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return matsub(matmul(a, b), matmul(b, a))


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def trace(a: Matrix):
    return norm(sum((a[i][i] for i in range(len(a))), 0))


def flatten(a: Matrix) -> Vector:
    return [x for row in a for x in row]


def unflatten(v: Sequence, n: int) -> Matrix:
    return [list(v[i * n:(i + 1) * n]) for i in range(n)]


def rank(rows: Iterable[Sequence]) -> int:
    """Exact rank of a rational matrix."""
    return bareiss_rank(integer_rows(rows))


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over the rationals: ``(nonzero rows, pivots)``."""
    red, pivots, d = bareiss_rref(integer_rows(rows), ncols)
    out = [[norm(Fraction(x, d)) for x in row] for row in red]
    return out, pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[int]]:
    """Basis of ``{x : A x = 0}`` as primitive integer vectors.

    The basis is ordered by free column and is the one read off from the
    reduced row echelon form, so it is deterministic.
    """
    red, pivots, d = bareiss_rref(integer_rows(rows), ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = d
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(primitive(v))
    return basis


def row_basis(vectors: Sequence[Sequence], ncols: int) -> list[list]:
    """A basis (RREF rows) of the span of ``vectors``."""
    if not vectors:
        return []
    red, _ = rref(vectors, ncols)
    return red


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def det(a: Matrix):
    """Determinant by fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    den = 1
    rows = []
    for r in m:
        d = 1
        for x in r:
            if isinstance(x, Fraction):
                d = lcm(d, x.denominator)
        den *= d
        rows.append([int(x * d) for x in r])
    sign = 1
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        p = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (p * rows[i][j] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = p
    return norm(Fraction(sign * rows[n - 1][n - 1], den))


def intersection_dim(a: Sequence[Sequence], b: Sequence[Sequence], ambient: int) -> int:
    """``dim(span A ∩ span B) = dim A + dim B - rank[A|B]``."""
    da = rank(a) if a else 0
    db = rank(b) if b else 0
    both = list(a) + list(b)
    return da + db - (rank(both) if both else 0)


class Coordinates:
    """Coordinates with respect to a fixed linearly independent family.

    ``coords(v)`` returns ``c`` with ``v = sum(c[i] * basis[i])``.  It only
    reads the pivot positions of ``v`` and so works for vectors whose
    entries live in any ring containing the rationals (e.g. polynomials).
    Use :meth:`coords_checked` when membership is not guaranteed.
    """

    def __init__(self, basis: Sequence[Sequence], ambient: int):
        self.basis = [list(b) for b in basis]
        self.ambient = ambient
        k = len(self.basis)
        if k == 0:
            self.pivots: list[int] = []
            self._minv: Matrix = []
            return
        red, pivots = rref(self.basis, ambient)
        if len(pivots) != k:
            raise ValueError("basis vectors are linearly dependent")
        self.pivots = pivots
        sub = [[b[p] for p in pivots] for b in self.basis]
        # v[P] = c^T sub  =>  c^T = v[P] sub^{-1}
        self._minv = inverse(sub)

    def coords(self, v: Sequence) -> list:
        k = len(self.basis)
        vals = [v[p] for p in self.pivots]
        out = []
        for i in range(k):
            acc = 0
            for p in range(k):
                m = self._minv[p][i]
                if m and vals[p]:
                    acc = acc + vals[p] * m
            out.append(norm(acc) if isinstance(acc, (int, Fraction)) else acc)
        return out

    def coords_checked(self, v: Sequence) -> list | None:
        c = self.coords(v)
        recon = [0] * self.ambient
        for ci, b in zip(c, self.basis):
            if ci:
                for j, x in enumerate(b):
                    if x:
                        recon[j] += ci * x
        if any(norm(r - x) != 0 for r, x in zip(recon, v)):
            return None
        return c
