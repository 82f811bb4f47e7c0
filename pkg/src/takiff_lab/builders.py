"""Factories for the algebras and modules used throughout the package.

Classical algebras come with matrix models over Q: ``sl`` with the usual
matrix units, ``so`` with the split symmetric form (ones on the
antidiagonal) and ``sp`` with ``J = [[0, I], [-I, 0]]``, so diagonal
matrices always give a rational Cartan subalgebra.  On top of these sit
semi-direct products, generalized Takiff algebras, module Takiffization
and Z2-contractions coming from involutions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import linalg
from .lie import (
    BilinearForm,
    LieAlgebra,
    Representation,
    SubspaceBasis,
    adjoint_rep,
    bracket,
    check_homomorphism,
    direct_sum,
    dual_rep,
    matrix_algebra,
    subalgebra,
    trivial_rep,
)
from .linalg import Coordinates, norm

MAX_RANK = 12


class UnsupportedAlgebra(ValueError):
    """Unknown descriptor, type tag, rank or involution pair."""


class RepresentationError(ValueError):
    """The supplied action matrices do not define a representation."""


def unit(n: int, i: int, j: int) -> list[list[int]]:
    m = linalg.zeros(n, n)
    m[i][j] = 1
    return m


def antidiagonal(n: int) -> list[list[int]]:
    return [[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)]


def standard_symplectic(n: int) -> list[list[int]]:
    """``J = [[0, I_n], [-I_n, 0]]``."""
    j = linalg.zeros(2 * n, 2 * n)
    for i in range(n):
        j[i][n + i] = 1
        j[n + i][i] = -1
    return j


# -- classical algebras ------------------------------------------------------


@dataclass
class ClassicalAlgebra:
    base: LieAlgebra
    type_tag: str
    rank: int
    matrices: list  # basis as N x N matrices
    form: BilinearForm | None = None
    _catalog: dict = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        """Dimension of the defining module."""
        return len(self.matrices[0])

    @property
    def rep_names(self) -> tuple[str, ...]:
        extra = {"B": ("sym2_traceless",), "D": ("sym2_traceless",), "C": ("wedge2_reduced",)}
        return ("defining", "adjoint") + extra.get(self.type_tag, ())

    @property
    def rep_catalog(self) -> dict:
        """All catalog representations (built on first access)."""
        return {name: self.rep(name) for name in self.rep_names}

    def rep(self, name: str) -> Representation:
        if name not in self._catalog:
            if name not in self.rep_names:
                raise UnsupportedAlgebra(f"no representation {name!r} for type {self.type_tag}")
            self._catalog[name] = _CATALOG[name](self)
        return self._catalog[name]

    def element_matrix(self, x: Sequence) -> list[list]:
        n = self.size
        m = linalg.zeros(n, n)
        for c, b in zip(x, self.matrices):
            if c:
                for i in range(n):
                    for j in range(n):
                        if b[i][j]:
                            m[i][j] += c * b[i][j]
        return [[norm(v) for v in row] for row in m]

    def coordinates(self, matrix: Sequence[Sequence]) -> list:
        coords = self._catalog.get("_coords")
        if coords is None:
            coords = Coordinates([linalg.flatten(b) for b in self.matrices], self.size ** 2)
            self._catalog["_coords"] = coords
        c = coords.coords_checked(linalg.flatten(matrix))
        if c is None:
            raise ValueError("matrix is not in the algebra")
        return c

    def cartan(self) -> SubspaceBasis:
        """The diagonal matrices of the model (a split Cartan subalgebra for the standard forms)."""
        vecs = []
        for k, b in enumerate(self.matrices):
            if all(b[i][j] == 0 for i in range(self.size) for j in range(self.size) if i != j):
                vecs.append(self.base.basis_vector(k))
        return SubspaceBasis.span(vecs, self.base.dim)


def classical_dimension(type_tag: str, n: int) -> int:
    return {"A": (n + 1) ** 2 - 1, "B": n * (2 * n + 1), "C": n * (2 * n + 1), "D": n * (2 * n - 1)}[type_tag]


def sl(n: int) -> ClassicalAlgebra:
    """``sl_n`` on matrix units ``E_ij`` (i != j, row-major) then ``H_i = E_ii - E_{i+1,i+1}``."""
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                mats.append(unit(n, i, j))
                labels.append(f"E{i + 1}{j + 1}" if n < 10 else f"E{i + 1}_{j + 1}")
    for i in range(n - 1):
        h = unit(n, i, i)
        h[i + 1][i + 1] = -1
        mats.append(h)
        labels.append(f"H{i + 1}")
    return ClassicalAlgebra(matrix_algebra(mats, labels), "A", n - 1, mats)


def form_matrices(form: Sequence[Sequence], kind: str) -> list:
    """Basis of the Lie algebra preserving ``form``: ``F^{-1} S`` with S skew (symmetric form) or symmetric (skew form)."""
    n = len(form)
    finv = linalg.inverse([list(r) for r in form])
    mats = []
    for i in range(n):
        for j in range(i, n):
            if kind == "symmetric":
                if i == j:
                    continue
                s = unit(n, i, j)
                s[j][i] = -1
            else:
                s = unit(n, i, j)
                s[j][i] = 1
            mats.append(linalg.matmul(finv, s))
    return mats


def _diag_first(mats: list) -> list:
    def offdiag(m):
        return any(m[i][j] for i in range(len(m)) for j in range(len(m)) if i != j)

    return sorted(mats, key=offdiag)


def form_algebra(type_tag: str, form: Sequence[Sequence]) -> ClassicalAlgebra:
    """``so(F)`` (type B/D, F symmetric) or ``sp(F)`` (type C, F skew)."""
    kind = "skew" if type_tag == "C" else "symmetric"
    bf = BilinearForm.of(form, kind)
    mats = form_matrices(form, kind)
    n = len(form)
    rank = n // 2
    labels = [f"x{k}" for k in range(len(mats))]
    return ClassicalAlgebra(matrix_algebra(mats, labels), type_tag, rank, mats, bf)


def classical(type_tag: str, n: int, max_rank: int = MAX_RANK) -> ClassicalAlgebra:
    """``A_n = sl_{n+1}``, ``B_n = so_{2n+1}``, ``C_n = sp_{2n}``, ``D_n = so_{2n}``."""
    type_tag = type_tag.upper()
    if type_tag not in "ABCD" or len(type_tag) != 1:
        raise UnsupportedAlgebra(f"unsupported type {type_tag!r}")
    if n < 1 or n > max_rank:
        raise UnsupportedAlgebra(f"rank {n} outside the supported range 1..{max_rank}")
    if type_tag == "A":
        return sl(n + 1)
    if type_tag == "B":
        ca = form_algebra("B", antidiagonal(2 * n + 1))
    elif type_tag == "D":
        ca = form_algebra("D", antidiagonal(2 * n))
    else:
        ca = form_algebra("C", standard_symplectic(n))
    ca.matrices[:] = _diag_first(ca.matrices)
    base = matrix_algebra(ca.matrices, [f"x{k}" for k in range(len(ca.matrices))])
    return ClassicalAlgebra(base, type_tag, n, ca.matrices, ca.form)


# -- catalog modules ---------------------------------------------------------


def matrix_module(ca: ClassicalAlgebra, module_basis: list, act: Callable, name: str,
                  pairing: Callable | None = None) -> Representation:
    """Representation on a span of matrices, with ``act(X, M)`` the action of a basis matrix."""
    n = ca.size
    coords = Coordinates([linalg.flatten(m) for m in module_basis], n * n)
    action = []
    for x in ca.matrices:
        cols = []
        for m in module_basis:
            c = coords.coords_checked(linalg.flatten(act(x, m)))
            if c is None:
                raise RepresentationError("module span is not stable under the action")
            cols.append(c)
        action.append(linalg.transpose(cols))
    gram = None
    if pairing is not None:
        gram = [[pairing(a, b) for b in module_basis] for a in module_basis]
    rep = Representation(ca.base, len(module_basis), action, name, gram)
    rep.basis_matrices = module_basis  # type: ignore[attr-defined]
    rep.coordinates = coords  # type: ignore[attr-defined]
    return rep


def _defining(ca: ClassicalAlgebra) -> Representation:
    rep = Representation(ca.base, ca.size, [m for m in ca.matrices], "defining")
    return rep


def _adjoint(ca: ClassicalAlgebra) -> Representation:
    return adjoint_rep(ca.base)


def _traceless_span(mats: list) -> list:
    """Basis of the traceless part of ``span(mats)``."""
    n = len(mats[0])
    rows = [[linalg.trace(m) for m in mats]]
    sol = linalg.nullspace(rows, len(mats))
    out = []
    for s in sol:
        acc = linalg.zeros(n, n)
        for c, m in zip(s, mats):
            if c:
                acc = linalg.matadd(acc, linalg.matscale(c, m))
        out.append(acc)
    return out


def sym2_basis(form: Sequence[Sequence]) -> list:
    """Traceless ``Y`` with ``F Y`` symmetric: the -1 eigenspace of ``X -> -F^{-1} X^T F``."""
    n = len(form)
    finv = linalg.inverse([list(r) for r in form])
    mats = []
    for i in range(n):
        for j in range(i, n):
            s = unit(n, i, j)
            s[j][i] = 1
            mats.append(linalg.matmul(finv, s))
    return _traceless_span(mats)


def _sym2(ca: ClassicalAlgebra) -> Representation:
    basis = sym2_basis(ca.form.matrix)
    return matrix_module(
        ca, basis, linalg.commutator, "sym2_traceless",
        pairing=lambda a, b: linalg.trace(linalg.matmul(a, b)),
    )


def wedge2_basis(form: Sequence[Sequence]) -> list:
    """Skew matrices ``A`` with ``tr(J^{-1} A) = 0`` (the complement of ``k J``)."""
    n = len(form)
    jinv = linalg.inverse([list(r) for r in form])
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            s = unit(n, i, j)
            s[j][i] = -1
            mats.append(s)
    rows = [[linalg.trace(linalg.matmul(jinv, m)) for m in mats]]
    out = []
    for sol in linalg.nullspace(rows, len(mats)):
        acc = linalg.zeros(n, n)
        for c, m in zip(sol, mats):
            if c:
                acc = linalg.matadd(acc, linalg.matscale(c, m))
        out.append(acc)
    return out


def wedge2_action(x, a):
    """``x . A = x A + A x^T`` on bilinear forms."""
    return linalg.matadd(linalg.matmul(x, a), linalg.matmul(a, linalg.transpose(x)))


def _wedge2(ca: ClassicalAlgebra) -> Representation:
    j = [list(r) for r in ca.form.matrix]
    jinv = linalg.inverse(j)
    basis = wedge2_basis(j)
    return matrix_module(
        ca, basis, wedge2_action, "wedge2_reduced",
        pairing=lambda a, b: linalg.trace(linalg.matmul(linalg.matmul(jinv, a), linalg.matmul(jinv, b))),
    )


_CATALOG = {
    "defining": _defining,
    "adjoint": _adjoint,
    "sym2_traceless": _sym2,
    "wedge2_reduced": _wedge2,
}


# -- small fixtures ------------------------------------------------------------


def heisenberg(n: int) -> LieAlgebra:
    """``H_n``: basis ``e_1..e_n, f_1..f_n, z`` with ``[e_i, f_i] = z``."""
    if n < 1:
        raise UnsupportedAlgebra("heisenberg(n) needs n >= 1")
    labels = [f"e{i + 1}" for i in range(n)] + [f"f{i + 1}" for i in range(n)] + ["z"]
    structure = {(i, n + i): {2 * n: 1} for i in range(n)}
    return LieAlgebra(2 * n + 1, labels, structure)


def borel(ca: ClassicalAlgebra) -> LieAlgebra:
    """Upper-triangular traceless subalgebra of ``sl_n``."""
    if ca.type_tag != "A":
        raise UnsupportedAlgebra("borel() is only provided for type A")
    vecs, labels = [], []
    for k, (m, lab) in enumerate(zip(ca.matrices, ca.base.labels)):
        n = ca.size
        if all(m[i][j] == 0 for i in range(n) for j in range(i)):
            vecs.append(ca.base.basis_vector(k))
            labels.append(lab)
    sub = SubspaceBasis(ca.base.dim, tuple(tuple(v) for v in vecs))
    return subalgebra(ca.base, sub, labels)


# -- semi-direct products and Takiff algebras ----------------------------------


@dataclass
class SemidirectData:
    total: LieAlgebra
    embed_algebra: SubspaceBasis
    embed_module: SubspaceBasis
    source_rep: Representation
    # filled in by z2_contraction
    ambient: LieAlgebra | None = None
    plus_basis: list | None = None
    minus_basis: list | None = None
    involution: "Involution | None" = None


def semidirect(alg: LieAlgebra, rep: Representation, check: bool = True) -> SemidirectData:
    """``alg ⋉ V`` with ``[(x,v),(x',v')] = ([x,x'], x.v' - x'.v)``."""
    if rep.algebra is not alg and rep.algebra != alg:
        raise RepresentationError("representation belongs to a different algebra")
    if check:
        ok, pair = check_homomorphism(rep)
        if not ok:
            raise RepresentationError(f"homomorphism property fails on basis pair {pair}")
    d, m = alg.dim, rep.dim_module
    structure = {key: dict(vec) for key, vec in alg.structure.items()}
    for i in range(d):
        mat = rep.action[i]
        for a in range(m):
            col = {d + b: mat[b][a] for b in range(m) if mat[b][a]}
            if col:
                structure[(i, d + a)] = col
    mod_name = rep.name or "V"
    labels = list(alg.labels) + [f"{mod_name}[{a}]" for a in range(m)]
    total = LieAlgebra(d + m, labels, structure)
    n = d + m
    emb_alg = SubspaceBasis(n, tuple(tuple(total.basis_vector(i)) for i in range(d)))
    emb_mod = SubspaceBasis(n, tuple(tuple(total.basis_vector(d + a)) for a in range(m)))
    return SemidirectData(total, emb_alg, emb_mod, rep)


@dataclass
class TakiffData:
    total: LieAlgebra
    level: int
    layer_bases: list  # n+1 SubspaceBasis, images of q ⊗ T^j
    base: LieAlgebra


def takiff(alg: LieAlgebra, n: int) -> TakiffData:
    """``q<n> = q ⊗ k[T]/(T^{n+1})``; basis index ``l * dim q + i`` for ``e_i ⊗ T^l``."""
    if n < 1:
        raise UnsupportedAlgebra("takiff level must be >= 1")
    d = alg.dim
    structure = {}
    for l in range(n + 1):
        for k in range(n + 1 - l):
            for (i, j), vec in alg.structure.items():
                a, b = l * d + i, k * d + j
                target = {(l + k) * d + m: c for m, c in vec.items()}
                if a < b:
                    structure[(a, b)] = target
                elif a > b:
                    structure[(b, a)] = {m: -c for m, c in target.items()}
    labels = [lab if l == 0 else f"{lab}.T{l}" for l in range(n + 1) for lab in alg.labels]
    total = LieAlgebra((n + 1) * d, labels, structure)
    layers = [
        SubspaceBasis(total.dim, tuple(tuple(total.basis_vector(l * d + i)) for i in range(d)))
        for l in range(n + 1)
    ]
    return TakiffData(total, n, layers, alg)


def takiffize_module(rep: Representation, takiff_alg: LieAlgebra | None = None) -> Representation:
    """``V ⋉ V`` over ``q ⋉ q``: ``(x1, x2).(v1, v2) = (x1.v1, x1.v2 - x2.v1)``."""
    alg = rep.algebra
    tq = takiff_alg if takiff_alg is not None else takiff(alg, 1).total
    m = rep.dim_module
    action = []
    for i in range(alg.dim):
        big = linalg.zeros(2 * m, 2 * m)
        for r in range(m):
            for c in range(m):
                v = rep.action[i][r][c]
                if v:
                    big[r][c] = v
                    big[m + r][m + c] = v
        action.append(big)
    for i in range(alg.dim):
        big = linalg.zeros(2 * m, 2 * m)
        for r in range(m):
            for c in range(m):
                v = rep.action[i][r][c]
                if v:
                    big[m + r][c] = -v
        action.append(big)
    return Representation(tq, 2 * m, action, f"hat({rep.name})" if rep.name else "hat")


# -- involutions and Z2-contractions -----------------------------------------


@dataclass
class Involution:
    algebra: LieAlgebra
    matrix: list  # column j is theta(e_j)
    name: str = ""
    plus_basis: list | None = None
    minus_basis: list | None = None
    ambient: ClassicalAlgebra | None = None

    def apply(self, x: Sequence) -> list:
        return linalg.matvec(self.matrix, x)

    def is_involutive(self) -> bool:
        return linalg.matmul(self.matrix, self.matrix) == linalg.identity(self.algebra.dim)

    def is_automorphism(self) -> bool:
        alg = self.algebra
        cols = linalg.transpose(self.matrix)
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                lhs = self.apply(bracket(alg, alg.basis_vector(i), alg.basis_vector(j)))
                rhs = bracket(alg, cols[i], cols[j])
                if lhs != rhs:
                    return False
        return True

    def eigenspace(self, sign: int) -> SubspaceBasis:
        n = self.algebra.dim
        shifted = [[norm(self.matrix[i][j] - (sign if i == j else 0)) for j in range(n)] for i in range(n)]
        return SubspaceBasis.span(linalg.nullspace(shifted, n), n)


def _matrix_involution(ca: ClassicalAlgebra, theta_matrix: Callable, name: str) -> Involution:
    cols = [ca.coordinates(theta_matrix(b)) for b in ca.matrices]
    return Involution(ca.base, linalg.transpose(cols), name, ambient=ca)


def standard_involution(pair: str | tuple) -> Involution:
    """Involutions for ``(sl_N, so_N)``, ``(sl_2n, sp_2n)`` and ``(g ⊕ g, swap)``.

    ``pair`` is a descriptor ``"A<r>:so"``, ``"A<r>:sp"`` or ``"<g>:swap"``,
    or a tuple of the same parts.
    """
    if isinstance(pair, tuple):
        pair = ":".join(str(p) for p in pair)
    head, _, kind = pair.rpartition(":")
    if kind == "swap":
        g = build(head).algebra
        gg = direct_sum(g, g)
        d = g.dim
        mat = linalg.zeros(2 * d, 2 * d)
        for i in range(d):
            mat[d + i][i] = 1
            mat[i][d + i] = 1
        plus = [[1 if k in (i, d + i) else 0 for k in range(2 * d)] for i in range(d)]
        minus = [[1 if k == i else (-1 if k == d + i else 0) for k in range(2 * d)] for i in range(d)]
        return Involution(gg, mat, f"{head}:swap", plus, minus)
    m = re.fullmatch(r"[Aa](\d+)", head)
    if not m or kind not in ("so", "sp"):
        raise UnsupportedAlgebra(f"unsupported involution pair {pair!r}")
    r = int(m.group(1))
    n = r + 1
    ca = sl(n)
    if kind == "so":
        f = antidiagonal(n)
        finv = linalg.inverse(f)
        theta = lambda x: linalg.matscale(-1, linalg.matmul(linalg.matmul(finv, linalg.transpose(x)), f))
    else:
        if n % 2:
            raise UnsupportedAlgebra("(sl_N, sp_N) needs N even")
        j = standard_symplectic(n // 2)
        jinv = linalg.inverse(j)
        theta = lambda x: linalg.matscale(-1, linalg.matmul(linalg.matmul(j, linalg.transpose(x)), jinv))
    return _matrix_involution(ca, theta, f"A{r}:{kind}")


def z2_contraction(alg: LieAlgebra, inv: Involution) -> SemidirectData:
    """``g_0 ⋉ g_1`` for the eigenspace decomposition of an involution."""
    n = alg.dim
    plus = inv.plus_basis or [list(v) for v in inv.eigenspace(1).vectors]
    minus = inv.minus_basis or [list(v) for v in inv.eigenspace(-1).vectors]
    if len(plus) + len(minus) != n or linalg.rank(plus + minus) != n:
        raise ValueError("eigenspaces do not span the algebra (degenerate involution)")
    for v in plus:
        if inv.apply(v) != [norm(x) for x in v]:
            raise ValueError("plus basis vector is not fixed by the involution")
    for v in minus:
        if inv.apply(v) != [norm(-x) for x in v]:
            raise ValueError("minus basis vector is not negated by the involution")
    sub0 = SubspaceBasis(n, tuple(tuple(v) for v in plus))
    g0 = subalgebra(alg, sub0, [f"h{i}" for i in range(len(plus))])
    mcoords = Coordinates(minus, n)
    action = []
    for u in plus:
        cols = []
        for w in minus:
            c = mcoords.coords_checked(bracket(alg, u, w))
            if c is None:
                raise ValueError("[g_0, g_1] is not contained in g_1")
            cols.append(c)
        action.append(linalg.transpose(cols) if cols else [])
    rep = Representation(g0, len(minus), action, "m")
    sd = semidirect(g0, rep)
    sd.ambient = alg
    sd.plus_basis = plus
    sd.minus_basis = minus
    sd.involution = inv
    return sd


def grading_holds(alg: LieAlgebra, sd: SemidirectData) -> bool:
    """``[g_1, g_1] ⊆ g_0`` in the original algebra."""
    plus = SubspaceBasis.span(sd.plus_basis, alg.dim)
    minus = sd.minus_basis
    for a in range(len(minus)):
        for b in range(a + 1, len(minus)):
            if not plus.contains(bracket(alg, minus[a], minus[b])):
                return False
    return True


# -- nilpotent elements from partitions ---------------------------------------


@dataclass
class NilpotentModel:
    """A nilpotent element with given Jordan type and an ambient algebra containing it.

    For types B/C/D the ambient algebra preserves the block form adapted to
    the partition, which is conjugate over the algebraic closure to the
    standard form of the same type.
    """

    algebra: ClassicalAlgebra
    element: list
    matrix: list
    parts: tuple


def _jordan_blocks(parts: Sequence[int], n: int) -> list:
    x = linalg.zeros(n, n)
    off = 0
    for d in parts:
        for i in range(d - 1):
            x[off + i + 1][off + i] = 1
        off += d
    return x


def nilpotent_block_model(type_tag: str, parts: Sequence[int]) -> tuple[list, list]:
    """Matrix ``x`` and form ``F`` with ``x`` nilpotent of Jordan type ``parts`` and ``x^T F + F x = 0``.

    Single Jordan blocks carry ``B(e_i, e_{d+1-i}) = (-1)^i`` (symmetric for
    odd ``d``, skew for even ``d``); parts of the wrong parity are paired as
    ``V_d ⊕ V_d^*``.
    """
    symmetric = type_tag in ("B", "D")
    single_ok = (lambda d: d % 2 == 1) if symmetric else (lambda d: d % 2 == 0)
    blocks = []
    pending: dict[int, int] = {}
    for d in parts:
        if single_ok(d):
            blocks.append(("single", d))
        else:
            pending[d] = pending.get(d, 0) + 1
            if pending[d] == 2:
                blocks.append(("pair", d))
                pending[d] = 0
    if any(pending.values()):
        raise ValueError("partition violates the parity constraint of its type")
    n = sum(parts)
    x = linalg.zeros(n, n)
    f = linalg.zeros(n, n)
    off = 0
    for kind, d in blocks:
        if kind == "single":
            for i in range(d - 1):
                x[off + i + 1][off + i] = 1
            for i in range(d):
                f[off + i][off + d - 1 - i] = (-1) ** (i + 1)
            off += d
        else:
            u, w = off, off + d
            for i in range(d - 1):
                x[u + i + 1][u + i] = 1  # x u_i = u_{i+1}
                x[w + i][w + i + 1] = -1  # x w_{j} = -w_{j-1}
            for i in range(d):
                f[u + i][w + i] = 1
                f[w + i][u + i] = 1 if symmetric else -1
            off += 2 * d
    return x, f


def nilpotent_from_partition(ca: ClassicalAlgebra | str, parts: Sequence[int]) -> NilpotentModel:
    """Nilpotent element of Jordan type ``parts`` in a model of the classical algebra."""
    type_tag = ca if isinstance(ca, str) else ca.type_tag
    parts = tuple(sorted(parts, reverse=True))
    from .orbits import check_partition

    check_partition(type_tag, parts)
    n = sum(parts)
    if not isinstance(ca, str) and ca.size != n:
        raise ValueError(f"partition of {n} does not match the defining module of dimension {ca.size}")
    if type_tag == "A":
        model = ca if not isinstance(ca, str) else sl(n)
        x = _jordan_blocks(parts, n)
        return NilpotentModel(model, model.coordinates(x), x, parts)
    x, f = nilpotent_block_model(type_tag, parts)
    model = form_algebra(type_tag, f)
    return NilpotentModel(model, model.coordinates(x), x, parts)


# -- descriptors -------------------------------------------------------------------


@dataclass
class Built:
    algebra: LieAlgebra
    kind: str
    data: object
    descriptor: str


_REPS = {"adjoint", "defining", "sym2", "sym2_traceless", "wedge2", "wedge2_reduced", "trivial", "coadjoint"}


def build(descriptor: str) -> Built:
    """Parse algebra descriptors such as ``A3``, ``heis2``, ``borel:A2``,
    ``takiff:A1:2``, ``z2:A3:so``, ``z2:A1:swap``, ``sd:A1:adjoint``."""
    d = descriptor.strip()
    m = re.fullmatch(r"([ABCDabcd])(\d+)", d)
    if m:
        ca = classical(m.group(1), int(m.group(2)))
        return Built(ca.base, "classical", ca, d)
    m = re.fullmatch(r"heis(\d+)", d)
    if m:
        return Built(heisenberg(int(m.group(1))), "heisenberg", None, d)
    if d.startswith("borel:"):
        inner = build(d[len("borel:"):])
        if inner.kind != "classical":
            raise UnsupportedAlgebra(f"borel needs a classical algebra, got {inner.descriptor!r}")
        return Built(borel(inner.data), "borel", inner.data, d)
    if d.startswith("takiff:"):
        head, _, level = d[len("takiff:"):].rpartition(":")
        if not level.isdigit() or not head:
            raise UnsupportedAlgebra(f"bad takiff descriptor {descriptor!r}")
        inner = build(head)
        td = takiff(inner.algebra, int(level))
        return Built(td.total, "takiff", td, d)
    if d.startswith("z2:"):
        body = d[len("z2:"):]
        inv = standard_involution(body)
        sd = z2_contraction(inv.algebra, inv)
        return Built(sd.total, "z2", sd, d)
    if d.startswith("sd:"):
        head, _, repname = d[len("sd:"):].rpartition(":")
        if repname not in _REPS or not head:
            raise UnsupportedAlgebra(f"bad semidirect descriptor {descriptor!r}")
        inner = build(head)
        rep = _named_rep(inner, repname)
        sd = semidirect(inner.algebra, rep)
        return Built(sd.total, "semidirect", sd, d)
    raise UnsupportedAlgebra(f"unknown algebra descriptor {descriptor!r}")


def _named_rep(inner: Built, name: str) -> Representation:
    if name == "adjoint":
        return adjoint_rep(inner.algebra)
    if name == "coadjoint":
        return dual_rep(adjoint_rep(inner.algebra))
    if name == "trivial":
        return trivial_rep(inner.algebra)
    if inner.kind != "classical":
        raise UnsupportedAlgebra(f"representation {name!r} needs a classical algebra")
    full = {"sym2": "sym2_traceless", "wedge2": "wedge2_reduced"}.get(name, name)
    return inner.data.rep(full)
