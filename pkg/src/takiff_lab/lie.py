"""Lie algebras given by exact structure constants, and their basic operators.

A :class:`LieAlgebra` stores ``[e_i, e_j] = sum_k c[i][j][k] e_k`` sparsely,
keyed by ordered pairs ``i < j``; antisymmetry is implied.  Elements are
plain coordinate lists.  All arithmetic is exact (``int``/``Fraction``).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .linalg import Coordinates, norm, nullspace, rank


class DimensionError(ValueError):
    """Raised when a vector or matrix has the wrong length for its algebra."""


@dataclass(frozen=True)
class SubspaceBasis:
    """Basis of a linear subspace, kept in reduced row echelon form."""

    ambient_dim: int
    vectors: tuple[tuple, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "SubspaceBasis":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        basis = linalg.row_basis(vecs, ambient_dim) if vecs else []
        return cls(ambient_dim, tuple(tuple(v) for v in basis))

    @classmethod
    def whole(cls, n: int) -> "SubspaceBasis":
        return cls.span(linalg.identity(n), n)

    @classmethod
    def zero(cls, n: int) -> "SubspaceBasis":
        return cls(n, ())

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def contains(self, v: Sequence) -> bool:
        if not any(v):
            return True
        return rank(list(self.vectors) + [list(v)]) == self.dim

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        return all(self.contains(v) for v in other.vectors)

    def intersection_dim(self, other: "SubspaceBasis") -> int:
        return linalg.intersection_dim(list(self.vectors), list(other.vectors), self.ambient_dim)

    def intersect(self, other: "SubspaceBasis") -> "SubspaceBasis":
        # x = sum a_i u_i = sum b_j w_j  <=>  [U^T | -W^T] (a, b) = 0
        u, w = list(self.vectors), list(other.vectors)
        if not u or not w:
            return SubspaceBasis.zero(self.ambient_dim)
        cols = u + [[-x for x in v] for v in w]
        sol = nullspace(linalg.transpose(cols), len(cols))
        vecs = []
        for s in sol:
            vecs.append([norm(sum(s[i] * u[i][k] for i in range(len(u)))) for k in range(self.ambient_dim)])
        return SubspaceBasis.span(vecs, self.ambient_dim)

    def sum(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return SubspaceBasis.span(list(self.vectors) + list(other.vectors), self.ambient_dim)


@dataclass(frozen=True)
class BilinearForm:
    matrix: tuple[tuple, ...]
    kind: str  # "symmetric" or "skew"

    def __post_init__(self):
        m = self.matrix
        n = len(m)
        sign = 1 if self.kind == "symmetric" else -1
        if self.kind not in ("symmetric", "skew"):
            raise ValueError(f"unknown form kind {self.kind!r}")
        for i in range(n):
            for j in range(n):
                if m[i][j] != sign * m[j][i]:
                    raise ValueError(f"matrix is not {self.kind}")

    @classmethod
    def of(cls, matrix: Sequence[Sequence], kind: str) -> "BilinearForm":
        return cls(tuple(tuple(norm(Fraction(x)) for x in row) for row in matrix), kind)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def rank(self) -> int:
        return rank(self.matrix) if self.matrix else 0

    def is_nondegenerate(self) -> bool:
        return linalg.det([list(r) for r in self.matrix]) != 0

    def kernel(self) -> SubspaceBasis:
        return SubspaceBasis.span(nullspace(self.matrix, self.dim), self.dim)

    def __call__(self, u: Sequence, v: Sequence):
        return norm(sum(u[i] * self.matrix[i][j] * v[j] for i in range(self.dim) for j in range(self.dim) if u[i] and v[j]))


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q on a labelled basis."""

    __slots__ = ("dim", "labels", "structure", "_table")

    def __init__(self, dim: int, labels: Sequence[str] | None = None,
                 structure: dict | None = None):
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise DimensionError("number of labels does not match dimension")
        clean: dict[tuple[int, int], dict[int, object]] = {}
        for (i, j), vec in (structure or {}).items():
            if i == j:
                if any(vec.values()):
                    raise ValueError("[e_i, e_i] must vanish")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            entry = {k: norm(Fraction(c) * sign) for k, c in vec.items() if c}
            if entry:
                if (i, j) in clean and clean[(i, j)] != entry:
                    raise ValueError(f"conflicting entries for [e{i}, e{j}]")
                clean[(i, j)] = entry
        self.structure = clean
        table: dict[tuple[int, int], dict[int, object]] = {}
        for (i, j), vec in clean.items():
            table[(i, j)] = vec
            table[(j, i)] = {k: -c for k, c in vec.items()}
        self._table = table

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, nonzero_brackets={len(self.structure)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self.structure == other.structure

    def __hash__(self):
        return hash((self.dim, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.structure.items()))))

    def basis_bracket(self, i: int, j: int) -> dict[int, object]:
        return self._table.get((i, j), {})

    def basis_vector(self, i: int) -> list:
        v = [0] * self.dim
        v[i] = 1
        return v

    def basis_index(self, label: str) -> int:
        return self.labels.index(label)

    def element(self, **coeffs) -> list:
        v = [0] * self.dim
        for label, c in coeffs.items():
            v[self.labels.index(label)] = c
        return v


def _check_len(alg: LieAlgebra, *vecs: Sequence) -> None:
    for v in vecs:
        if len(v) != alg.dim:
            raise DimensionError(f"expected a vector of length {alg.dim}, got {len(v)}")


def bracket(alg: LieAlgebra, x: Sequence, y: Sequence) -> list:
    _check_len(alg, x, y)
    out = [0] * alg.dim
    xs = [(i, a) for i, a in enumerate(x) if a]
    ys = [(j, b) for j, b in enumerate(y) if b]
    table = alg._table
    for i, a in xs:
        for j, b in ys:
            vec = table.get((i, j))
            if vec:
                ab = a * b
                for k, c in vec.items():
                    out[k] += ab * c
    return [norm(v) for v in out]


@dataclass
class JacobiReport:
    ok: bool
    first_failure: tuple[int, int, int] | None = None


def check_jacobi(alg: LieAlgebra) -> JacobiReport:
    """Exhaustive exact Jacobi check over basis triples ``i < j < k``."""
    table = alg._table
    n = alg.dim

    def bb(vec: dict, k: int) -> dict:
        acc: dict[int, object] = {}
        for l, c in vec.items():
            w = table.get((l, k))
            if w:
                for m, d in w.items():
                    acc[m] = acc.get(m, 0) + c * d
        return acc

    for i in range(n):
        for j in range(i + 1, n):
            eij = table.get((i, j), {})
            for k in range(j + 1, n):
                acc = bb(eij, k)
                for m, v in bb(table.get((j, k), {}), i).items():
                    acc[m] = acc.get(m, 0) + v
                for m, v in bb(table.get((k, i), {}), j).items():
                    acc[m] = acc.get(m, 0) + v
                if any(v != 0 for v in acc.values()):
                    return JacobiReport(False, (i, j, k))
    return JacobiReport(True)


def ad_matrix(alg: LieAlgebra, x: Sequence) -> list[list]:
    """Matrix of ``ad x``; column ``j`` is ``[x, e_j]``."""
    _check_len(alg, x)
    n = alg.dim
    m = [[0] * n for _ in range(n)]
    table = alg._table
    for i, a in enumerate(x):
        if not a:
            continue
        for j in range(n):
            vec = table.get((i, j))
            if vec:
                for k, c in vec.items():
                    m[k][j] += a * c
    return [[norm(v) for v in row] for row in m]


def ad_basis(alg: LieAlgebra) -> list[list[list]]:
    return [ad_matrix(alg, alg.basis_vector(i)) for i in range(alg.dim)]


def centralizer(alg: LieAlgebra, x: Sequence) -> SubspaceBasis:
    return SubspaceBasis.span(nullspace(ad_matrix(alg, x), alg.dim), alg.dim)


def centralizer_of_subspace(alg: LieAlgebra, sub: SubspaceBasis) -> SubspaceBasis:
    rows = []
    for s in sub.vectors:
        rows.extend(ad_matrix(alg, s))
    if not rows:
        return SubspaceBasis.whole(alg.dim)
    return SubspaceBasis.span(nullspace(rows, alg.dim), alg.dim)


def center(alg: LieAlgebra) -> SubspaceBasis:
    return centralizer_of_subspace(alg, SubspaceBasis.whole(alg.dim))


def is_commutative(sub: SubspaceBasis, alg: LieAlgebra) -> bool:
    vecs = sub.vectors
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            if any(bracket(alg, vecs[a], vecs[b])):
                return False
    return True


def is_subalgebra(sub: SubspaceBasis, alg: LieAlgebra) -> bool:
    vecs = sub.vectors
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            if not sub.contains(bracket(alg, vecs[a], vecs[b])):
                return False
    return True


def image(matrix: list[list], ncols: int | None = None) -> SubspaceBasis:
    """Column space of a matrix."""
    n = len(matrix)
    return SubspaceBasis.span(linalg.transpose(matrix), n) if matrix else SubspaceBasis.zero(0)


def bracket_space(alg: LieAlgebra, a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Span of ``[u, w]`` for ``u`` in ``a`` and ``w`` in ``b``."""
    vecs = [bracket(alg, u, w) for u in a.vectors for w in b.vectors]
    return SubspaceBasis.span([v for v in vecs if any(v)], alg.dim)


def normalizer(alg: LieAlgebra, sub: SubspaceBasis) -> SubspaceBasis:
    """``{y : [y, sub] ⊆ sub}``, as the kernel of the map into the quotient."""
    n = alg.dim
    if sub.dim == 0 or sub.dim == n:
        return SubspaceBasis.whole(n)
    ann = nullspace(list(sub.vectors), n)  # rows a with a . s = 0 on sub
    rows = []
    for s in sub.vectors:
        ads = ad_matrix(alg, s)
        rows.extend(linalg.matmul(ann, ads))
    return SubspaceBasis.span(nullspace(rows, n), n)


def kirillov_form(alg: LieAlgebra, xi: Sequence) -> BilinearForm:
    """Skew form ``B[i][j] = <xi, [e_i, e_j]>``."""
    _check_len(alg, xi)
    n = alg.dim
    m = [[0] * n for _ in range(n)]
    for (i, j), vec in alg.structure.items():
        v = sum((xi[k] * c for k, c in vec.items() if xi[k]), 0)
        if v:
            m[i][j] = norm(v)
            m[j][i] = norm(-v)
    return BilinearForm(tuple(tuple(r) for r in m), "skew")


def coadjoint_stabilizer(alg: LieAlgebra, xi: Sequence) -> SubspaceBasis:
    return kirillov_form(alg, xi).kernel()


def random_vector(rng: random.Random, n: int, height: int) -> list[int]:
    return [rng.randint(-height, height) for _ in range(n)]


def random_nonzero_vector(rng: random.Random, n: int, height: int) -> list[int]:
    """Entries uniform in ``[-height, height]`` without zero.

    Used for "generic point" samples: a vanishing coordinate is the most
    common way a small random point lands on a special subvariety.
    """
    out = []
    for _ in range(n):
        c = rng.randint(1, height)
        out.append(c if rng.random() < 0.5 else -c)
    return out


def sample_height(trial: int) -> int:
    """Coefficient bound used for the ``trial``-th random sample (grows with trial)."""
    return 3 + 4 * trial


def index(alg: LieAlgebra, trials: int = 8, seed: int = 0) -> int:
    """Generic corank of the Kirillov form, from random integer covectors.

    Returns ``dim - max rank`` over the samples.  Each sample gives an
    upper bound on the index; the bound is attained except on a proper
    Zariski-closed set, so the result is exact with probability one.
    Sampling stops early once the rank meets ``dim - dim center``, which
    no covector can exceed, so the answer does not depend on the cutoff.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = alg.dim
    if n == 0:
        return 0
    bound = n - center(alg).dim
    rng = random.Random(seed)
    best = 0
    for t in range(trials):
        xi = random_vector(rng, n, sample_height(t))
        r = kirillov_form(alg, xi).rank()
        best = max(best, r)
        if best >= bound:
            break
    return n - best


def generic_covector(alg: LieAlgebra, trials: int = 8, seed: int = 0) -> list[int]:
    """The first sampled covector (nonzero entries) of maximal Kirillov rank."""
    rng = random.Random(seed)
    best, best_xi = -1, None
    bound = alg.dim - center(alg).dim
    for t in range(trials):
        xi = random_nonzero_vector(rng, alg.dim, sample_height(t))
        r = kirillov_form(alg, xi).rank()
        if r > best:
            best, best_xi = r, xi
        if best >= bound:
            break
    return best_xi


def generic_element(alg: LieAlgebra, trials: int = 8, seed: int = 0) -> list[int]:
    """The first sampled element (nonzero entries) with minimal centralizer dimension."""
    rng = random.Random(seed)
    best, best_x = None, None
    for t in range(trials):
        x = random_nonzero_vector(rng, alg.dim, sample_height(t))
        d = alg.dim - rank(ad_matrix(alg, x))
        if best is None or d < best:
            best, best_x = d, x
    return best_x


def subalgebra(alg: LieAlgebra, sub: SubspaceBasis, labels: Sequence[str] | None = None) -> LieAlgebra:
    """Induced structure constants on a subalgebra, in the basis ``sub.vectors``."""
    coords = Coordinates(sub.vectors, alg.dim)
    k = sub.dim
    structure = {}
    for a in range(k):
        for b in range(a + 1, k):
            br = bracket(alg, sub.vectors[a], sub.vectors[b])
            if not any(br):
                continue
            c = coords.coords_checked(br)
            if c is None:
                raise ValueError("subspace is not closed under the bracket")
            structure[(a, b)] = {i: ci for i, ci in enumerate(c) if ci}
    return LieAlgebra(k, labels or [f"s{i}" for i in range(k)], structure)


def quotient(alg: LieAlgebra, ideal: SubspaceBasis) -> LieAlgebra:
    """``alg / ideal`` on the complement spanned by non-pivot basis vectors."""
    n = alg.dim
    pivots = set()
    for v in ideal.vectors:
        pivots.add(next(i for i, x in enumerate(v) if x))
    comp = [i for i in range(n) if i not in pivots]
    full = list(ideal.vectors) + [alg.basis_vector(i) for i in comp]
    coords = Coordinates(full, n)
    off = ideal.dim
    structure = {}
    for a in range(len(comp)):
        for b in range(a + 1, len(comp)):
            br = bracket(alg, alg.basis_vector(comp[a]), alg.basis_vector(comp[b]))
            c = coords.coords(br)[off:]
            if any(c):
                structure[(a, b)] = {i: ci for i, ci in enumerate(c) if ci}
    return LieAlgebra(len(comp), [alg.labels[i] for i in comp], structure)


def direct_sum(a: LieAlgebra, b: LieAlgebra, suffixes=("'", "''")) -> LieAlgebra:
    structure = dict(a.structure)
    for (i, j), vec in b.structure.items():
        structure[(i + a.dim, j + a.dim)] = {k + a.dim: c for k, c in vec.items()}
    labels = [l + suffixes[0] for l in a.labels] + [l + suffixes[1] for l in b.labels]
    return LieAlgebra(a.dim + b.dim, labels, structure)


def matrix_algebra(basis: Sequence[Sequence[Sequence]], labels: Sequence[str] | None = None) -> LieAlgebra:
    """Structure constants of a Lie algebra of square matrices under the commutator."""
    if not basis:
        return LieAlgebra(0, [], {})
    n = len(basis[0])
    flat = [linalg.flatten(b) for b in basis]
    coords = Coordinates(flat, n * n)
    k = len(basis)
    structure = {}
    for a in range(k):
        for b in range(a + 1, k):
            comm = linalg.commutator(basis[a], basis[b])
            if linalg.is_zero_matrix(comm):
                continue
            c = coords.coords_checked(linalg.flatten(comm))
            if c is None:
                raise ValueError("matrix span is not closed under the commutator")
            structure[(a, b)] = {i: ci for i, ci in enumerate(c) if ci}
    return LieAlgebra(k, labels, structure)


def structure_equal(a: LieAlgebra, b: LieAlgebra) -> bool:
    return a.dim == b.dim and a.structure == b.structure


def transport(alg: LieAlgebra, basis_map: Sequence[Sequence]) -> LieAlgebra:
    """Structure constants of ``alg`` in the new basis ``f_i = sum basis_map[i][k] e_k``."""
    coords = Coordinates(basis_map, alg.dim)
    structure = {}
    for a in range(alg.dim):
        for b in range(a + 1, alg.dim):
            br = bracket(alg, basis_map[a], basis_map[b])
            if any(br):
                c = coords.coords(br)
                structure[(a, b)] = {i: ci for i, ci in enumerate(c) if ci}
    return LieAlgebra(alg.dim, None, structure)


# -- representations -------------------------------------------------------


@dataclass
class Representation:
    """A module given by exact action matrices ``action[i] = rho(e_i)``."""

    algebra: LieAlgebra
    dim_module: int
    action: list
    name: str = ""
    pairing: list | None = field(default=None, repr=False)  # invariant form, if known

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise DimensionError("need one action matrix per basis element")
        for m in self.action:
            if len(m) != self.dim_module or any(len(r) != self.dim_module for r in m):
                raise DimensionError("action matrix has the wrong shape")

    def act(self, x: Sequence, v: Sequence) -> list:
        """``x . v`` for an algebra element ``x`` and module vector ``v``."""
        out = [0] * self.dim_module
        for i, a in enumerate(x):
            if a:
                w = linalg.matvec(self.action[i], v)
                for k in range(self.dim_module):
                    out[k] += a * w[k]
        return [norm(t) for t in out]

    def matrix_of(self, x: Sequence) -> list[list]:
        m = linalg.zeros(self.dim_module, self.dim_module)
        for i, a in enumerate(x):
            if a:
                for r in range(self.dim_module):
                    row = self.action[i][r]
                    for c in range(self.dim_module):
                        if row[c]:
                            m[r][c] += a * row[c]
        return [[norm(t) for t in row] for row in m]

    def fixed_space(self, sub: SubspaceBasis) -> SubspaceBasis:
        """``V^{sub}``, the joint kernel of the elements of ``sub``."""
        rows = []
        for s in sub.vectors:
            rows.extend(self.matrix_of(s))
        if not rows:
            return SubspaceBasis.whole(self.dim_module)
        return SubspaceBasis.span(nullspace(rows, self.dim_module), self.dim_module)

    def stabilizer(self, v: Sequence) -> SubspaceBasis:
        """``q_v = {x : x . v = 0}``."""
        cols = [linalg.matvec(m, v) for m in self.action]
        return SubspaceBasis.span(nullspace(linalg.transpose(cols), self.algebra.dim), self.algebra.dim)

    def orbit_tangent(self, v: Sequence) -> SubspaceBasis:
        """``q . v``."""
        cols = [linalg.matvec(m, v) for m in self.action]
        return SubspaceBasis.span([c for c in cols if any(c)], self.dim_module)


def check_homomorphism(rep: Representation) -> tuple[bool, tuple[int, int] | None]:
    """Verify ``rho([e_i, e_j]) = [rho(e_i), rho(e_j)]`` on all basis pairs."""
    alg = rep.algebra
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = rep.matrix_of(bracket(alg, alg.basis_vector(i), alg.basis_vector(j)))
            rhs = linalg.commutator(rep.action[i], rep.action[j])
            if lhs != rhs:
                return False, (i, j)
    return True, None


def adjoint_rep(alg: LieAlgebra) -> Representation:
    return Representation(alg, alg.dim, ad_basis(alg), "adjoint")


def dual_rep(rep: Representation) -> Representation:
    action = [[[norm(-x) for x in row] for row in linalg.transpose(m)] for m in rep.action]
    return Representation(rep.algebra, rep.dim_module, action, f"{rep.name}*" if rep.name else "dual")


def trivial_rep(alg: LieAlgebra, dim: int = 1) -> Representation:
    return Representation(alg, dim, [linalg.zeros(dim, dim) for _ in range(alg.dim)], "trivial")


def direct_sum_rep(reps: Sequence[Representation], name: str = "") -> Representation:
    alg = reps[0].algebra
    total = sum(r.dim_module for r in reps)
    action = []
    for i in range(alg.dim):
        m = linalg.zeros(total, total)
        off = 0
        for r in reps:
            for a in range(r.dim_module):
                for b in range(r.dim_module):
                    m[off + a][off + b] = r.action[i][a][b]
            off += r.dim_module
        action.append(m)
    return Representation(alg, total, action, name or "+".join(r.name for r in reps))


def restrict_rep(rep: Representation, sub: SubspaceBasis, subalg: LieAlgebra) -> Representation:
    """Restriction to a subalgebra whose basis is ``sub.vectors``."""
    return Representation(subalg, rep.dim_module, [rep.matrix_of(v) for v in sub.vectors], rep.name)


# -- serialization -----------------------------------------------------------


def to_json(alg: LieAlgebra) -> str:
    entries = []
    for (i, j) in sorted(alg.structure):
        for k in sorted(alg.structure[(i, j)]):
            entries.append([i, j, k, linalg.format_rational(alg.structure[(i, j)][k])])
    return json.dumps({"dim": alg.dim, "labels": list(alg.labels), "structure": entries})


def from_json(text: str | dict) -> LieAlgebra:
    data = json.loads(text) if isinstance(text, str) else text
    structure: dict[tuple[int, int], dict[int, object]] = {}
    for i, j, k, c in data["structure"]:
        if i >= j:
            raise ValueError("structure entries must have i < j")
        structure.setdefault((i, j), {})[k] = linalg.to_rational(c)
    return LieAlgebra(data["dim"], data.get("labels"), structure)
