"""Polynomial invariants, covariants and their Takiff/semi-direct lifts.

Invariance is always certified symbolically: a polynomial ``f`` on a module
``V`` is invariant when every Lie derivative ``sum_k (e_i . v)_k df/dv_k``
is the zero polynomial.  Nothing here samples except the Jacobian rank
used to certify algebraic independence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .builders import ClassicalAlgebra, SemidirectData, UnsupportedAlgebra, build, classical
from .lie import LieAlgebra, Representation, adjoint_rep
from .polynomial import (
    _accumulate,
    _accumulate_product,
    PolyMap,
    Polynomial,
    generic_matrix,
    linear_forms,
    pmat_const_mul,
    pmat_mul,
    pmat_trace,
)


def _action_forms(rep: Representation, i: int) -> list[Polynomial]:
    """Coordinates of ``e_i . v`` as linear forms in ``v``."""
    return [Polynomial.linear(row) for row in rep.action[i]]


def lie_derivative(rep: Representation, f: Polynomial, i: int) -> Polynomial:
    if f.num_vars != rep.dim_module:
        raise ValueError(f"polynomial has {f.num_vars} variables, module has dimension {rep.dim_module}")
    forms = _action_forms(rep, i)
    acc = Polynomial(f.num_vars)
    for k in sorted(f.variables()):
        if forms[k].terms:
            acc = acc + forms[k] * f.derivative(k)
    return acc


def invariance_failures(rep: Representation, f: Polynomial) -> list[int]:
    return [i for i in range(rep.algebra.dim) if not lie_derivative(rep, f, i).is_zero()]


def is_invariant(rep: Representation, f: Polynomial) -> bool:
    return not invariance_failures(rep, f)


# -- classical invariants ------------------------------------------------------


def power_traces(ca: ClassicalAlgebra, degrees: Sequence[int]) -> dict[int, Polynomial]:
    """``tr(x^k)`` for the generic element ``x`` of the matrix model."""
    x = generic_matrix(ca.matrices)
    out, cur, k = {}, x, 1
    top = max(degrees)
    while True:
        if k in degrees:
            out[k] = pmat_trace(cur)
        if k == top:
            return out
        cur = pmat_mul(cur, x)
        k += 1


def pfaffian(m: Sequence[Sequence]):
    """Pfaffian by expansion along the first row (perfect matchings); entries may be polynomials."""
    n = len(m)
    if n % 2:
        return 0

    @lru_cache(maxsize=None)
    def pf(idx: tuple):
        if not idx:
            return 1
        i, rest = idx[0], idx[1:]
        total = 0
        for pos, j in enumerate(rest):
            a = m[i][j]
            if isinstance(a, Polynomial) and a.is_zero() or (not isinstance(a, Polynomial) and a == 0):
                continue
            sub = pf(rest[:pos] + rest[pos + 1:])
            if not isinstance(sub, Polynomial) and sub == 0:
                continue
            term = a * sub
            total = total + term if pos % 2 == 0 else total - term
        return total

    return pf(tuple(range(n)))


def casimir_generators(ca: ClassicalAlgebra) -> list[Polynomial]:
    """Basic invariants of ``k[g]^G``.

    A: the elementary symmetric functions ``e_2..e_N`` of the eigenvalues
    (characteristic polynomial coefficients up to sign) via Newton's
    identities.  B, C: ``tr x^{2i}``, ``i = 1..n``.  D: ``tr x^{2i}`` for
    ``i < n`` and the Pfaffian of ``F x``.
    """
    d = ca.base.dim
    n = ca.rank
    if ca.type_tag == "A":
        size = ca.size
        p = power_traces(ca, range(1, size + 1))
        e = [Polynomial.constant(d, 1)]
        for k in range(1, size + 1):
            acc = Polynomial(d)
            for i in range(1, k + 1):
                term = e[k - i] * p[i]
                acc = acc + term if i % 2 else acc - term
            e.append(acc.scale(Fraction(1, k)))
        return e[2:]
    if ca.type_tag in ("B", "C"):
        p = power_traces(ca, [2 * i for i in range(1, n + 1)])
        return [p[2 * i] for i in range(1, n + 1)]
    if ca.type_tag == "D":
        gens = []
        if n > 1:
            p = power_traces(ca, [2 * i for i in range(1, n)])
            gens = [p[2 * i] for i in range(1, n)]
        fx = pmat_const_mul(generic_matrix(ca.matrices), ca.form.matrix, left=True)
        gens.append(pfaffian(fx))
        return gens
    raise ValueError(f"unsupported type {ca.type_tag!r}")


# -- differentials and covariants ----------------------------------------------


def differential(f: Polynomial) -> PolyMap:
    """Gradient of ``f`` in dual-basis coordinates."""
    return PolyMap(f.num_vars, tuple(f.derivative(i) for i in range(f.num_vars)))


def directional_derivative(f: Polynomial, point: Sequence, direction: Sequence):
    """``df_point(direction)``, exact."""
    return linalg.norm(sum((f.derivative(i).evaluate(point) * c for i, c in enumerate(direction) if c), 0))


def dualize(F: PolyMap, gram: Sequence[Sequence]) -> PolyMap:
    """Convert module-valued ``F`` into dual coordinates through an invariant pairing."""
    return F.apply_matrix(gram)


def hat_covariant(F: PolyMap, sd: SemidirectData) -> Polynomial:
    """``F^(x, v) = <F(x), v>`` on ``q ⋉ V``; ``F`` must take values in ``V*`` coordinates."""
    d, m = sd.source_rep.algebra.dim, sd.source_rep.dim_module
    if F.domain_dim != d or F.codomain_dim != m:
        raise ValueError(f"covariant shape {F.domain_dim}->{F.codomain_dim} does not match {d}->{m}")
    total = d + m
    acc = Polynomial(total)
    for a, comp in enumerate(F.components):
        if comp.terms:
            acc = acc + comp.extend(total) * Polynomial.variable(total, d + a)
    return acc


def _matrix_covariant(ca: ClassicalAlgebra, rep: Representation, mats: list) -> PolyMap:
    coords = rep.coordinates
    flat = [e for row in mats for e in row]
    d = ca.base.dim
    comps = [c if isinstance(c, Polynomial) else Polynomial.constant(d, c) for c in coords.coords(flat)]
    return PolyMap(d, tuple(comps))


def sp_covariants(n: int, ca: ClassicalAlgebra | None = None) -> list[PolyMap]:
    """``x -> x^{2i} J`` reduced modulo ``kJ``, ``i = 1..n-1``, in ``wedge2_reduced`` coordinates."""
    if n < 2:
        raise ValueError("sp covariants need n >= 2")
    ca = ca or classical("C", n)
    rep = ca.rep("wedge2_reduced")
    j = [list(r) for r in ca.form.matrix]
    jinv = linalg.inverse(j)
    size = 2 * n
    x = generic_matrix(ca.matrices)
    x2 = pmat_mul(x, x)
    out, cur = [], x2
    for i in range(1, n):
        m = pmat_const_mul(cur, j)
        # remove the kJ component: c = tr(J^{-1} M) / tr(J^{-1} J)
        c = pmat_trace(pmat_const_mul(m, jinv, left=True)).scale(Fraction(1, size))
        m = [[m[a][b] - c.scale(j[a][b]) if j[a][b] else m[a][b] for b in range(size)] for a in range(size)]
        out.append(_matrix_covariant(ca, rep, m))
        cur = pmat_mul(cur, x2)
    return out


def so_covariants(N: int, ca: ClassicalAlgebra | None = None) -> list[PolyMap]:
    """``x -> x^{2i}`` minus its trace part in ``sym2_traceless`` coordinates;
    ``i = 1..n`` for ``N = 2n+1`` and ``i = 1..n-1`` for ``N = 2n``."""
    if N < 3:
        raise ValueError("so covariants need N >= 3")
    if ca is None:
        ca = classical("B", N // 2) if N % 2 else classical("D", N // 2)
    count = N // 2 if N % 2 else N // 2 - 1
    rep = ca.rep("sym2_traceless")
    x = generic_matrix(ca.matrices)
    x2 = pmat_mul(x, x)
    out, cur = [], x2
    for _ in range(count):
        t = pmat_trace(cur).scale(Fraction(1, N))
        m = [[cur[a][b] - t if a == b else cur[a][b] for b in range(N)] for a in range(N)]
        out.append(_matrix_covariant(ca, rep, m))
        cur = pmat_mul(cur, x2)
    return out


def equivariance_check(F: PolyMap, rep_in: Representation, rep_out: Representation) -> bool:
    """Symbolic test of ``DF_x(e_i . x) = e_i . F(x)`` for all basis elements."""
    if F.domain_dim != rep_in.dim_module or F.codomain_dim != rep_out.dim_module:
        raise ValueError("covariant shape does not match the modules")
    n = F.domain_dim
    partials = [[c.derivative(k) for k in range(n)] for c in F.components]
    for i in range(rep_in.algebra.dim):
        forms = _action_forms(rep_in, i)
        rho = rep_out.action[i]
        for a, comp in enumerate(F.components):
            # accumulate DF_x(e_i . x) - e_i . F(x) in one term dict
            acc: dict = {}
            for k in range(n):
                if forms[k].terms and partials[a][k].terms:
                    _accumulate_product(acc, forms[k].terms, partials[a][k].terms)
            for b, other in enumerate(F.components):
                if rho[a][b] and other.terms:
                    _accumulate(acc, other.terms, -rho[a][b])
            if acc:
                return False
    return True


# -- Takiffization --------------------------------------------------------------


@dataclass(frozen=True)
class EpsilonExpansion:
    """Coefficients of ``f(x_0 + eps x_1 + ... + eps^n x_n)`` modulo ``eps^{n+1}``.

    Variable ``l * d + i`` is coordinate ``i`` of ``x_l``, matching the basis
    order of :func:`takiff_lab.builders.takiff`.
    """

    level: int
    base_dim: int
    coefficients: tuple

    def blocks_used(self, j: int) -> set[int]:
        return {v // self.base_dim for v in self.coefficients[j].variables()}

    def evaluate(self, blocks: Sequence[Sequence]) -> list:
        point = [c for block in blocks for c in block]
        return [c.evaluate(point) for c in self.coefficients]


def _series_mul(a: list, b: list, n: int) -> list:
    out = [None] * (n + 1)
    for i, p in enumerate(a):
        if p is None or not p.terms:
            continue
        for j in range(n + 1 - i):
            q = b[j]
            if q is None or not q.terms:
                continue
            t = p * q
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    return out


def takiffize_invariant(f: Polynomial, n: int) -> EpsilonExpansion:
    if n < 0:
        raise ValueError("level must be nonnegative")
    d = f.num_vars
    total = (n + 1) * d
    var = [[Polynomial.variable(total, l * d + i) for l in range(n + 1)] for i in range(d)]
    cache: dict = {}

    def power(i: int, a: int) -> list:
        if (i, a) not in cache:
            cache[(i, a)] = var[i] if a == 1 else _series_mul(power(i, a - 1), var[i], n)
        return cache[(i, a)]

    coeffs = [Polynomial(total) for _ in range(n + 1)]
    for e, c in f.items():
        series = [Polynomial.constant(total, c)] + [None] * n
        for i, a in enumerate(e):
            if a:
                series = _series_mul(series, power(i, a), n)
        for j, p in enumerate(series):
            if p is not None and p.terms:
                coeffs[j] = coeffs[j] + p
    return EpsilonExpansion(n, d, tuple(coeffs))


def takiff_generators(fs: Sequence[Polynomial], n: int) -> list[Polynomial]:
    """All ε-coefficients of all ``fs`` (generators for ``k[q<n>]``-invariants)."""
    out = []
    for f in fs:
        out.extend(takiffize_invariant(f, n).coefficients)
    return out


# -- algebraic independence ---------------------------------------------------


def jacobian_at(grads: Sequence[Sequence[Polynomial]], point: Sequence) -> list[list]:
    return [[g.evaluate(point) for g in row] for row in grads]


def independence_rank(fs: Sequence[Polynomial], sample_points: Sequence[Sequence]) -> int:
    """Maximum Jacobian rank of ``fs`` over the sample points (exact)."""
    if not fs:
        return 0
    nv = fs[0].num_vars
    if any(f.num_vars != nv for f in fs):
        raise ValueError("polynomials live in different rings")
    grads = [[f.derivative(k) for k in range(nv)] for f in fs]
    best = 0
    for pt in sample_points:
        best = max(best, linalg.rank(jacobian_at(grads, pt)))
        if best == len(fs):
            break
    return best


def sample_points(num_vars: int, trials: int = 8, seed: int = 0) -> list[list[int]]:
    rng = random.Random(seed)
    pts = []
    for t in range(trials):
        h = 3 + 4 * t
        pts.append([rng.randint(-h, h) for _ in range(num_vars)])
    return pts


@dataclass(frozen=True)
class IndependenceResult:
    status: str  # "independent" or "inconclusive"
    rank: int
    count: int
    seed: int


def certify_independence(fs: Sequence[Polynomial], trials: int = 8, seed: int = 0) -> IndependenceResult:
    """Full Jacobian rank certifies independence; anything less is inconclusive."""
    nv = fs[0].num_vars if fs else 0
    r = independence_rank(fs, sample_points(nv, trials, seed))
    return IndependenceResult("independent" if r == len(fs) else "inconclusive", r, len(fs), seed)


def linear_coordinates(dim: int, total: int) -> list[Polynomial]:
    """The first ``dim`` coordinate functions in a ring of ``total`` variables."""
    return [p.extend(total) for p in linear_forms(dim)]


# -- generator systems for descriptors -----------------------------------------------


@dataclass
class InvariantSystem:
    descriptor: str
    algebra: LieAlgebra
    names: list
    generators: list

    def invariance(self) -> list[bool]:
        rep = adjoint_rep(self.algebra)
        return [is_invariant(rep, f) for f in self.generators]


def _classical_of(descriptor: str) -> ClassicalAlgebra:
    inner = build(descriptor)
    if inner.kind != "classical":
        raise UnsupportedAlgebra(f"no generator system known over {descriptor!r}")
    return inner.data


def invariant_system(descriptor: str) -> InvariantSystem:
    """Basic adjoint invariants ``k[q]^Q`` for an algebra descriptor.

    Supported: classical ``g`` (Casimirs), ``takiff:g:n`` (all
    ε-coefficients of the Casimirs) and ``sd:g:V`` for ``V`` the adjoint,
    ``wedge2`` over C or ``sym2`` over B/D (Casimirs of ``g`` together with
    hat-lifts of the basic covariants).
    """
    built = build(descriptor)
    if built.kind == "classical":
        fs = casimir_generators(built.data)
        return InvariantSystem(descriptor, built.algebra, [f"f{i + 1}" for i in range(len(fs))], fs)
    if built.kind == "takiff":
        head, _, _ = descriptor[len("takiff:"):].rpartition(":")
        fs = casimir_generators(_classical_of(head))
        n = built.data.level
        gens, names = [], []
        for i, f in enumerate(fs):
            for j, c in enumerate(takiffize_invariant(f, n).coefficients):
                gens.append(c)
                names.append(f"f{i + 1}[eps^{j}]")
        return InvariantSystem(descriptor, built.algebra, names, gens)
    if built.kind == "semidirect":
        head, _, repname = descriptor[len("sd:"):].rpartition(":")
        ca = _classical_of(head)
        sd: SemidirectData = built.data
        total = built.algebra.dim
        fs = casimir_generators(ca)
        gens = [f.extend(total) for f in fs]
        names = [f"f{i + 1}" for i in range(len(fs))]
        if repname == "adjoint":
            covs = [differential(f) for f in fs]
            labels = [f"hat(df{i + 1})" for i in range(len(fs))]
        elif repname in ("wedge2", "wedge2_reduced") and ca.type_tag == "C":
            covs = [dualize(F, sd.source_rep.pairing) for F in sp_covariants(ca.rank, ca)]
            labels = [f"hat(x^{2 * (i + 1)}J)" for i in range(len(covs))]
        elif repname in ("sym2", "sym2_traceless") and ca.type_tag in ("B", "D"):
            covs = [dualize(F, sd.source_rep.pairing) for F in so_covariants(ca.size, ca)]
            labels = [f"hat(x^{2 * (i + 1)})" for i in range(len(covs))]
        else:
            raise UnsupportedAlgebra(f"no generator system known for {descriptor!r}")
        gens += [hat_covariant(F, sd) for F in covs]
        names += labels
        return InvariantSystem(descriptor, built.algebra, names, gens)
    raise UnsupportedAlgebra(f"no generator system known for {descriptor!r}")
