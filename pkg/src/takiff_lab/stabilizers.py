"""Generic-stabiliser criteria as exact rank computations.

Each check works at one explicit point and is a certificate for that
point.  Genericity over the whole space is approached by sampling integer
points of growing height, as in :func:`takiff_lab.lie.index`.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .builders import SemidirectData
from .lie import (
    LieAlgebra,
    Representation,
    SubspaceBasis,
    ad_matrix,
    bracket_space,
    centralizer,
    centralizer_of_subspace,
    coadjoint_stabilizer,
    image,
    index,
    is_commutative,
    is_subalgebra,
    normalizer,
    random_nonzero_vector,
    sample_height,
    subalgebra,
)


@dataclass
class GenericityReport:
    point: list
    stabilizer: SubspaceBasis
    checks: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "point": [linalg.format_rational(c) for c in self.point],
            "checks": dict(self.checks),
            "dims": dict(self.dims),
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _spans_all(a: SubspaceBasis, b: SubspaceBasis) -> bool:
    if a.ambient_dim == 0:
        return True
    vecs = list(a.vectors) + list(b.vectors)
    return bool(vecs) and linalg.rank(vecs) == a.ambient_dim


def _direct_sum_is_all(a: SubspaceBasis, b: SubspaceBasis) -> bool:
    return a.dim + b.dim == a.ambient_dim and _spans_all(a, b)


def elashvili_check(rep: Representation, v: Sequence) -> GenericityReport:
    """``V = q.v + V^{q_v}``."""
    if len(v) != rep.dim_module:
        raise ValueError("vector length does not match the module")
    qv = rep.stabilizer(v)
    fixed = rep.fixed_space(qv)
    tangent = rep.orbit_tangent(v)
    total = fixed.sum(tangent)
    return GenericityReport(
        list(v), qv,
        {"tangent_plus_fixed_is_V": total.dim == rep.dim_module},
        {"stabilizer": qv.dim, "fixed_space": fixed.dim, "orbit_tangent": tangent.dim, "sum": total.dim},
    )


def coadjoint_matrix(alg: LieAlgebra, x: Sequence) -> list:
    """Matrix of ``x`` acting on ``q*`` in the dual basis: ``-(ad x)^T``."""
    return [[linalg.norm(-c) for c in row] for row in linalg.transpose(ad_matrix(alg, x))]


def adjoint_generic_check(alg: LieAlgebra, x: Sequence) -> GenericityReport:
    """``z_q(x)`` commutative and ``[q, x] ⊕ z_q(x) = q``.

    When both hold the report also carries the side conditions
    ``n_q(z_q(x)) = z_q(x)`` and ``q* = x.q* ⊕ (q*)^x``.
    """
    n = alg.dim
    ad = ad_matrix(alg, x)
    z = centralizer(alg, x)
    qx = image(ad) if n else SubspaceBasis.zero(0)
    checks = {
        "commutative_centralizer": is_commutative(z, alg),
        "direct_sum": _direct_sum_is_all(qx, z),
    }
    dims = {"centralizer": z.dim, "orbit_tangent": qx.dim}
    if all(checks.values()):
        norm_z = normalizer(alg, z)
        checks["self_normalizing"] = norm_z.dim == z.dim and norm_z.contains_subspace(z)
        co = coadjoint_matrix(alg, x)
        tangent = image(co)
        fixed = SubspaceBasis.span(linalg.nullspace(co, n), n)
        checks["coadjoint_decomposition"] = _direct_sum_is_all(tangent, fixed)
        dims["coadjoint_fixed"] = fixed.dim
    return GenericityReport(list(x), z, checks, dims)


def coadjoint_generic_check(alg: LieAlgebra, xi: Sequence) -> GenericityReport:
    """``q_xi ∩ [q, q_xi] = 0``; if it holds, ``q_xi`` is also checked to be commutative."""
    n = alg.dim
    stab = coadjoint_stabilizer(alg, xi)
    br = bracket_space(alg, SubspaceBasis.whole(n), stab)
    inter = stab.intersection_dim(br)
    checks = {"stabilizer_meets_derived_trivially": inter == 0}
    if inter == 0:
        checks["commutative_stabilizer"] = is_commutative(stab, alg)
    return GenericityReport(list(xi), stab, checks, {"stabilizer": stab.dim, "bracket_space": br.dim, "intersection": inter})


def near_toral_check(alg: LieAlgebra, h: SubspaceBasis) -> bool:
    """``[q, h] ∩ z_q(h) = 0``."""
    if not is_subalgebra(h, alg):
        raise ValueError("h is not closed under the bracket")
    br = bracket_space(alg, SubspaceBasis.whole(alg.dim), h)
    return br.intersection_dim(centralizer_of_subspace(alg, h)) == 0


def sgp_transfer_check(sd: SemidirectData, x: Sequence, seed: int = 0) -> GenericityReport:
    """``V^x = V^{z(x)}`` and ``V^x ⊕ x.V = V`` for ``x`` in ``g``.

    When both hold, ``x + v`` for a random ``v`` in ``V^{z(x)}`` is fed to
    :func:`adjoint_generic_check` on ``q ⋉ V`` as a closed-loop test.
    """
    rep = sd.source_rep
    alg = rep.algebra
    m = rep.dim_module
    rho = rep.matrix_of(x)
    vx = SubspaceBasis.span(linalg.nullspace(rho, m), m)
    z = centralizer(alg, x)
    vz = rep.fixed_space(z)
    xv = image(rho) if m else SubspaceBasis.zero(0)
    checks = {
        "fixed_spaces_agree": vx.dim == vz.dim and vx.contains_subspace(vz),
        "fixed_plus_image_is_V": _direct_sum_is_all(vx, xv),
    }
    dims = {"V^x": vx.dim, "V^z(x)": vz.dim, "x.V": xv.dim, "centralizer": z.dim}
    if all(checks.values()):
        rng = random.Random(seed)
        v = [0] * m
        for b in vz.vectors:
            c = rng.randint(1, 9)
            v = [vi + c * bi for vi, bi in zip(v, b)]
        point = list(x) + [linalg.norm(c) for c in v]
        lifted = adjoint_generic_check(sd.total, point)
        checks["lift_is_generic"] = lifted.checks["commutative_centralizer"] and lifted.checks["direct_sum"]
        dims["lift_centralizer"] = lifted.stabilizer.dim
    return GenericityReport(list(x), vx, checks, dims, seed)


@dataclass
class YakobyReport:
    near_toral: bool
    decomposition: bool
    index_q: int
    index_centralizer: int
    dim_h: int

    @property
    def ok(self) -> bool:
        return self.near_toral and self.decomposition and self.index_q == self.index_centralizer == self.dim_h


def yakoby_identities(alg: LieAlgebra, h: SubspaceBasis, xi: Sequence | None = None,
                      trials: int = 8, seed: int = 0) -> YakobyReport:
    """``[q,h] ⊕ z_q(h) = q`` and ``ind q = ind z_q(h) = dim h``."""
    if xi is not None:
        stab = coadjoint_stabilizer(alg, xi)
        if not (stab.dim == h.dim and stab.contains_subspace(h)):
            raise ValueError("h is not the coadjoint stabiliser of the supplied covector")
    nt = near_toral_check(alg, h)
    br = bracket_space(alg, SubspaceBasis.whole(alg.dim), h)
    zh = centralizer_of_subspace(alg, h)
    decomposition = _direct_sum_is_all(br, zh)
    zalg = subalgebra(alg, zh)
    return YakobyReport(nt, decomposition, index(alg, trials, seed), index(zalg, trials, seed), h.dim)


@dataclass
class ContractionDims:
    rank_h: int
    fixed_m: int
    method_a: int
    method_b: int
    index: int
    rank_g: int | None = None
    seed: int = 0

    @property
    def agree(self) -> bool:
        return self.method_a == self.method_b

    def to_dict(self) -> dict:
        return {
            "rank_h": self.rank_h, "dim_m^t": self.fixed_m, "method_a": self.method_a,
            "method_b": self.method_b, "index": self.index, "rank_g": self.rank_g, "seed": self.seed,
        }


def _generic_in(alg: LieAlgebra, vectors: Sequence[Sequence], trials: int, seed: int) -> tuple[list, int]:
    """Random combination of ``vectors`` with the smallest centraliser in ``alg``; returns (point, dim)."""
    rng = random.Random(seed)
    best = None
    for t in range(trials):
        coeffs = random_nonzero_vector(rng, len(vectors), sample_height(t))
        x = [0] * alg.dim
        for c, v in zip(coeffs, vectors):
            if c:
                x = [a + c * b for a, b in zip(x, v)]
        x = [linalg.norm(a) for a in x]
        dim = centralizer(alg, x).dim
        if best is None or dim < best[1]:
            best = (x, dim)
    return best


def contraction_dims(sd: SemidirectData, g_ref: LieAlgebra | None = None,
                     trials: int = 8, seed: int = 0) -> ContractionDims:
    """``dim ka//K`` two ways for ``ka = g_0 ⋉ g_1``.

    (a) ``rk g_0 + dim g_1^{t}`` with ``t`` the centraliser of a generic
    element of ``g_0`` (a Cartan subalgebra, ``g_0`` being reductive);
    (b) ``dim z_g(x)`` for the same kind of element taken in ``g``.
    """
    g = g_ref if g_ref is not None else sd.ambient
    if g is None or sd.plus_basis is None:
        raise ValueError("contraction data does not record its ambient algebra")
    h = sd.source_rep.algebra
    y, rank_h = _generic_in(h, [h.basis_vector(i) for i in range(h.dim)], trials, seed)
    t = centralizer(h, y)
    fixed = sd.source_rep.fixed_space(t)
    _, zdim = _generic_in(g, sd.plus_basis, trials, seed)
    rank_g = _generic_in(g, [g.basis_vector(i) for i in range(g.dim)], trials, seed)[1]
    return ContractionDims(rank_h, fixed.dim, rank_h + fixed.dim, zdim, index(sd.total, trials, seed), rank_g, seed)


def sample_generic(alg: LieAlgebra, trials: int = 8, seed: int = 0) -> list:
    """A sampled point with the smallest centraliser (the ``best`` sample)."""
    return _generic_in(alg, [alg.basis_vector(i) for i in range(alg.dim)], trials, seed)[0]
