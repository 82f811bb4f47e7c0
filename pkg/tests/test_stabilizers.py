import json

import pytest

from takiff_lab import builders, lie, stabilizers as stab
from takiff_lab.lie import SubspaceBasis


def test_elashvili_sl2_adjoint(sl2):
    rep = lie.adjoint_rep(sl2.base)
    h = sl2.base.basis_vector(2)
    e = sl2.base.basis_vector(0)
    assert stab.elashvili_check(rep, h).ok
    bad = stab.elashvili_check(rep, e)
    assert not bad.ok and bad.dims["sum"] == 2


def test_elashvili_shape_check(sl2):
    with pytest.raises(ValueError):
        stab.elashvili_check(lie.adjoint_rep(sl2.base), [1, 0])


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_adjoint_generic_at_regular_semisimple(rank):
    ca = builders.classical("A", rank)
    diag = [[(i + 1) if i == j else 0 for j in range(rank + 1)] for i in range(rank + 1)]
    diag[rank][rank] = -sum(range(1, rank + 1))
    x = ca.coordinates(diag)
    report = stab.adjoint_generic_check(ca.base, x)
    assert report.ok
    assert set(report.checks) == {"commutative_centralizer", "direct_sum", "self_normalizing", "coadjoint_decomposition"}
    assert report.stabilizer.dim == rank


def test_adjoint_generic_fails_on_heisenberg():
    h = builders.heisenberg(1)
    report = stab.adjoint_generic_check(h, [1, 2, 3])
    assert not report.checks["direct_sum"]
    assert "self_normalizing" not in report.checks


def test_coadjoint_heisenberg_stabilizer_is_center():
    h = builders.heisenberg(2)
    xi = [1, 2, 3, 4, 5]
    report = stab.coadjoint_generic_check(h, xi)
    assert report.ok
    assert report.stabilizer.dim == 1 and report.stabilizer.contains(h.basis_vector(h.basis_index("z")))


def test_coadjoint_borel_sl2():
    b = builders.build("borel:A1").algebra
    report = stab.coadjoint_generic_check(b, [1, 1])
    assert report.stabilizer.dim == 0 and report.ok


def test_near_toral(sl2):
    g = sl2.base
    assert stab.near_toral_check(g, SubspaceBasis.span([g.basis_vector(2)], 3))
    assert not stab.near_toral_check(g, SubspaceBasis.span([g.basis_vector(0)], 3))
    h = builders.heisenberg(1)
    assert stab.near_toral_check(h, lie.center(h))
    with pytest.raises(ValueError):
        stab.near_toral_check(g, SubspaceBasis.span([g.basis_vector(0), g.basis_vector(1)], 3))


@pytest.mark.parametrize("type_tag, rank, module", [
    ("A", 1, "adjoint"), ("A", 2, "defining"), ("A", 2, "adjoint"), ("B", 1, "sym2_traceless"),
])
def test_sgp_transfer_reductive(type_tag, rank, module):
    ca = builders.classical(type_tag, rank)
    rep = lie.adjoint_rep(ca.base) if module == "adjoint" else ca.rep(module)
    sd = builders.semidirect(ca.base, rep)
    x = stab.sample_generic(ca.base, 8, 0)
    report = stab.sgp_transfer_check(sd, x, seed=0)
    assert report.ok and report.checks["lift_is_generic"]


def test_sgp_transfer_fails_at_nilpotent(sl2):
    sd = builders.semidirect(sl2.base, lie.adjoint_rep(sl2.base))
    report = stab.sgp_transfer_check(sd, sl2.base.basis_vector(0))
    assert not report.ok and "lift_is_generic" not in report.checks


def test_yakoby_borel_sl4():
    b = builders.build("borel:A3").algebra
    xi = lie.generic_covector(b, 8, 0)
    h = lie.coadjoint_stabilizer(b, xi)
    report = stab.yakoby_identities(b, h, xi)
    assert report.ok and report.index_q == report.index_centralizer == report.dim_h == 1


def test_yakoby_rejects_wrong_stabilizer(sl2):
    with pytest.raises(ValueError):
        stab.yakoby_identities(sl2.base, SubspaceBasis.span([sl2.base.basis_vector(0)], 3), xi=[0, 0, 1])


@pytest.mark.parametrize("descriptor, expected", [
    ("z2:A1:so", 1), ("z2:A2:so", 2), ("z2:A3:so", 3), ("z2:A3:sp", 3), ("z2:A1:swap", 2), ("z2:A2:swap", 4),
])
def test_contraction_dims_agree(descriptor, expected):
    cd = stab.contraction_dims(builders.build(descriptor).data)
    assert cd.agree and cd.method_a == cd.method_b == cd.index == cd.rank_g == expected


def test_contraction_dims_needs_ambient(sl2):
    sd = builders.semidirect(sl2.base, lie.adjoint_rep(sl2.base))
    with pytest.raises(ValueError):
        stab.contraction_dims(sd)


def test_report_serialisation(sl2):
    report = stab.adjoint_generic_check(sl2.base, [0, 0, 1])
    data = json.loads(report.to_json())
    assert data["point"] == ["0", "0", "1"] and data["checks"]["direct_sum"] is True


def test_sampling_is_deterministic(sl3):
    assert stab.sample_generic(sl3.base, 4, 11) == stab.sample_generic(sl3.base, 4, 11)


def test_heisenberg_takiff_versus_cotangent():
    h = builders.heisenberg(1)
    tak = builders.takiff(h, 1).total
    cot = builders.semidirect(h, lie.dual_rep(lie.adjoint_rep(h))).total
    for seed in (0, 1, 2):
        assert stab.coadjoint_generic_check(tak, lie.generic_covector(tak, 8, seed)).ok
        assert not stab.coadjoint_generic_check(cot, lie.generic_covector(cot, 8, seed)).ok
