import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from takiff_lab import builders, invariants as inv, lie, linalg
from takiff_lab.polynomial import Polynomial


def _vars(n):
    return [Polynomial.variable(n, i) for i in range(n)]


def test_sl2_casimir_frozen(sl2):
    # basis E12, E21, H1: x = [[h, e], [f, -h]], e_2 = det x = -h^2 - e f
    (f,) = inv.casimir_generators(sl2)
    e, ff, h = _vars(3)
    assert f == -(e * ff) - h * h


@pytest.mark.parametrize("type_tag, rank, degrees", [
    ("A", 1, [2]), ("A", 2, [2, 3]), ("A", 3, [2, 3, 4]), ("B", 2, [2, 4]),
    ("C", 2, [2, 4]), ("D", 2, [2, 2]), ("D", 3, [2, 4, 3]),
])
def test_casimirs_are_invariant(type_tag, rank, degrees):
    ca = builders.classical(type_tag, rank)
    fs = inv.casimir_generators(ca)
    assert [f.degree() for f in fs] == degrees
    rep = lie.adjoint_rep(ca.base)
    assert all(inv.is_invariant(rep, f) for f in fs)
    assert inv.certify_independence(fs).status == "independent"


def test_non_invariant_is_detected(sl2):
    rep = lie.adjoint_rep(sl2.base)
    x0 = Polynomial.variable(3, 0)
    assert inv.invariance_failures(rep, x0) == [0, 2]
    with pytest.raises(ValueError):
        inv.lie_derivative(rep, Polynomial.variable(2, 0), 0)


def test_pfaffian_4x4_frozen():
    a = _vars(6)
    m = [[0, a[0], a[1], a[2]], [-a[0], 0, a[3], a[4]], [-a[1], -a[3], 0, a[5]], [-a[2], -a[4], -a[5], 0]]
    assert inv.pfaffian(m) == a[0] * a[5] - a[1] * a[4] + a[2] * a[3]
    assert inv.pfaffian([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]) == 0


skew6 = st.lists(st.integers(-4, 4), min_size=15, max_size=15)


@given(skew6)
@settings(max_examples=40, deadline=None)
def test_pfaffian_squares_to_det(entries):
    n = 6
    m = [[0] * n for _ in range(n)]
    it = iter(entries)
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = next(it)
            m[j][i] = -m[i][j]
    assert inv.pfaffian(m) ** 2 == linalg.det(m)


def test_takiffize_sl2_frozen(sl2):
    (f,) = inv.casimir_generators(sl2)
    exp = inv.takiffize_invariant(f, 2)
    x = _vars(9)
    assert exp.coefficients[0] == f.extend(9)
    assert exp.coefficients[1] == -(x[0] * x[4]) - x[1] * x[3] - x[2] * x[5] * 2
    assert exp.coefficients[2] == -(x[0] * x[7]) - x[1] * x[6] - x[2] * x[8] * 2 - x[3] * x[4] - x[5] * x[5]
    assert exp.blocks_used(1) == {0, 1}
    assert exp.blocks_used(2) == {0, 1, 2}


@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6), st.integers(-3, 3))
@settings(max_examples=30, deadline=None)
def test_epsilon_expansion_matches_direct_series(blocks, t):
    # f(x0 + t x1) = c0(x0, x1) + t c1(x0, x1) exactly when truncation is irrelevant (n = degree)
    f = inv.casimir_generators(builders.classical("A", 1))[0]
    exp = inv.takiffize_invariant(f, 2)
    x0, x1 = blocks[:3], blocks[3:]
    c = exp.evaluate([x0, x1, [0, 0, 0]])
    assert f.evaluate([a + t * b for a, b in zip(x0, x1)]) == c[0] + t * c[1] + t * t * c[2]


@pytest.mark.parametrize("type_tag, rank, level, expected", [
    ("A", 1, 1, 2), ("A", 1, 2, 3), ("A", 2, 1, 4), ("A", 2, 2, 6), ("C", 2, 1, 4), ("C", 2, 2, 6),
])
def test_takiff_generators(type_tag, rank, level, expected):
    ca = builders.classical(type_tag, rank)
    gens = inv.takiff_generators(inv.casimir_generators(ca), level)
    rep = lie.adjoint_rep(builders.takiff(ca.base, level).total)
    assert len(gens) == expected
    assert all(inv.is_invariant(rep, g) for g in gens)
    assert inv.certify_independence(gens).rank == expected


@pytest.mark.parametrize("k", [1, 2])
def test_hat_of_identity_on_adjoint(k):
    ca = builders.classical("A", k)
    g = ca.base
    sd = builders.semidirect(g, lie.adjoint_rep(g))
    gram = [[linalg.trace(linalg.matmul(a, b)) for b in ca.matrices] for a in ca.matrices]
    ident = inv.PolyMap(g.dim, tuple(_vars(g.dim)))
    h = inv.hat_covariant(inv.dualize(ident, gram), sd)
    assert inv.is_invariant(lie.adjoint_rep(sd.total), h)


def test_hat_of_sp4_covariant(sp4):
    rep = sp4.rep("wedge2_reduced")
    (F,) = inv.sp_covariants(2, sp4)
    assert inv.equivariance_check(F, lie.adjoint_rep(sp4.base), rep)
    Fd = inv.dualize(F, rep.pairing)
    assert inv.equivariance_check(Fd, lie.adjoint_rep(sp4.base), lie.dual_rep(rep))
    sd = builders.semidirect(sp4.base, rep)
    h = inv.hat_covariant(Fd, sd)
    assert h.degree() == 3 and inv.is_invariant(lie.adjoint_rep(sd.total), h)


def test_hat_shape_mismatch(sl2):
    sd = builders.semidirect(sl2.base, sl2.rep("defining"))
    with pytest.raises(ValueError):
        inv.hat_covariant(inv.PolyMap(3, tuple(_vars(3))), sd)


def test_non_equivariant_map_fails(sl2):
    rep = lie.adjoint_rep(sl2.base)
    x = _vars(3)
    F = inv.PolyMap(3, (x[0], x[0], x[2]))
    assert not inv.equivariance_check(F, rep, rep)


@pytest.mark.parametrize("n", [2, 3])
def test_sp_covariants_equivariant(n):
    ca = builders.classical("C", n)
    rep_in, rep_out = lie.adjoint_rep(ca.base), ca.rep("wedge2_reduced")
    covs = inv.sp_covariants(n, ca)
    assert len(covs) == n - 1
    assert all(inv.equivariance_check(F, rep_in, rep_out) for F in covs)


@pytest.mark.parametrize("N", [3, 5, pytest.param(7, marks=pytest.mark.slow), pytest.param(8, marks=pytest.mark.slow)])
def test_so_covariants_equivariant(N):
    ca = builders.classical("B" if N % 2 else "D", N // 2)
    covs = inv.so_covariants(N, ca)
    assert len(covs) == (N // 2 if N % 2 else N // 2 - 1)
    rep_in, rep_out = lie.adjoint_rep(ca.base), ca.rep("sym2_traceless")
    assert all(inv.equivariance_check(F, rep_in, rep_out) for F in covs)


def test_covariant_argument_checks():
    with pytest.raises(ValueError):
        inv.sp_covariants(1)
    with pytest.raises(ValueError):
        inv.so_covariants(2)


def test_differential_and_directional(sl2):
    (f,) = inv.casimir_generators(sl2)
    df = inv.differential(f)
    assert df.evaluate([1, 2, 3]) == [-2, -1, -6]
    assert inv.directional_derivative(f, [1, 2, 3], [1, 0, 0]) == -2


def test_dependent_system_is_inconclusive(sl2):
    (f,) = inv.casimir_generators(sl2)
    res = inv.certify_independence([f, f * f])
    assert res.status == "inconclusive" and res.rank == 1 and res.count == 2


def test_sample_points_deterministic():
    assert inv.sample_points(4, 3, 5) == inv.sample_points(4, 3, 5)
    assert inv.sample_points(4, 3, 5) != inv.sample_points(4, 3, 6)


@pytest.mark.parametrize("descriptor, names", [
    ("A1", ["f1"]),
    ("sd:A1:adjoint", ["f1", "hat(df1)"]),
    ("takiff:A1:1", ["f1[eps^0]", "f1[eps^1]"]),
    ("sd:C2:wedge2", ["f1", "f2", "hat(x^2J)"]),
    ("sd:B2:sym2", ["f1", "f2", "hat(x^2)", "hat(x^4)"]),
])
def test_invariant_systems(descriptor, names):
    system = inv.invariant_system(descriptor)
    assert system.names == names
    assert all(system.invariance())
    assert inv.certify_independence(system.generators).status == "independent"


@pytest.mark.parametrize("descriptor", ["heis1", "sd:A1:trivial", "z2:A3:so", "sd:A2:sym2"])
def test_invariant_system_unsupported(descriptor):
    with pytest.raises((builders.UnsupportedAlgebra, builders.RepresentationError)):
        inv.invariant_system(descriptor)
