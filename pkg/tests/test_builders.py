import pytest

from takiff_lab import builders, linalg, lie
from takiff_lab.builders import UnsupportedAlgebra


@pytest.mark.parametrize("type_tag, rank, dim", [
    ("A", 1, 3), ("A", 3, 15), ("B", 2, 10), ("C", 2, 10), ("C", 3, 21), ("D", 3, 15), ("D", 4, 28),
])
def test_classical_dimensions(type_tag, rank, dim):
    ca = builders.classical(type_tag, rank)
    assert ca.base.dim == dim == builders.classical_dimension(type_tag, rank)
    assert lie.check_jacobi(ca.base).ok


@pytest.mark.parametrize("type_tag, rank", [("A", 2), ("B", 2), ("C", 2), ("D", 3), ("C", 3)])
def test_catalog_reps_are_homomorphisms(type_tag, rank):
    ca = builders.classical(type_tag, rank)
    for name in ca.rep_names:
        assert lie.check_homomorphism(ca.rep(name))[0], name


@pytest.mark.parametrize("type_tag, rank, name, dim", [
    ("B", 2, "sym2_traceless", 14), ("D", 3, "sym2_traceless", 20), ("C", 2, "wedge2_reduced", 5),
    ("C", 3, "wedge2_reduced", 14), ("A", 2, "defining", 3),
])
def test_catalog_module_dimensions(type_tag, rank, name, dim):
    assert builders.classical(type_tag, rank).rep(name).dim_module == dim


def test_invariant_pairing_on_modules():
    ca = builders.classical("C", 2)
    rep = ca.rep("wedge2_reduced")
    g = rep.pairing
    # <x.u, w> + <u, x.w> = 0 for every basis element x
    for m in rep.action:
        lhs = linalg.matmul(linalg.transpose(m), g)
        assert linalg.matadd(lhs, linalg.matmul(g, m)) == linalg.zeros(5, 5)


def test_cartan_is_commutative(sp4):
    h = sp4.cartan()
    assert h.dim == 2 and lie.is_commutative(h, sp4.base)


def test_coordinates_roundtrip(sl3):
    x = [1, -2, 3, 0, 5, 1, 2, -1]
    assert sl3.coordinates(sl3.element_matrix(x)) == x
    with pytest.raises(ValueError):
        sl3.coordinates([[1, 0, 0], [0, 0, 0], [0, 0, 0]])


def test_heisenberg_and_borel():
    h = builders.heisenberg(2)
    assert h.dim == 5 and lie.check_jacobi(h).ok
    b = builders.borel(builders.classical("A", 3))
    assert b.dim == 9 and lie.check_jacobi(b).ok


def test_takiff_level_one_is_semidirect_adjoint(sl3):
    g = sl3.base
    assert lie.structure_equal(builders.takiff(g, 1).total, builders.semidirect(g, lie.adjoint_rep(g)).total)


@pytest.mark.parametrize("k", [1, 2])
def test_swap_contraction_is_takiff(k):
    g = builders.classical("A", k).base
    sd = builders.build(f"z2:A{k}:swap").data
    assert lie.structure_equal(sd.total, builders.takiff(g, 1).total)


@pytest.mark.parametrize("pair, plus, minus", [
    ("A2:so", 3, 5), ("A3:so", 6, 9), ("A3:sp", 10, 5), ("A1:swap", 3, 3),
])
def test_involution_eigenspaces(pair, plus, minus):
    inv = builders.standard_involution(pair)
    assert inv.is_involutive() and inv.is_automorphism()
    assert inv.eigenspace(1).dim == plus and inv.eigenspace(-1).dim == minus
    sd = builders.z2_contraction(inv.algebra, inv)
    assert builders.grading_holds(inv.algebra, sd)
    assert lie.check_jacobi(sd.total).ok


def test_takiffize_module_is_rep(sl2):
    rep = builders.takiffize_module(sl2.rep("defining"))
    assert rep.dim_module == 4 and lie.check_homomorphism(rep)[0]


def test_semidirect_rejects_bad_rep(sl2):
    bad = lie.Representation(sl2.base, 1, [[[1]], [[1]], [[0]]])
    with pytest.raises(builders.RepresentationError):
        builders.semidirect(sl2.base, bad)


@pytest.mark.parametrize("type_tag, parts", [
    ("A", (3, 1)), ("A", (2, 2, 1)), ("B", (3, 1, 1)), ("B", (2, 2, 1)), ("C", (4, 2)),
    ("C", (3, 3)), ("C", (2, 1, 1)), ("D", (3, 1)), ("D", (2, 2, 2, 2)), ("D", (5, 3)),
])
def test_nilpotent_models_have_jordan_type(type_tag, parts):
    model = builders.nilpotent_from_partition(type_tag, parts)
    x = model.matrix
    size = sum(parts)
    power = x
    for k in range(1, size + 1):
        assert linalg.rank(power) == sum(max(p - k, 0) for p in parts)
        power = linalg.matmul(power, x)
    # the element lies in the ambient algebra
    assert model.algebra.element_matrix(model.element) == x


@pytest.mark.parametrize("type_tag, parts", [("B", (2, 1)), ("C", (3,)), ("D", (2, 1, 1)), ("A", (0,))])
def test_nilpotent_rejects_bad_partitions(type_tag, parts):
    with pytest.raises(ValueError):
        builders.nilpotent_from_partition(type_tag, parts)


@pytest.mark.parametrize("descriptor, kind, dim", [
    ("A3", "classical", 15), ("heis2", "heisenberg", 5), ("borel:A2", "borel", 5),
    ("takiff:A1:2", "takiff", 9), ("z2:A3:so", "z2", 15), ("z2:A3:sp", "z2", 15),
    ("sd:A1:adjoint", "semidirect", 6), ("sd:C2:wedge2", "semidirect", 15), ("sd:B2:sym2", "semidirect", 24),
])
def test_descriptors(descriptor, kind, dim):
    built = builders.build(descriptor)
    assert built.kind == kind and built.algebra.dim == dim


@pytest.mark.parametrize("descriptor", ["E6", "foo", "takiff:A1:x", "sd:A1:bogus", "z2:B2:so", "borel:heis1", "A0"])
def test_unknown_descriptors(descriptor):
    with pytest.raises(UnsupportedAlgebra):
        builders.build(descriptor)


def test_rank_cap():
    with pytest.raises(UnsupportedAlgebra):
        builders.classical("A", 13)
    with pytest.raises(UnsupportedAlgebra):
        builders.classical("C", 3, max_rank=2)
    assert builders.classical("C", 3, max_rank=3).rank == 3
