"""Acceptance criteria 1-10, each exact and each reported on one line.

Run ``pytest tests/test_acceptance.py -v`` (the summary lines are printed at
the end of the session) or ``python tests/test_acceptance.py``.
"""

import time

import pytest

from takiff_lab import builders, invariants as inv, lie, linalg, orbits, stabilizers as stab
from takiff_lab.polynomial import Polynomial

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")


def report_lines() -> list[str]:
    return [f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})" for n, (ok, detail) in sorted(RESULTS.items())]


CLASSICAL = ([("A", r) for r in range(1, 6)]
             + [("B", 1), ("D", 2), ("B", 2), ("D", 3), ("B", 3), ("D", 4), ("B", 4), ("D", 5)]
             + [("C", r) for r in (2, 3, 4)])


def criterion_1():
    failures, count = [], 0
    start = time.perf_counter()

    def check(name, alg):
        nonlocal count
        count += 1
        if not lie.check_jacobi(alg).ok:
            failures.append(name)

    for t, r in CLASSICAL:
        ca = builders.classical(t, r)
        check(f"{t}{r}", ca.base)
        check(f"takiff:{t}{r}:1", builders.takiff(ca.base, 1).total)
        for name in ca.rep_names:
            check(f"sd:{t}{r}:{name}", builders.semidirect(ca.base, ca.rep(name)).total)
    for n in (1, 2, 3):
        h = builders.heisenberg(n)
        check(f"heis{n}", h)
        check(f"takiff:heis{n}:1", builders.takiff(h, 1).total)
        check(f"sd:heis{n}:coadjoint", builders.semidirect(h, lie.dual_rep(lie.adjoint_rep(h))).total)
    for r in range(1, 5):
        b = builders.borel(builders.classical("A", r))
        check(f"borel:A{r}", b)
        check(f"takiff:borel:A{r}:1", builders.takiff(b, 1).total)
        check(f"sd:borel:A{r}:coadjoint", builders.semidirect(b, lie.dual_rep(lie.adjoint_rep(b))).total)
    pairs = [f"A{r}:so" for r in range(1, 6)] + ["A1:sp", "A3:sp", "A5:sp"] + [f"A{r}:swap" for r in range(1, 4)]
    for pair in pairs:
        i = builders.standard_involution(pair)
        sd = builders.z2_contraction(i.algebra, i)
        check(f"z2:{pair}", sd.total)
        if not builders.grading_holds(i.algebra, sd):
            failures.append(f"grading z2:{pair}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    return ok, f"{count} algebras, {elapsed:.1f}s" + (f", failures {failures}" if failures else "")


def criterion_2():
    bad = []
    for t in "ABCD":
        for r in range(1, 6):
            if t == "D" and r < 2:
                continue
            alg = builders.classical(t, r).base
            if lie.index(alg) != r:
                bad.append(f"{t}{r}")
    for name, q in [("sl2", builders.classical("A", 1).base), ("sl3", builders.classical("A", 2).base),
                    ("heis1", builders.heisenberg(1))]:
        base = lie.index(q)
        for n in (1, 2, 3):
            if lie.index(builders.takiff(q, n).total) != (n + 1) * base:
                bad.append(f"takiff {name} {n}")
    for pair, rk in [("A2:so", 2), ("A3:sp", 3), ("A3:so", 3), ("A1:swap", 2)]:
        if lie.index(builders.build(f"z2:{pair}").algebra) != rk:
            bad.append(f"z2:{pair}")
    for n in (1, 2, 3):
        if lie.index(builders.heisenberg(n)) != 1:
            bad.append(f"heis{n}")
    for n in range(2, 6):
        if lie.index(builders.borel(builders.classical("A", n - 1))) != (n - 1) // 2:
            bad.append(f"borel sl{n}")
    return not bad, "all identities hold" if not bad else f"failures {bad}"


def criterion_3():
    bad = []
    for k in (1, 2):
        g = builders.classical("A", k).base
        sd = builders.build(f"z2:A{k}:swap").data
        if not lie.structure_equal(sd.total, builders.takiff(g, 1).total):
            bad.append(f"sl{k + 1}")
    return not bad, "structure constants equal for sl2, sl3" if not bad else f"failures {bad}"


def criterion_4():
    bad = []
    for t, r in [("A", 1), ("A", 2), ("C", 2)]:
        ca = builders.classical(t, r)
        fs = inv.casimir_generators(ca)
        for n in (1, 2):
            gens = inv.takiff_generators(fs, n)
            rep = lie.adjoint_rep(builders.takiff(ca.base, n).total)
            if not all(inv.is_invariant(rep, g) for g in gens):
                bad.append(f"{t}{r} n={n} invariance")
            if inv.certify_independence(gens).rank != (n + 1) * r:
                bad.append(f"{t}{r} n={n} rank")
    return not bad, "sl2, sl3, sp4 at n=1,2" if not bad else f"failures {bad}"


def criterion_5():
    bad = []
    for k in (1, 2):
        ca = builders.classical("A", k)
        g = ca.base
        sd = builders.semidirect(g, lie.adjoint_rep(g))
        gram = [[linalg.trace(linalg.matmul(a, b)) for b in ca.matrices] for a in ca.matrices]
        ident = inv.PolyMap(g.dim, tuple(Polynomial.variable(g.dim, i) for i in range(g.dim)))
        if not inv.is_invariant(lie.adjoint_rep(sd.total), inv.hat_covariant(inv.dualize(ident, gram), sd)):
            bad.append(f"sl{k + 1}")
    ca = builders.classical("C", 2)
    rep = ca.rep("wedge2_reduced")
    sd = builders.semidirect(ca.base, rep)
    (F,) = inv.sp_covariants(2, ca)
    if not inv.is_invariant(lie.adjoint_rep(sd.total), inv.hat_covariant(inv.dualize(F, rep.pairing), sd)):
        bad.append("sp4")
    return not bad, "sl2, sl3 identity and sp4 x^2 J" if not bad else f"failures {bad}"


def criterion_6():
    bad = []
    for n in (2, 3):
        ca = builders.classical("C", n)
        if not all(inv.equivariance_check(F, lie.adjoint_rep(ca.base), ca.rep("wedge2_reduced"))
                   for F in inv.sp_covariants(n, ca)):
            bad.append(f"sp{2 * n}")
    for N in (5, 7, 8):
        ca = builders.classical("B" if N % 2 else "D", N // 2)
        if not all(inv.equivariance_check(F, lie.adjoint_rep(ca.base), ca.rep("sym2_traceless"))
                   for F in inv.so_covariants(N, ca)):
            bad.append(f"so{N}")
    return not bad, "sp4, sp6, so5, so7, so8" if not bad else f"failures {bad}"


def _valid_sizes(t: str):
    return {"A": range(2, 9), "B": (3, 5, 7), "C": (2, 4, 6, 8), "D": (4, 6, 8)}[t]


def criterion_7():
    bad, count = [], 0
    start = time.perf_counter()
    for t in "ABCD":
        for size in _valid_sizes(t):
            for p in orbits.enumerate_partitions(t, size):
                count += 1
                o = orbits.matrix_oracle(p)
                if not (o.jordan_ok and o.centralizer_dim == orbits.centralizer_dim(t, p)
                        and o.stratum_index == orbits.stratum_index(t, p)
                        and o.rank_dpi == orbits.rank_dpi(t, p)):
                    bad.append(f"{t}:{p}")
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 180, f"{count} partitions, {elapsed:.1f}s" + (f", mismatches {bad}" if bad else "")


def _subregular(t: str, r: int) -> tuple:
    return {"A": (r, 1), "B": (2 * r - 1, 1, 1), "C": (2 * r - 2, 2), "D": (2 * r - 3, 3)}[t]


def criterion_8():
    bad, checked = [], 0
    start = time.perf_counter()
    for t in "ABCD":
        rep = orbits.sweep("bril_takiff", t, 10)
        checked += len(rep.records)
        if rep.violations or rep.equivalence_failures:
            bad.append(f"bril-takiff {t}")
        eq = {p.parts for p in rep.equality_cases}
        if t == "A" and eq != {rec.partition.parts for rec, _ in rep.records if len(rec.partition.parts) <= 2}:
            bad.append("equality set A")
        if t == "C" and eq != {rec.partition.parts for rec, _ in rep.records if orbits.dual(rec.partition)[0] <= 2}:
            bad.append("equality set C")
    for t, r in [("C", 10), ("B", 9), ("D", 10)]:
        rep = orbits.sweep("brilliant", t, r)
        checked += len(rep.records)
        if rep.violations:
            bad.append(f"brilliant {t}")
    for t in "ABCD":
        two = orbits.not_vain_bounds(t, 8, 2)
        three = orbits.not_vain_bounds(t, 8, 3)
        checked += len(two.records) + len(three.records)
        if two.violations:
            bad.append(f"not-vain n=2 {t}")
        lo = {"A": 1, "B": 2, "C": 2, "D": 3}[t]
        viol = {p.parts for p in three.violations}
        if not all(_subregular(t, r) in viol for r in range(lo, 9)):
            bad.append(f"not-vain n=3 {t} misses the subregular orbit")
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 120, f"{checked} orbit evaluations, {elapsed:.1f}s" + (f", failures {bad}" if bad else "")


def criterion_9():
    bad = []
    for r in (1, 2, 3):
        ca = builders.classical("A", r)
        diag = [[(i + 1) if i == j else 0 for j in range(r + 1)] for i in range(r + 1)]
        diag[r][r] = -sum(range(1, r + 1))
        report = stab.adjoint_generic_check(ca.base, ca.coordinates(diag))
        if not report.ok or len(report.checks) != 4:
            bad.append(f"adjoint sl{r + 1}")
    if stab.adjoint_generic_check(builders.heisenberg(1), [1, 2, 3]).ok:
        bad.append("heisenberg should fail")
    for t, r, module in [("A", 1, "adjoint"), ("A", 2, "adjoint"), ("A", 2, "defining"),
                         ("C", 2, "defining"), ("B", 1, "sym2_traceless"), ("B", 2, "sym2_traceless")]:
        ca = builders.classical(t, r)
        rep = lie.adjoint_rep(ca.base) if module == "adjoint" else ca.rep(module)
        sd = builders.semidirect(ca.base, rep)
        if not stab.sgp_transfer_check(sd, stab.sample_generic(ca.base)).ok:
            bad.append(f"sgp {t}{r} {module}")
    for n in (1, 2, 3):
        h = builders.heisenberg(n)
        xi = lie.generic_covector(h)
        report = stab.coadjoint_generic_check(h, xi)
        z = lie.center(h)
        if not (report.stabilizer.dim == z.dim and report.stabilizer.contains_subspace(z)):
            bad.append(f"heis{n} stabilizer")
    return not bad, "adjoint, sgp and coadjoint checks" if not bad else f"failures {bad}"


def criterion_10():
    bad = []
    pairs = [f"A{r}:so" for r in range(1, 5)] + ["A1:sp", "A3:sp"] + ["A1:swap", "A2:swap"]
    for pair in pairs:
        cd = stab.contraction_dims(builders.build(f"z2:{pair}").data)
        if not (cd.agree and cd.method_a == cd.index):
            bad.append(f"{pair} a={cd.method_a} b={cd.method_b} ind={cd.index}")
    return not bad, f"{len(pairs)} pairs" if not bad else f"failures {bad}"


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = CRITERIA[n]()
    record(n, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    for n, fn in CRITERIA.items():
        record(n, *fn())
