"""Command-line front end: ``takiff-lab <verb> [flags]``.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
Every report starts with a header carrying the seed, and identical flags
give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import builders, invariants, lie, orbits, stabilizers
from .linalg import format_rational

VERBS = ("construct", "validate", "index", "generic", "takiffize", "invariants", "contraction", "sweep", "oracle")


class UsageError(Exception):
    pass


class Result:
    """Structured output of one verb; ``rows`` are (key, value) pairs for text and tsv."""

    def __init__(self, payload: dict, ok: bool = True, rows: list | None = None, tsv: str | None = None):
        self.payload = payload
        self.ok = ok
        self.rows = rows if rows is not None else [(k, v) for k, v in payload.items()]
        self.tsv = tsv


def _default_jobs() -> int:
    env = os.environ.get("TAKIFF_LAB_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"TAKIFF_LAB_JOBS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.verb}")
    return value


def _build(args) -> builders.Built:
    return builders.build(_need(args, "algebra"))


def _parts_list(items: list) -> str:
    return "; ".join(items) if items else "none"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, dict):
        return ", ".join(f"{k}={_fmt(x)}" for k, x in v.items())
    return str(v)


# -- verbs ---------------------------------------------------------------------------


def cmd_construct(args) -> Result:
    built = _build(args)
    alg = built.algebra
    data = json.loads(lie.to_json(alg))
    payload = {"algebra": built.descriptor, "kind": built.kind, "dim": alg.dim,
               "labels": data["labels"], "structure": data["structure"]}
    rows = [("algebra", built.descriptor), ("kind", built.kind), ("dim", alg.dim)]
    for i, j, k, c in data["structure"]:
        rows.append((f"[{alg.labels[i]}, {alg.labels[j]}]", f"{c} * {alg.labels[k]}"))
    return Result(payload, True, rows)


def cmd_validate(args) -> Result:
    built = _build(args)
    jac = lie.check_jacobi(built.algebra)
    checks = {"jacobi": jac.ok}
    if built.kind == "classical":
        for name in built.data.rep_names:
            checks[f"homomorphism:{name}"] = lie.check_homomorphism(built.data.rep(name))[0]
    elif built.kind == "semidirect":
        checks["homomorphism:module"] = lie.check_homomorphism(built.data.source_rep)[0]
    elif built.kind == "z2":
        sd = built.data
        checks["involution"] = sd.involution.is_involutive() and sd.involution.is_automorphism()
        checks["grading"] = builders.grading_holds(sd.ambient, sd)
    payload = {"algebra": built.descriptor, "dim": built.algebra.dim, "checks": checks,
               "first_failure": list(jac.first_failure) if jac.first_failure else None}
    return Result(payload, all(checks.values()))


def cmd_index(args) -> Result:
    built = _build(args)
    value = lie.index(built.algebra, args.trials, args.seed)
    return Result({"algebra": built.descriptor, "index": value}, True, [("index", value)])


def cmd_generic(args) -> Result:
    built = _build(args)
    alg = built.algebra
    x = stabilizers.sample_generic(alg, args.trials, args.seed)
    adj = stabilizers.adjoint_generic_check(alg, x)
    xi = lie.generic_covector(alg, args.trials, args.seed)
    co = stabilizers.coadjoint_generic_check(alg, xi)
    payload = {"algebra": built.descriptor, "adjoint": adj.to_dict(), "coadjoint": co.to_dict()}
    # the side conditions are consequences of adjoint genericity, so only they can fail the run
    ok = all(adj.checks.get(k, True) for k in ("self_normalizing", "coadjoint_decomposition"))
    if built.kind == "semidirect":
        g = built.data.source_rep.algebra
        y = stabilizers.sample_generic(g, args.trials, args.seed)
        sgp = stabilizers.sgp_transfer_check(built.data, y, args.seed)
        payload["sgp_transfer"] = sgp.to_dict()
        if sgp.checks.get("fixed_spaces_agree") and sgp.checks.get("fixed_plus_image_is_V"):
            ok = ok and sgp.checks["lift_is_generic"]
    rows = [("adjoint point", _fmt([format_rational(c) for c in x])),
            ("adjoint checks", _fmt(adj.checks)), ("adjoint dims", _fmt(adj.dims)),
            ("coadjoint point", _fmt([format_rational(c) for c in xi])),
            ("coadjoint checks", _fmt(co.checks)), ("coadjoint dims", _fmt(co.dims))]
    if "sgp_transfer" in payload:
        rows.append(("sgp checks", _fmt(payload["sgp_transfer"]["checks"])))
    return Result(payload, ok, rows)


def _generator_result(args, system: invariants.InvariantSystem, extra: dict | None = None) -> Result:
    invariant = system.invariance()
    payload = {"algebra": system.descriptor, "count": len(system.generators),
               "generators": [{"name": n, "degree": f.degree(), "invariant": ok, "polynomial": f.to_text()}
                              for n, f, ok in zip(system.names, system.generators, invariant)]}
    payload.update(extra or {})
    rows = [(f"{n} (degree {f.degree()}, invariant={_fmt(ok)})", f.to_text())
            for n, f, ok in zip(system.names, system.generators, invariant)]
    ok = all(invariant)
    if args.certify:
        res = invariants.certify_independence(system.generators, args.trials, args.seed)
        payload["independence"] = {"status": res.status, "jacobian_rank": res.rank, "count": res.count}
        rows.append(("independence", f"{res.status}, Jacobian rank {res.rank} of {res.count}"))
    rows.insert(0, ("generators", len(system.generators)))
    return Result(payload, ok, rows)


def cmd_takiffize(args) -> Result:
    descriptor = _need(args, "algebra")
    level = args.level
    if level < 1:
        raise UsageError("--level must be >= 1")
    system = invariants.invariant_system(f"takiff:{descriptor}:{level}")
    return _generator_result(args, system, {"level": level})


def cmd_invariants(args) -> Result:
    return _generator_result(args, invariants.invariant_system(_need(args, "algebra")))


def cmd_contraction(args) -> Result:
    built = _build(args)
    if built.kind != "z2":
        raise UsageError("contraction needs a z2:... descriptor")
    cd = stabilizers.contraction_dims(built.data, trials=args.trials, seed=args.seed)
    payload = {"algebra": built.descriptor, **cd.to_dict(), "agree": cd.agree}
    return Result(payload, cd.agree)


def cmd_sweep(args) -> Result:
    ineq = _need(args, "inequality").replace("-", "_")
    if ineq not in orbits.INEQUALITIES:
        raise UsageError(f"unknown inequality {args.inequality!r}")
    type_tag = _need(args, "type")
    report = orbits.sweep(ineq, type_tag, args.max_rank, copies=args.copies, jobs=args.jobs)
    payload = json.loads(report.to_json())
    payload["equivalence_failures"] = [str(p) for p in report.equivalence_failures]
    rows = [("checked", len(report.records)), ("violations", _parts_list(payload["violations"])),
            ("equality cases", _parts_list(payload["equality_cases"]))]
    if ineq == "bril_takiff":
        rows.append(("equivalence failures", _parts_list(payload["equivalence_failures"])))
    return Result(payload, report.ok, rows, report.to_tsv())


def cmd_oracle(args) -> Result:
    type_tag = _need(args, "type")
    if args.partition:
        parts = [orbits.Partition.parse(args.partition, type_tag)]
    else:
        parts = []
        for size in range(1, args.max_size + 1):
            parts.extend(orbits.enumerate_partitions(type_tag, size) if _size_ok(type_tag, size) else [])
    records, mismatches = [], []
    for p in parts:
        o = orbits.matrix_oracle(p, max(args.max_size, p.size))
        ok = (o.jordan_ok and o.centralizer_dim == orbits.centralizer_dim(type_tag, p)
              and o.stratum_index == orbits.stratum_index(type_tag, p)
              and o.rank_dpi == orbits.rank_dpi(type_tag, p))
        records.append({"partition": str(p), "centralizer_dim": o.centralizer_dim,
                        "stratum_index": o.stratum_index, "rank_dpi": o.rank_dpi, "agrees": ok})
        if not ok:
            mismatches.append(str(p))
    payload = {"type": type_tag, "checked": len(records), "mismatches": mismatches, "records": records}
    rows = [("checked", len(records)), ("mismatches", _parts_list(mismatches))]
    tsv = "\n".join(["partition\tcentralizer_dim\tstratum_index\trank_dpi\tagrees"]
                    + [f"{r['partition']}\t{r['centralizer_dim']}\t{r['stratum_index']}\t{r['rank_dpi']}\t{r['agrees']}"
                       for r in records])
    return Result(payload, not mismatches, rows, tsv)


def _size_ok(type_tag: str, size: int) -> bool:
    if type_tag == "A":
        return size >= 2
    if type_tag == "C":
        return size % 2 == 0
    if type_tag == "B":
        return size % 2 == 1 and size >= 3
    return size % 2 == 0 and size >= 4


COMMANDS = {
    "construct": cmd_construct, "validate": cmd_validate, "index": cmd_index, "generic": cmd_generic,
    "takiffize": cmd_takiffize, "invariants": cmd_invariants, "contraction": cmd_contraction,
    "sweep": cmd_sweep, "oracle": cmd_oracle,
}


# -- parsing and output --------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="takiff-lab", description="Exact Takiff, semi-direct and Z2-contraction computations.")
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("--algebra", help="descriptor such as A3, heis2, borel:A2, takiff:A1:2, z2:A3:so, sd:A1:adjoint")
    parser.add_argument("--trials", type=int, default=8, help="sampled points for generic-point claims")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes (default: TAKIFF_LAB_JOBS or CPU count)")
    parser.add_argument("--inequality", help="bril-takiff, brilliant or not-vain")
    parser.add_argument("--type", choices=("A", "B", "C", "D"))
    parser.add_argument("--max-rank", type=int, default=6)
    parser.add_argument("--max-size", type=int, default=8, help="largest matrix size for the oracle")
    parser.add_argument("--copies", type=int, default=2, help="number of module copies for not-vain")
    parser.add_argument("--level", type=int, default=1, help="Takiff level n")
    parser.add_argument("--partition", help="single partition for the oracle, e.g. 4,2,2")
    parser.add_argument("--certify", action="store_true", help="certify algebraic independence")
    return parser


def render(args, result: Result) -> str:
    if args.format == "json":
        payload = {"command": args.verb, "seed": args.seed, "ok": result.ok, **result.payload}
        return json.dumps(payload, sort_keys=True)
    header = f"# takiff-lab {args.verb}" + (f" algebra={args.algebra}" if args.algebra else "") + f" seed={args.seed}"
    if args.format == "tsv":
        body = result.tsv or "\n".join(f"{k}\t{_fmt(v)}" for k, v in result.rows)
        return header + "\n" + body
    lines = [header] + [f"{k}: {_fmt(v)}" for k, v in result.rows]
    lines.append("status: ok" if result.ok else "status: FAILED")
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = make_parser().parse_args(argv)
        if args.trials < 1:
            raise UsageError("--trials must be >= 1")
        if args.jobs is None:
            args.jobs = _default_jobs()
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        result = COMMANDS[args.verb](args)
    except (UsageError, builders.UnsupportedAlgebra, builders.RepresentationError, ValueError) as exc:
        print(f"takiff-lab: error: {exc}", file=sys.stderr)
        return 2
    print(render(args, result), file=out)
    return 0 if result.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
