"""Nilpotent orbits of classical Lie algebras through their partitions.

Closed-form orbit data (centraliser dimensions, ranks of the differential
of the quotient map, covariant strata) is evaluated directly on partitions;
:func:`matrix_oracle` recomputes the same numbers from an explicit nilpotent
matrix so the two can be compared.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator, Sequence

from . import linalg

TYPES = ("A", "B", "C", "D")


# -- partitions --------------------------------------------------------------


def check_partition(type_tag: str, parts: Sequence[int]) -> None:
    if type_tag not in TYPES:
        raise ValueError(f"unsupported type {type_tag!r}")
    if not parts or any(p <= 0 for p in parts):
        raise ValueError("parts must be positive")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError("parts must be weakly decreasing")
    size = sum(parts)
    if type_tag == "B" and size % 2 == 0:
        raise ValueError("type B partitions have odd size")
    if type_tag in ("C", "D") and size % 2:
        raise ValueError(f"type {type_tag} partitions have even size")
    bad_parity = {"B": 0, "D": 0, "C": 1}.get(type_tag)
    if bad_parity is not None:
        for p in set(parts):
            if p % 2 == bad_parity and parts.count(p) % 2:
                kind = "even" if bad_parity == 0 else "odd"
                raise ValueError(f"{kind} part {p} must occur with even multiplicity in type {type_tag}")


@dataclass(frozen=True)
class Partition:
    parts: tuple
    type_tag: str

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        check_partition(self.type_tag, self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @classmethod
    def parse(cls, text: str, type_tag: str) -> "Partition":
        """Parse ``"4,2,2"``."""
        parts = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
        return cls(tuple(sorted(parts, reverse=True)), type_tag)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def dual(p: Partition | Sequence[int]) -> tuple:
    """Transpose partition: ``hat_i = #{j : p_j >= i}`` for ``i = 1..p_1``."""
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    if not parts:
        return ()
    return tuple(sum(1 for q in parts if q >= i) for i in range(1, parts[0] + 1))


def _all_partitions(n: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _all_partitions(n - first, first):
            yield (first,) + rest


def classical_size(type_tag: str, rank: int) -> int:
    """Dimension of the defining module of the rank-``rank`` algebra."""
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[type_tag]


def rank_of_size(type_tag: str, size: int) -> int:
    return {"A": size - 1, "B": (size - 1) // 2, "C": size // 2, "D": size // 2}[type_tag]


def enumerate_partitions(type_tag: str, size: int) -> list[Partition]:
    """All orbit partitions of ``size`` for the type, reverse lexicographic."""
    if type_tag not in TYPES:
        raise ValueError(f"unsupported type {type_tag!r}")
    if size < 1:
        raise ValueError("size must be positive")
    if type_tag == "B" and size % 2 == 0 or type_tag in ("C", "D") and size % 2:
        raise ValueError(f"size {size} has the wrong parity for type {type_tag}")
    out = []
    for parts in _all_partitions(size, size):
        try:
            out.append(Partition(parts, type_tag))
        except ValueError:
            continue
    return out


# -- closed forms -------------------------------------------------------------


def _parts(p) -> tuple:
    return p.parts if isinstance(p, Partition) else tuple(p)


def _odd_count(parts: Sequence[int]) -> int:
    return sum(1 for q in parts if q % 2)


def centralizer_dim(type_tag: str, p) -> int:
    parts = _parts(p)
    sq = sum(h * h for h in dual(parts))
    if type_tag == "A":
        return sq - 1
    if type_tag in ("B", "D"):
        return (sq - _odd_count(parts)) // 2
    if type_tag == "C":
        return (sq + _odd_count(parts)) // 2
    raise ValueError(f"unsupported type {type_tag!r}")


def rank_dpi(type_tag: str, p) -> int:
    parts = _parts(p)
    s = parts[0]
    if type_tag == "A":
        return s - 1
    if type_tag in ("B", "C"):
        return s // 2
    if type_tag == "D":
        n = sum(parts) // 2
        if len(parts) == 2:
            i = parts[1]
            if i % 2:
                # (2n-i, i) with i odd; also covers (n, n) for odd n
                return (2 * n - i + 1) // 2
            if parts[0] == parts[1] and n % 2 == 0:
                return n // 2
        if len(parts) >= 4:
            return s // 2
        raise ValueError(f"partition {parts} is not a type D orbit")
    raise ValueError(f"unsupported type {type_tag!r}")


def default_covariant_count(type_tag: str, size: int) -> int:
    """Number ``m`` of basic covariants for the pair attached to the type.

    C (sl_2n, sp_2n): n-1; B (sl_2n+1, so_2n+1): n; D (sl_2n, so_2n): n-1.
    Type A uses the powers ``x, x^2, ..., x^{N-1}`` (adjoint covariants), so m = N-1.
    """
    if type_tag == "A":
        return size - 1
    n = size // 2
    return {"B": n, "C": n - 1, "D": n - 1}[type_tag]


def stratum_index(type_tag: str, p, m: int | None = None) -> int:
    """Dimension of the span of the covariant values at ``x``."""
    parts = _parts(p)
    if m is None:
        m = default_covariant_count(type_tag, sum(parts))
    if type_tag == "A":
        return min(m, parts[0] - 1)
    return min(m, (parts[0] - 1) // 2)


def algebra_dim(type_tag: str, rank: int) -> int:
    n = rank
    return {"A": (n + 1) ** 2 - 1, "B": n * (2 * n + 1), "C": n * (2 * n + 1), "D": n * (2 * n - 1)}[type_tag]


def L_takiff(type_tag: str, p, rank: int | None = None) -> int:
    parts = _parts(p)
    r = rank_of_size(type_tag, sum(parts)) if rank is None else rank
    if classical_size(type_tag, r) != sum(parts):
        raise ValueError("partition size does not match the rank")
    return centralizer_dim(type_tag, parts) + 2 * rank_dpi(type_tag, parts) - 3 * r


def L_z2(pair: str, p) -> int:
    """Left side minus right side of the covariant-stratum inequality for a Z2 pair.

    ``pair`` is ``"sp"`` (sl_2n, sp_2n) or ``"so"`` (sl_N, so_N); a type tag
    B, C or D is accepted as well.
    """
    parts = _parts(p)
    size = sum(parts)
    if pair in ("so", "A:so"):
        t = "B" if size % 2 else "D"
    elif pair in ("sp", "A:sp"):
        t = "C"
    elif pair in ("B", "C", "D"):
        t = pair
    else:
        raise ValueError(f"unsupported pair {pair!r}")
    check_partition(t, parts)
    r = rank_of_size(t, size)
    m = default_covariant_count(t, size)
    return centralizer_dim(t, parts) - r - 2 * (m - stratum_index(t, parts, m))


def not_vain_value(type_tag: str, p, copies: int) -> int:
    """``dim z_g(x) - rk g - n (rk g - rk dpi_x)``; nonnegative when the condition holds."""
    parts = _parts(p)
    r = rank_of_size(type_tag, sum(parts))
    return centralizer_dim(type_tag, parts) - r - copies * (r - rank_dpi(type_tag, parts))


def codim_form(type_tag: str, p) -> int:
    """``(dim N - dim orbit) - 2 (rk g - rk dpi_x)`` for the nilpotent cone ``N``."""
    parts = _parts(p)
    r = rank_of_size(type_tag, sum(parts))
    dim_g = algebra_dim(type_tag, r)
    dim_cone = dim_g - r
    orbit_dim = dim_g - centralizer_dim(type_tag, parts)
    return (dim_cone - orbit_dim) - 2 * (r - rank_dpi(type_tag, parts))


@dataclass(frozen=True)
class OrbitRecord:
    partition: Partition
    rank: int
    centralizer_dim: int
    rank_dpi: int
    stratum_index: int
    L_takiff: int
    L_z2: int | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["partition"] = str(self.partition)
        d["type"] = self.partition.type_tag
        return d


def orbit_record(p: Partition) -> OrbitRecord:
    t = p.type_tag
    r = rank_of_size(t, p.size)
    return OrbitRecord(
        p, r, centralizer_dim(t, p), rank_dpi(t, p), stratum_index(t, p), L_takiff(t, p, r),
        None if t == "A" else L_z2(t, p),
    )


# -- sweeps ----------------------------------------------------------------------

INEQUALITIES = ("bril_takiff", "brilliant", "not_vain")


@dataclass
class SweepReport:
    inequality: str
    type_tag: str
    max_rank: int
    copies: int | None = None
    records: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    equality_cases: list = field(default_factory=list)
    equivalence_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.equivalence_failures

    def to_json(self) -> str:
        return json.dumps(
            {
                "inequality": self.inequality,
                "type": self.type_tag,
                "max_rank": self.max_rank,
                "copies": self.copies,
                "checked": len(self.records),
                "violations": [str(p) for p in self.violations],
                "equality_cases": [str(p) for p in self.equality_cases],
            },
            sort_keys=True,
        )

    def to_tsv(self) -> str:
        lines = ["rank\tpartition\tcentralizer_dim\trank_dpi\tL\tstratum"]
        for rec, value in self.records:
            lines.append(f"{rec.rank}\t{rec.partition}\t{rec.centralizer_dim}\t{rec.rank_dpi}\t{value}\t{rec.stratum_index}")
        return "\n".join(lines)


def min_rank(type_tag: str) -> int:
    return 2 if type_tag == "D" else 1


def _evaluate(inequality: str, p: Partition, copies: int) -> int:
    if inequality == "bril_takiff":
        return L_takiff(p.type_tag, p)
    if inequality == "brilliant":
        return L_z2(p.type_tag, p)
    if inequality == "not_vain":
        return not_vain_value(p.type_tag, p, copies)
    raise ValueError(f"unknown inequality {inequality!r}")


def _sweep_rank(args) -> list:
    inequality, type_tag, rank, copies = args
    out = []
    for p in enumerate_partitions(type_tag, classical_size(type_tag, rank)):
        value = _evaluate(inequality, p, copies)
        out.append((orbit_record(p), value, codim_form(type_tag, p) if inequality == "bril_takiff" else None))
    return out


def sweep(inequality: str, type_tag: str, max_rank: int, copies: int = 2, jobs: int = 1) -> SweepReport:
    """Evaluate an inequality on every orbit for ranks up to ``max_rank``.

    Results are ordered by rank and then reverse-lex partition order no
    matter how many worker processes are used.
    """
    inequality = inequality.replace("-", "_")
    if inequality not in INEQUALITIES:
        raise ValueError(f"unknown inequality {inequality!r}")
    if inequality == "brilliant" and type_tag == "A":
        raise ValueError("the Z2 inequality is stated for types B, C and D")
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    tasks = [(inequality, type_tag, r, copies) for r in range(min_rank(type_tag), max_rank + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_sweep_rank, tasks))
    else:
        chunks = [_sweep_rank(t) for t in tasks]
    report = SweepReport(inequality, type_tag, max_rank, copies if inequality == "not_vain" else None)
    for chunk in chunks:
        for rec, value, codim in chunk:
            report.records.append((rec, value))
            if value < 0:
                report.violations.append(rec.partition)
            elif value == 0:
                report.equality_cases.append(rec.partition)
            if codim is not None and (codim >= 0) != (value >= 0):
                report.equivalence_failures.append(rec.partition)
    return report


def not_vain_bounds(type_tag: str, max_rank: int, copies: int, jobs: int = 1) -> SweepReport:
    if copies < 1:
        raise ValueError("copies must be >= 1")
    return sweep("not_vain", type_tag, max_rank, copies=copies, jobs=jobs)


# -- matrix oracle -------------------------------------------------------------------


@dataclass(frozen=True)
class OracleRecord:
    partition: Partition
    centralizer_dim: int
    stratum_index: int
    rank_dpi: int
    jordan_ok: bool


def jordan_ranks(parts: Sequence[int], k: int) -> int:
    return sum(max(p - k, 0) for p in parts)


def _power_list(x: list, top: int) -> list:
    out = [linalg.identity(len(x)), x]
    while len(out) <= top:
        out.append(linalg.matmul(out[-1], x))
    return out


def matrix_oracle(p: Partition, max_size: int = 10) -> OracleRecord:
    """Orbit data of ``p`` recomputed from an explicit nilpotent matrix.

    * centraliser: ``dim g - rank(ad x)`` in the model algebra;
    * stratum: dimension of the span of the covariant values
      (``x^k``, ``k < N``, for A; ``x^{2i} F^{-1}`` for C; ``x^{2i}`` for B/D);
    * rank of dpi: rank of the differentials of the basic invariants at ``x``,
      i.e. of the functionals ``y -> tr(x^{k-1} y)`` plus, for D, the
      gradient of the Pfaffian.
    """
    from .builders import nilpotent_from_partition
    from .lie import ad_matrix

    if p.size > max_size:
        raise ValueError(f"partition size {p.size} exceeds the oracle limit {max_size}")
    t = p.type_tag
    model = nilpotent_from_partition(t, p.parts)
    ca = model.algebra
    x = model.matrix
    size = p.size
    dim_g = ca.base.dim
    cz = dim_g - linalg.rank(linalg.transpose(ad_matrix(ca.base, model.element)))
    powers = _power_list(x, size)
    jordan_ok = all(linalg.rank(powers[k]) == jordan_ranks(p.parts, k) for k in range(1, size + 1))

    m = default_covariant_count(t, size)
    if t == "A":
        values = [powers[k] for k in range(1, m + 1)]
        grads_from = list(range(1, size))  # d tr(x^k) ~ x^{k-1}, k = 2..N
    else:
        finv = linalg.inverse(ca.form.matrix) if t == "C" else None
        values = [linalg.matmul(powers[2 * i], finv) if finv else powers[2 * i] for i in range(1, m + 1)]
        count = ca.rank if t in ("B", "C") else ca.rank - 1
        grads_from = [2 * i - 1 for i in range(1, count + 1)]
    values = [linalg.flatten(v) for v in values]
    stratum = linalg.rank(values) if values else 0

    rows = [[linalg.trace(linalg.matmul(powers[k], b)) for b in ca.matrices] for k in grads_from]
    if t == "D":
        rows.append(_pfaffian_gradient(ca, x))
    rk_dpi = linalg.rank(rows) if rows else 0
    return OracleRecord(p, cz, stratum, rk_dpi, jordan_ok)


def _pfaffian_gradient(ca, x: list) -> list:
    """``d/dt Pf(F (x + t B)) |_{t=0}`` for each basis matrix ``B``."""
    from .invariants import pfaffian
    from .polynomial import Polynomial

    f = ca.form.matrix
    fx = linalg.matmul(f, x)
    out = []
    n = len(x)
    for b in ca.matrices:
        fb = linalg.matmul(f, b)
        m = [[Polynomial(1, {(0,): fx[i][j], (1,): fb[i][j]}) for j in range(n)] for i in range(n)]
        pf = pfaffian(m)
        out.append(pf.coefficient((1,)) if isinstance(pf, Polynomial) else 0)
    return out
