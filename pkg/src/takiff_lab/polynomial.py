"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are exponent vectors packed into one integer (16 bits per
variable), so multiplying monomials is integer addition; terms are kept in
a dict and zero coefficients are never stored.  Output order is graded
lexicographic (highest degree first, ``x0 > x1 > ...`` within a degree).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import format_rational, norm, to_rational


BITS = 16
MASK = (1 << BITS) - 1


def pack(exps: Sequence[int]) -> int:
    """Encode an exponent vector as one integer, 16 bits per variable."""
    key = 0
    for i, a in enumerate(exps):
        if a:
            if a > MASK:
                raise OverflowError("exponent exceeds 16 bits")
            key |= a << (BITS * i)
    return key


def unpack(key: int, num_vars: int) -> tuple:
    out = []
    for _ in range(num_vars):
        out.append(key & MASK)
        key >>= BITS
    return tuple(out)


def _sparse(key: int) -> list[tuple[int, int]]:
    """``[(variable, exponent), ...]`` for the nonzero exponents of a packed monomial."""
    out, i = [], 0
    while key:
        a = key & MASK
        if a:
            out.append((i, a))
        key >>= BITS
        i += 1
    return out


def _degree(key: int) -> int:
    d = 0
    while key:
        d += key & MASK
        key >>= BITS
    return d


def _accumulate(out: dict, terms: dict, scale=1) -> None:
    """``out += scale * terms`` in place on raw term dicts."""
    get = out.get
    for k, c in terms.items():
        v = get(k, 0) + (c if scale == 1 else scale * c)
        if v:
            out[k] = v if type(v) is int else norm(v)
        else:
            del out[k]


def _accumulate_product(out: dict, a: dict, b: dict) -> None:
    """``out += a * b`` in place on raw term dicts."""
    get = out.get
    for k2, c2 in b.items():
        for k1, c1 in a.items():
            k = k1 + k2
            out[k] = get(k, 0) + c1 * c2
    for k in [k for k, v in out.items() if not v]:
        del out[k]
    for k, v in out.items():
        if type(v) is not int:
            out[k] = norm(v)


def _grlex_key(exps: tuple) -> tuple:
    return (-sum(exps), tuple(-e for e in exps))


class Polynomial:
    """Exact polynomial in ``num_vars`` variables.

    ``terms`` maps packed monomials (see :func:`pack`) to nonzero rational
    coefficients; use :meth:`items` for exponent tuples.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping | None = None):
        self.num_vars = num_vars
        clean: dict = {}
        if terms:
            for exps, c in terms.items():
                if isinstance(exps, int):
                    key = exps
                else:
                    if len(exps) != num_vars:
                        raise ValueError("exponent length does not match num_vars")
                    key = pack(exps)
                if c:
                    v = clean.get(key, 0) + c
                    if v:
                        clean[key] = norm(v)
                    else:
                        clean.pop(key, None)
        self.terms = clean

    # -- constructors --
    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, c) -> "Polynomial":
        return cls._raw(num_vars, {0: norm(c)} if c else {})

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "Polynomial":
        if not 0 <= i < num_vars:
            raise IndexError("variable index out of range")
        return cls._raw(num_vars, {1 << (BITS * i): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "Polynomial":
        """``sum(c_i * x_i)``."""
        return cls._raw(len(coeffs), {1 << (BITS * i): norm(c) for i, c in enumerate(coeffs) if c})

    @classmethod
    def _raw(cls, num_vars: int, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.num_vars = num_vars
        p.terms = terms
        return p

    # -- queries --
    def items(self):
        """``(exponent tuple, coefficient)`` pairs."""
        for key, c in self.terms.items():
            yield unpack(key, self.num_vars), c

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((_degree(k) for k in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({_degree(k) for k in self.terms}) <= 1

    def variables(self) -> set[int]:
        return {i for k in self.terms for i, _ in _sparse(k)}

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(pack(exps), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.num_vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic --
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.num_vars != self.num_vars:
                raise ValueError(f"variable count mismatch: {self.num_vars} vs {other.num_vars}")
            return other
        return Polynomial.constant(self.num_vars, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        _accumulate(out, other.terms, 1)
        return Polynomial._raw(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.num_vars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        _accumulate(out, other.terms, -1)
        return Polynomial._raw(self.num_vars, out)

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial(self.num_vars)
        return Polynomial._raw(self.num_vars, {k: norm(c * v) for k, v in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        _accumulate_product(out, a, b)
        return Polynomial._raw(self.num_vars, out)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self, i: int) -> "Polynomial":
        shift = BITS * i
        one = 1 << shift
        out = {}
        for k, c in self.terms.items():
            a = (k >> shift) & MASK
            if a:
                out[k - one] = norm(c * a)
        return Polynomial._raw(self.num_vars, out)

    def evaluate(self, point: Sequence):
        """Exact value at a point (entries may be rationals or other ring elements)."""
        if len(point) != self.num_vars:
            raise ValueError("point has the wrong length")
        total = 0
        for k, c in self.terms.items():
            t = c
            for i, a in _sparse(k):
                t = t * point[i] ** a
                if not t:
                    break
            total = total + t
        return norm(total) if isinstance(total, (int, Fraction)) else total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Compose with ``x_i -> images[i]`` (all images share one variable count)."""
        if len(images) != self.num_vars:
            raise ValueError("need one image per variable")
        m = images[0].num_vars if images else 0
        cache: dict = {}

        def power(i, a):
            if (i, a) not in cache:
                cache[(i, a)] = images[i] ** a
            return cache[(i, a)]

        total = Polynomial(m)
        for k, c in self.terms.items():
            t = Polynomial.constant(m, c)
            for i, a in _sparse(k):
                t = t * power(i, a)
            total = total + t
        return total

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.num_vars, {k: c for k, c in self.terms.items() if _degree(k) == d})

    def extend(self, num_vars: int, offset: int = 0) -> "Polynomial":
        """The same polynomial in a larger ring, variable ``i`` renamed ``i + offset``."""
        if offset + self.num_vars > num_vars:
            raise ValueError("target ring too small")
        shift = BITS * offset
        return Polynomial._raw(num_vars, {k << shift: c for k, c in self.terms.items()})

    # -- serialization --
    def sorted_terms(self) -> list[tuple[tuple, object]]:
        return sorted(self.items(), key=lambda t: _grlex_key(t[0]))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = " ".join(f"x{i}^{a}" if a > 1 else f"x{i}" for i, a in enumerate(e) if a)
            parts.append(f"{format_rational(c)} * {mono}" if mono else format_rational(c))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.num_vars}, {self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "terms": [[format_rational(c), list(e)] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        n = data["num_vars"]
        return cls(n, {tuple(e): to_rational(c) for c, e in data["terms"]})

    @classmethod
    def from_text(cls, text: str, num_vars: int) -> "Polynomial":
        """Parse the output of :meth:`to_text`."""
        text = text.strip()
        if text == "0":
            return cls(num_vars)
        terms: dict = {}
        for chunk in re.split(r"\s\+\s", text):
            coef, _, mono = chunk.partition(" * ")
            e = [0] * num_vars
            if mono:
                for factor in mono.split():
                    m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
                    if not m:
                        raise ValueError(f"bad monomial factor {factor!r}")
                    e[int(m.group(1))] += int(m.group(2) or 1)
            key = tuple(e)
            terms[key] = terms.get(key, 0) + to_rational(coef)
        return cls(num_vars, terms)


@dataclass(frozen=True)
class PolyMap:
    """A polynomial map ``k^domain_dim -> k^codomain_dim``."""

    domain_dim: int
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        for c in self.components:
            if c.num_vars != self.domain_dim:
                raise ValueError("component variable count differs from domain_dim")

    @property
    def codomain_dim(self) -> int:
        return len(self.components)

    def evaluate(self, point: Sequence) -> list:
        return [c.evaluate(point) for c in self.components]

    def degree(self) -> int:
        return max((c.degree() for c in self.components), default=-1)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def apply_matrix(self, m: Sequence[Sequence]) -> "PolyMap":
        """Post-compose with a linear map given by the matrix ``m``."""
        out = []
        for row in m:
            acc = Polynomial(self.domain_dim)
            for c, comp in zip(row, self.components):
                if c:
                    acc = acc + comp.scale(c)
            out.append(acc)
        return PolyMap(self.domain_dim, tuple(out))


def linear_forms(n: int) -> list[Polynomial]:
    return [Polynomial.variable(n, i) for i in range(n)]


def poly_matrix(coeffs: Sequence, basis_matrices: Sequence, num_vars: int | None = None) -> list:
    """``sum_i coeffs[i] * B_i`` with polynomial coefficients."""
    n = len(basis_matrices[0])
    nv = num_vars if num_vars is not None else coeffs[0].num_vars
    out = [[{} for _ in range(n)] for _ in range(n)]
    for c, b in zip(coeffs, basis_matrices):
        for i in range(n):
            for j in range(n):
                if b[i][j]:
                    for e, v in c.terms.items():
                        out[i][j][e] = out[i][j].get(e, 0) + v * b[i][j]
    return [[Polynomial(nv, cell) for cell in row] for row in out]


def generic_matrix(basis_matrices: Sequence) -> list:
    """The matrix ``x = sum_i x_i B_i`` whose entries are linear forms in ``x_0..x_{d-1}``."""
    d = len(basis_matrices)
    return poly_matrix(linear_forms(d), basis_matrices, d)


def pmat_mul(a: list, b: list) -> list:
    n, k, m = len(a), len(b), len(b[0])
    nv = a[0][0].num_vars
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc: dict = {}
            for t in range(k):
                if a[i][t].terms and b[t][j].terms:
                    _accumulate_product(acc, a[i][t].terms, b[t][j].terms)
            row.append(Polynomial._raw(nv, acc))
        out.append(row)
    return out


def pmat_const_mul(a: list, c: Sequence[Sequence], left: bool = False) -> list:
    """``a * c`` (or ``c * a`` with ``left=True``) for a constant matrix ``c``."""
    nv = a[0][0].num_vars
    if left:
        return [[sum((a[t][j].scale(c[i][t]) for t in range(len(a)) if c[i][t]), Polynomial(nv))
                 for j in range(len(a[0]))] for i in range(len(c))]
    return [[sum((a[i][t].scale(c[t][j]) for t in range(len(c)) if c[t][j]), Polynomial(nv))
             for j in range(len(c[0]))] for i in range(len(a))]


def pmat_trace(a: list) -> Polynomial:
    acc = Polynomial(a[0][0].num_vars)
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def sum_polys(polys: Iterable[Polynomial], num_vars: int) -> Polynomial:
    acc = Polynomial(num_vars)
    for p in polys:
        acc = acc + p
    return acc
