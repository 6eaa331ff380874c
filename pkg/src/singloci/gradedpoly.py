"""Monomials, graded bases of k[x_0..x_n]_l, and homogeneous polynomials.

Monomials are exponent tuples of length n+1.  The basis of a graded piece is
ordered graded-lexicographically with x_0 > x_1 > ... > x_n, so matrix
layouts (and hence echelon forms) are reproducible across runs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from random import Random
from typing import Iterable, Mapping

from .scalars import FieldSpec, FieldMismatchError, Raw

Exponents = tuple[int, ...]


@lru_cache(maxsize=None)
def _monomials(n: int, l: int) -> tuple[Exponents, ...]:
    if n < 1:
        raise ValueError("need at least two variables (n >= 1)")
    if l < 0:
        raise ValueError("degree must be non-negative")

    def gen(nvars: int, deg: int):
        if nvars == 1:
            yield (deg,)
            return
        for e in range(deg, -1, -1):
            for rest in gen(nvars - 1, deg - e):
                yield (e,) + rest

    return tuple(gen(n + 1, l))


@dataclass(frozen=True)
class GradedBasis:
    """Ordered monomial basis of the degree-l piece of k[x_0..x_n]."""

    n: int
    degree: int
    monomials: tuple[Exponents, ...] = dc_field(repr=False)

    def __len__(self) -> int:
        return len(self.monomials)

    def index(self, exps: Exponents) -> int:
        return _index_map(self.n, self.degree)[exps]


@lru_cache(maxsize=None)
def _index_map(n: int, l: int) -> dict[Exponents, int]:
    return {m: i for i, m in enumerate(_monomials(n, l))}


@lru_cache(maxsize=None)
def basis(n: int, l: int) -> GradedBasis:
    """The graded-lex ordered basis of k[x_0..x_n]_l; size C(l+n, n)."""
    mons = _monomials(n, l)
    assert len(mons) == math.comb(l + n, n)
    return GradedBasis(n, l, mons)


class HomPoly:
    """A homogeneous polynomial, stored sparsely as exponents -> coefficient."""

    __slots__ = ("field", "n", "degree", "terms")

    def __init__(self, field: FieldSpec, n: int, degree: int,
                 terms: Mapping[Exponents, Raw] | None = None, *, _canon: bool = False):
        self.field = field
        self.n = n
        self.degree = degree
        clean: dict[Exponents, Raw] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != n + 1 or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for n={n}")
            if sum(exps) != degree:
                raise ValueError(f"term {exps} is not of degree {degree}")
            v = c if _canon else field.canon(c)
            if v:
                clean[tuple(exps)] = v
        self.terms = clean

    # -- constructors

    @staticmethod
    def zero(field: FieldSpec, n: int, degree: int) -> "HomPoly":
        return HomPoly(field, n, degree, {})

    @staticmethod
    def variable(field: FieldSpec, n: int, i: int) -> "HomPoly":
        exps = tuple(1 if j == i else 0 for j in range(n + 1))
        return HomPoly(field, n, 1, {exps: field.one()}, _canon=True)

    @staticmethod
    def monomial(field: FieldSpec, n: int, exps: Exponents, coeff=1) -> "HomPoly":
        return HomPoly(field, n, sum(exps), {tuple(exps): coeff})

    # -- basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomPoly) and self.field == other.field
                and self.n == other.n and self.degree == other.degree
                and self.terms == other.terms)

    def __repr__(self) -> str:
        return f"HomPoly(n={self.n}, degree={self.degree}, {len(self.terms)} terms)"

    def _check(self, other: "HomPoly") -> None:
        if self.field != other.field:
            raise FieldMismatchError("polynomials over different fields")
        if self.n != other.n:
            raise ValueError("polynomials in different variable sets")

    # -- arithmetic

    def __add__(self, other: "HomPoly") -> "HomPoly":
        self._check(other)
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        f = self.field
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = f.radd(out.get(exps, 0), c)
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return HomPoly(f, self.n, self.degree, out, _canon=True)

    def __neg__(self) -> "HomPoly":
        f = self.field
        return HomPoly(f, self.n, self.degree,
                       {e: f.rneg(c) for e, c in self.terms.items()}, _canon=True)

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        return self + (-other)

    def scale(self, c) -> "HomPoly":
        f = self.field
        cc = f.canon(c)
        if not cc:
            return HomPoly.zero(f, self.n, self.degree)
        return HomPoly(f, self.n, self.degree,
                       {e: f.rmul(v, cc) for e, v in self.terms.items()}, _canon=True)

    def __mul__(self, other: "HomPoly") -> "HomPoly":
        self._check(other)
        f = self.field
        out: dict[Exponents, Raw] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = f.radd(out.get(e, 0), f.rmul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return HomPoly(f, self.n, self.degree + other.degree, out, _canon=True)

    def shift(self, exps: Exponents) -> "HomPoly":
        """Multiply by the monomial with the given exponents."""
        out = {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}
        return HomPoly(self.field, self.n, self.degree + sum(exps), out, _canon=True)

    def partial(self, i: int) -> "HomPoly":
        """Formal partial derivative with respect to x_i; degree drops by one."""
        if not 0 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range")
        if self.degree == 0:
            return HomPoly.zero(self.field, self.n, 0)
        f = self.field
        out: dict[Exponents, Raw] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            v = f.rmul(c, f.from_int(e[i]))
            if not v:
                continue
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = v
        return HomPoly(f, self.n, self.degree - 1, out, _canon=True)

    # -- conversions

    def to_vector(self, b: GradedBasis) -> list[Raw]:
        if b.n != self.n or b.degree != self.degree:
            raise ValueError("basis does not match polynomial")
        vec = [self.field.zero()] * len(b)
        for e, c in self.terms.items():
            vec[b.index(e)] = c
        return vec

    def to_sparse_vector(self, b: GradedBasis) -> dict[int, Raw]:
        if b.n != self.n or b.degree != self.degree:
            raise ValueError("basis does not match polynomial")
        return {b.index(e): c for e, c in self.terms.items()}

    @staticmethod
    def from_vector(field: FieldSpec, b: GradedBasis, vec) -> "HomPoly":
        terms = {b.monomials[i]: c for i, c in enumerate(vec) if c}
        return HomPoly(field, b.n, b.degree, terms)

    @staticmethod
    def from_sparse_vector(field: FieldSpec, b: GradedBasis, vec: Mapping[int, Raw]) -> "HomPoly":
        terms = {b.monomials[i]: c for i, c in vec.items() if c}
        return HomPoly(field, b.n, b.degree, terms)

    def evaluate(self, point: Iterable) -> Raw:
        """Evaluate at a point given by one coordinate per variable."""
        f = self.field
        coords = [f.canon(v) for v in point]
        if len(coords) != self.n + 1:
            raise ValueError("wrong number of coordinates")
        total = f.zero()
        for e, c in self.terms.items():
            v = c
            for x, k in zip(coords, e):
                if k:
                    if f.is_rational:
                        v = v * x ** k
                    else:
                        v = v * pow(x, k, f.p) % f.p
                    if not v:
                        break
            total = f.radd(total, v)
        return total

    def scale_tail_variables(self, first: int, a) -> "HomPoly":
        """Substitute x_j -> a*x_j for every j >= first."""
        f = self.field
        aa = f.canon(a)
        out: dict[Exponents, Raw] = {}
        for e, c in self.terms.items():
            k = sum(e[first:])
            if k == 0:
                v = c
            elif not aa:
                continue
            else:
                if f.is_rational:
                    v = c * aa ** k
                else:
                    v = c * pow(aa, k, f.p) % f.p
                if not v:
                    continue
            out[e] = v
        return HomPoly(f, self.n, self.degree, out, _canon=True)

    # -- JSON form: {"n":, "degree":, "terms":[{"coeff":, "exps":}...]}

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), reverse=True)
        coeffs = []
        for e, c in items:
            if self.field.is_rational and c.denominator != 1:
                coeffs.append(f"{c.numerator}/{c.denominator}")
            else:
                coeffs.append(int(c if not self.field.is_rational else c.numerator))
        return {
            "n": self.n,
            "degree": self.degree,
            "terms": [{"coeff": c, "exps": list(e)} for (e, _), c in zip(items, coeffs)],
        }

    @staticmethod
    def from_json(obj: Mapping, field: FieldSpec) -> "HomPoly":
        n = int(obj["n"])
        degree = int(obj["degree"])
        terms = {}
        for t in obj.get("terms", []):
            exps = tuple(int(e) for e in t["exps"])
            terms[exps] = field.raw_from_string(t["coeff"])
        return HomPoly(field, n, degree, terms)


def mul(f: HomPoly, g: HomPoly) -> HomPoly:
    return f * g


def partial(f: HomPoly, i: int) -> HomPoly:
    return f.partial(i)


def random_poly(field: FieldSpec, n: int, degree: int, rng: Random,
                nvars: int | None = None, coeff_bound: int = 4) -> HomPoly:
    """A random nonzero form of the given degree, supported on the first
    `nvars` variables (all n+1 when omitted).  Rational coefficients are
    drawn from [-coeff_bound, coeff_bound]."""
    m = (n + 1 if nvars is None else nvars) - 1
    if m < 0:
        raise ValueError("need at least one variable")
    pad = (0,) * (n - m)
    while True:
        terms: dict[Exponents, Raw] = {}
        for e in _monomials(m, degree):
            if field.is_rational:
                c = rng.randint(-coeff_bound, coeff_bound)
            else:
                c = rng.randrange(field.p)
            if c:
                terms[e + pad] = field.canon(c)
        if terms:
            return HomPoly(field, n, degree, terms, _canon=True)
