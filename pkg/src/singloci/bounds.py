"""Inequality checkers and the certified effective-threshold search.

Two families of strict inequalities are handled:

* small-degree: (restricted-Hilbert dimension term) < (n-b) * sum_{e=2..d}
  C(l-2e+1+b, b), which forces every degree-d candidate component below the
  linear one;
* second-component: the analogous comparison against the degree-2 component,
  whose left side also grows with l.

`compute_l0` produces a certificate (d0, l0, evidence) such that the target
inequality holds for every admissible pair (d, l) with l >= l0:

* a d-tail: substituting the minimal admissible l = 2d-1 turns the right
  side into a sum independent of l, so the margin dominates a univariate
  integer polynomial in d; its positivity past d0 is certified by a Cauchy
  root bound plus exact sign checks at the integer points up to that bound;
* a per-d table for d <= d0: for the small-degree inequality the margin is
  non-decreasing in l (the left side is constant, every right-side binomial
  is non-decreasing), so the minimal passing l settles all larger l; for the
  second-component inequality the margin is a polynomial in l once all
  binomial tops are non-negative, and positivity from l_min on is again
  certified by a Cauchy bound plus integer sign checks.

Certificates serialize to JSON with every integer as a decimal string and
are replayed by `verify_certificate`, which rechecks all sign conditions
and sweeps the full window [l0, l0+100] through the exact gap evaluators.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .formulas import Params, binom, conjectural_rhilb_dim, plane_curve_rhilb_dim

SMALL_DEGREE = "small-degree"
SMALL_DEGREE_UNCONDITIONAL = "small-degree-unconditional"
SECOND_COMPONENT = "second-component"

REPLAY_WINDOW = 100
TAIL_CHECK_SPAN = 50


# ---------------------------------------------------------------------------
# gap evaluators


@dataclass(frozen=True)
class GapReport:
    """Both sides of one strict inequality at fixed parameters."""

    params: Params
    lhs: int
    rhs: int
    inequality: str
    conditional: bool

    @property
    def margin(self) -> int:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.margin > 0

    def to_json(self) -> dict:
        p = self.params
        return {"n": p.n, "b": p.b, "d": p.d, "l": p.l,
                "lhs": str(self.lhs), "rhs": str(self.rhs),
                "margin": str(self.margin), "inequality": self.inequality,
                "conditional": self.conditional}


def _c_small(n: int, b: int) -> int:
    return (b + 2) * (n - b - 1) - 1 - (b + 1) * (n - b)


def _c_second(b: int) -> int:
    return -(b + 1) * (b + 4) // 2 - 1


def gap_small_degree(n: int, b: int, d: int, l: int) -> GapReport:
    """Margin of the small-degree inequality.  For b = 1 the left side comes
    from the proven plane-curve dimension (unconditional); for b >= 2 it
    relies on the conjectural restricted-Hilbert dimension."""
    params = Params(n, b, d, l)
    if d < 2:
        raise ValueError("small-degree inequality needs d >= 2")
    via_conjecture = _c_small(n, b) + binom(d + b + 1, b + 1)
    if b == 1:
        lhs = plane_curve_rhilb_dim(n, d) - (b + 1) * (n - b)
        assert lhs == via_conjecture
        kind = SMALL_DEGREE_UNCONDITIONAL
    else:
        lhs = via_conjecture
        kind = SMALL_DEGREE
    rhs = (n - b) * sum(binom(l - 2 * e + 1 + b, b) for e in range(2, d + 1))
    return GapReport(params, lhs, rhs, kind, b >= 2)


def gap_second_component(n: int, b: int, d: int, l: int) -> GapReport:
    """Margin of the second-component inequality.  Requires d >= 3, and
    d >= 4 when b = n-1.  Always conditional (the restricted-Hilbert
    dimension of general degree enters through the conjecture)."""
    params = Params(n, b, d, l)
    if b == n - 1:
        if d < 4:
            raise ValueError("when b = n-1 the second-component inequality needs d >= 4")
    elif d < 3:
        raise ValueError("second-component inequality needs d >= 3")
    c = _c_second(b)
    lhs = (c + (n - b) * binom(l + b - 3, b - 1) + binom(l + b - 3, b)
           + binom(d + b + 1, b + 1))
    rhs = (n - b) * sum(binom(l - 2 * e + 1 + b, b) for e in range(3, d + 1))
    return GapReport(params, lhs, rhs, SECOND_COMPONENT, True)


# ---------------------------------------------------------------------------
# exact univariate polynomials


@dataclass(frozen=True)
class IntPoly:
    """Univariate polynomial with exact rational coefficients (ascending)."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs) -> "IntPoly":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPoly(tuple(cs))

    @staticmethod
    def constant(c) -> "IntPoly":
        return IntPoly.of(c)

    @staticmethod
    def binomial(shift: int, k: int) -> "IntPoly":
        """C(x + shift, k) as a polynomial in x (valid once x + shift >= 0)."""
        poly = IntPoly.of(1)
        for i in range(k):
            poly = poly.mul_linear(Fraction(shift - i), Fraction(1))
        return poly.scale(Fraction(1, math.factorial(k)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * max(len(a), len(b))
        for i, c in enumerate(a):
            out[i] += c
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly.of(*out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "IntPoly":
        return IntPoly.of(*(v * Fraction(c) for v in self.coeffs))

    def mul_linear(self, c0: Fraction, c1: Fraction) -> "IntPoly":
        """Multiply by (c1*x + c0)."""
        out = [Fraction(0)] * (len(self.coeffs) + 1)
        for i, v in enumerate(self.coeffs):
            out[i] += v * c0
            out[i + 1] += v * c1
        return IntPoly.of(*out)

    def cauchy_bound(self) -> Fraction:
        """1 + max |a_i| / |lead|: every real root is strictly below it."""
        if self.degree < 1:
            return Fraction(0)
        lead = abs(self.lead)
        return 1 + max(abs(c) for c in self.coeffs[:-1]) / lead

    def root_bound_int(self) -> int:
        """A certified integer past every real root: the smaller of the
        Cauchy bound and the Fujiwara bound 2 * max_k (|a_{m-k}|/|a_m|)^(1/k),
        the latter evaluated in exact integer arithmetic.  Far sharper when
        the constant term dwarfs the leading coefficient."""
        if self.degree < 1:
            return 0
        m = self.degree
        lead = abs(self.lead)
        fujiwara = 0
        for k in range(1, m + 1):
            a = abs(self.coeffs[m - k])
            if not a:
                continue
            # smallest integer r with (r/2)^k >= a / lead
            val = a / lead * 2 ** k
            fujiwara = max(fujiwara, _kth_root_ceil(val.numerator, val.denominator, k))
        return min(math.ceil(self.cauchy_bound()), fujiwara)

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" if c.denominator != 1
                else str(c.numerator) for c in self.coeffs]

    @staticmethod
    def from_json(items: Sequence[str]) -> "IntPoly":
        return IntPoly.of(*(Fraction(s) for s in items))


def _kth_root_ceil(p: int, q: int, k: int) -> int:
    """Smallest integer r >= 0 with r^k >= p/q."""
    if p <= 0:
        return 0
    hi = 1
    while hi ** k * q < p:
        hi *= 2
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k * q >= p:
            hi = mid
        else:
            lo = mid + 1
    return hi


def _interpolate(points: Sequence[tuple[int, int]]) -> IntPoly:
    poly = IntPoly.of()
    for i, (xi, yi) in enumerate(points):
        term = IntPoly.of(yi)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            term = term.mul_linear(Fraction(-xj), Fraction(1)).scale(Fraction(1, xi - xj))
        poly = poly + term
    return poly


def _sum_binom_poly(b: int, offset: int) -> IntPoly:
    """Polynomial in d equal to sum_{k=0}^{d-offset} C(2k+b, b) for every
    integer d >= offset - 1 (the empty sum at d = offset - 1 included)."""

    def literal(d: int) -> int:
        return sum(binom(2 * k + b, b) for k in range(0, d - offset + 1))

    xs = list(range(offset - 1, offset + b + 2))
    poly = _interpolate([(x, literal(x)) for x in xs])
    for x in range(offset - 1, offset + b + 8):
        assert poly(x) == literal(x)
    return poly


# ---------------------------------------------------------------------------
# tail and per-d margin expressions

POLY_FLOOR_MIN = 1


def _tail_offset(n: int, b: int, kind: str) -> int:
    if kind != SECOND_COMPONENT:
        return 2
    return 5 if n - b == 1 else 4


def _tail_literal(n: int, b: int, kind: str) -> Callable[[int], int]:
    offset = _tail_offset(n, b, kind)
    if kind == SECOND_COMPONENT:
        coeff = 1 if n - b == 1 else n - b
        const = 0
    else:
        coeff = n - b
        const = _c_small(n, b)

    def literal(d: int) -> int:
        s = sum(binom(2 * k + b, b) for k in range(0, d - offset + 1))
        return coeff * s - const - binom(d + b + 1, b + 1)

    return literal


def _tail_poly(n: int, b: int, kind: str) -> IntPoly:
    offset = _tail_offset(n, b, kind)
    if kind == SECOND_COMPONENT:
        coeff = 1 if n - b == 1 else n - b
        const = 0
    else:
        coeff = n - b
        const = _c_small(n, b)
    poly = (_sum_binom_poly(b, offset).scale(coeff)
            - IntPoly.binomial(b + 1, b + 1)
            - IntPoly.constant(const))
    literal = _tail_literal(n, b, kind)
    for d in range(offset - 1, offset + b + 8):
        assert poly(d) == literal(d)
    return poly


def _aux_literal(n: int, b: int) -> Callable[[int], int]:
    c = _c_second(b)
    if n - b == 1:

        def literal(l: int) -> int:
            return (binom(l - 5 + b, b) + binom(l - 7 + b, b)
                    - c - binom(l + b - 3, b - 1) - binom(l + b - 3, b))
    else:

        def literal(l: int) -> int:
            return ((n - b) * binom(l - 5 + b, b)
                    - c - (n - b) * binom(l + b - 3, b - 1) - binom(l + b - 3, b))

    return literal


def _aux_poly_and_floor(n: int, b: int) -> tuple[IntPoly, int]:
    c = _c_second(b)
    if n - b == 1:
        poly = (IntPoly.binomial(b - 5, b) + IntPoly.binomial(b - 7, b)
                - IntPoly.binomial(b - 3, b - 1) - IntPoly.binomial(b - 3, b)
                - IntPoly.constant(c))
        floor = max(POLY_FLOOR_MIN, 7 - b, 3 - b)
    else:
        poly = (IntPoly.binomial(b - 5, b).scale(n - b)
                - IntPoly.binomial(b - 3, b - 1).scale(n - b)
                - IntPoly.binomial(b - 3, b)
                - IntPoly.constant(c))
        floor = max(POLY_FLOOR_MIN, 5 - b, 3 - b)
    literal = _aux_literal(n, b)
    for l in range(floor, floor + b + 8):
        assert poly(l) == literal(l)
    return poly, floor


def _margin_poly_and_floor(n: int, b: int, d: int) -> tuple[IntPoly, int]:
    """Second-component margin as a polynomial in l, with the smallest l
    from which it agrees with the binomial-convention margin."""
    c = _c_second(b)
    poly = IntPoly.constant(-(c + binom(d + b + 1, b + 1)))
    poly = poly - IntPoly.binomial(b - 3, b - 1).scale(n - b)
    poly = poly - IntPoly.binomial(b - 3, b)
    for e in range(3, d + 1):
        poly = poly + IntPoly.binomial(b + 1 - 2 * e, b).scale(n - b)
    floor = max(POLY_FLOOR_MIN, 2 * d - 1 - b, 3 - b)
    for l in range(floor, floor + 4):
        assert poly(l) == gap_second_component(n, b, d, l).margin
    return poly, floor


def _positivity_threshold(poly: IntPoly, literal: Callable[[int], int],
                          scan_floor: int, poly_floor: int,
                          sharp: bool = False) -> tuple[int, int]:
    """Minimal `start >= scan_floor` with literal(x) > 0 for every integer
    x >= start, certified by exact checks up to `scan_to` and by a root
    bound beyond.  Requires a positive leading coefficient and
    poly == literal from poly_floor on.  `sharp` switches from the plain
    Cauchy bound to the tighter certified integer root bound."""
    if poly.lead <= 0:
        raise ValueError("difference polynomial has non-positive leading coefficient")
    bound = poly.root_bound_int() if sharp else math.ceil(poly.cauchy_bound())
    scan_to = max(bound, poly_floor, scan_floor)
    start = scan_floor
    for x in range(scan_floor, scan_to + 1):
        if literal(x) <= 0:
            start = x + 1
    return start, scan_to


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class TableEntry:
    d: int
    l_min: int
    method: str  # "monotone" | "cauchy"
    poly: IntPoly | None = None
    scan_to: int | None = None
    poly_floor: int | None = None

    def to_json(self) -> dict:
        out = {"d": str(self.d), "l_min": str(self.l_min), "method": self.method}
        if self.method == "cauchy":
            out["poly"] = self.poly.to_json()
            out["scan_to"] = str(self.scan_to)
            out["poly_floor"] = str(self.poly_floor)
        return out

    @staticmethod
    def from_json(obj: Mapping) -> "TableEntry":
        method = obj["method"]
        if method == "cauchy":
            return TableEntry(int(obj["d"]), int(obj["l_min"]), method,
                              IntPoly.from_json(obj["poly"]), int(obj["scan_to"]),
                              int(obj["poly_floor"]))
        return TableEntry(int(obj["d"]), int(obj["l_min"]), method)


@dataclass(frozen=True)
class PositivityCert:
    """A univariate strict-positivity certificate: exact sign checks on
    [scan_from, scan_to] and a Cauchy root bound beyond."""

    poly: IntPoly
    start: int
    scan_to: int
    poly_floor: int

    def to_json(self) -> dict:
        return {"poly": self.poly.to_json(),
                "cauchy_bound": str(self.poly.cauchy_bound()),
                "start": str(self.start), "scan_to": str(self.scan_to),
                "poly_floor": str(self.poly_floor)}

    @staticmethod
    def from_json(obj: Mapping) -> "PositivityCert":
        return PositivityCert(IntPoly.from_json(obj["poly"]), int(obj["start"]),
                              int(obj["scan_to"]), int(obj["poly_floor"]))


@dataclass(frozen=True)
class L0Certificate:
    """Evidence that the target inequality holds for all admissible (d, l)
    with l >= l0: a per-d table for d <= d0 plus a d-tail certificate (or a
    table alone, for the fixed-degree-bound variant)."""

    kind: str
    n: int
    b: int
    dmin: int
    d0: int
    l0: int
    conditional: bool
    table: tuple[TableEntry, ...]
    tail: PositivityCert | None
    aux: PositivityCert | None
    fixed_B: int | None = None

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "kind": self.kind,
            "n": str(self.n), "b": str(self.b),
            "dmin": str(self.dmin), "d0": str(self.d0), "l0": str(self.l0),
            "conditional": self.conditional,
            "table": [e.to_json() for e in self.table],
            "tail": self.tail.to_json() if self.tail else None,
            "aux": self.aux.to_json() if self.aux else None,
            "fixed_B": str(self.fixed_B) if self.fixed_B is not None else None,
        }

    @staticmethod
    def from_json(obj: Mapping) -> "L0Certificate":
        return L0Certificate(
            kind=obj["kind"], n=int(obj["n"]), b=int(obj["b"]),
            dmin=int(obj["dmin"]), d0=int(obj["d0"]), l0=int(obj["l0"]),
            conditional=bool(obj["conditional"]),
            table=tuple(TableEntry.from_json(e) for e in obj["table"]),
            tail=PositivityCert.from_json(obj["tail"]) if obj.get("tail") else None,
            aux=PositivityCert.from_json(obj["aux"]) if obj.get("aux") else None,
            fixed_B=int(obj["fixed_B"]) if obj.get("fixed_B") is not None else None,
        )


def _gap_fn(kind: str) -> Callable[[int, int, int, int], GapReport]:
    return gap_second_component if kind == SECOND_COMPONENT else gap_small_degree


def _dmin(n: int, b: int, kind: str) -> int:
    if kind == SECOND_COMPONENT:
        return 4 if b == n - 1 else 3
    return 2


def _monotone_l_min(n: int, b: int, d: int, cap: int = 10000) -> int:
    for l in range(1, cap):
        if gap_small_degree(n, b, d, l).holds:
            return l
    raise AssertionError("no passing l found; the margin should grow without bound")


def compute_l0(n: int, b: int, which: str = SMALL_DEGREE,
               fixed_B: int | None = None) -> L0Certificate:
    """Build and self-verify an effective-threshold certificate.

    `which` selects the inequality family (small-degree or second-component).
    With `fixed_B`, the small-degree inequality is certified for the fixed
    degree range 2 <= d <= B only (all l >= l0), and no d-tail is needed."""
    Params(n, b)
    if which in (SMALL_DEGREE, SMALL_DEGREE_UNCONDITIONAL):
        which = SMALL_DEGREE
    elif which != SECOND_COMPONENT:
        raise ValueError(f"unknown inequality kind {which!r}")
    if fixed_B is not None and which == SECOND_COMPONENT:
        raise ValueError("the fixed-degree-bound variant applies to the small-degree inequality")

    if which == SMALL_DEGREE:
        dmin = 2
        conditional = b >= 2
        if fixed_B is not None:
            if fixed_B < 2:
                raise ValueError("need B >= 2")
            table = tuple(TableEntry(d, _monotone_l_min(n, b, d), "monotone")
                          for d in range(2, fixed_B + 1))
            l0 = max(e.l_min for e in table)
            cert = L0Certificate(which, n, b, dmin, fixed_B, l0, conditional,
                                 table, None, None, fixed_B)
            _must_verify(cert)
            return cert
        tail_poly = _tail_poly(n, b, which)
        tail_literal = _tail_literal(n, b, which)
        start, scan_to = _positivity_threshold(tail_poly, tail_literal, dmin,
                                               POLY_FLOOR_MIN)
        d0 = max(start - 1, math.ceil(tail_poly.cauchy_bound()), dmin)
        tail = PositivityCert(tail_poly, start, scan_to, POLY_FLOOR_MIN)
        table = tuple(TableEntry(d, _monotone_l_min(n, b, d), "monotone")
                      for d in range(dmin, d0 + 1))
        l0 = max([1] + [e.l_min for e in table if e.l_min > 2 * e.d - 1])
        cert = L0Certificate(which, n, b, dmin, d0, l0, conditional, table, tail, None)
        _must_verify(cert)
        return cert

    # second component
    dmin = _dmin(n, b, which)
    aux_poly, aux_floor = _aux_poly_and_floor(n, b)
    aux_literal = _aux_literal(n, b)
    l_a, aux_scan_to = _positivity_threshold(aux_poly, aux_literal, 1, aux_floor,
                                             sharp=True)
    aux = PositivityCert(aux_poly, l_a, aux_scan_to, aux_floor)

    tail_poly = _tail_poly(n, b, which)
    tail_literal = _tail_literal(n, b, which)
    start, scan_to = _positivity_threshold(tail_poly, tail_literal, dmin,
                                           _tail_offset(n, b, which) - 1)
    d0 = max(start - 1, math.ceil(tail_poly.cauchy_bound()),
             (l_a + 2) // 2, dmin)
    tail = PositivityCert(tail_poly, start, scan_to,
                          _tail_offset(n, b, which) - 1)

    table = []
    for d in range(dmin, d0 + 1):
        poly, floor = _margin_poly_and_floor(n, b, d)
        l_min, d_scan_to = _positivity_threshold(
            poly, lambda l, d=d: gap_second_component(n, b, d, l).margin, 1, floor,
            sharp=True)
        table.append(TableEntry(d, l_min, "cauchy", poly, d_scan_to, floor))
    l0 = max([1] + [e.l_min for e in table if e.l_min > 2 * e.d - 1])
    cert = L0Certificate(which, n, b, dmin, d0, l0, True, tuple(table), tail, aux)
    _must_verify(cert)
    return cert


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    checks: tuple[dict, ...]

    def failures(self) -> list[dict]:
        return [c for c in self.checks if not c["ok"]]

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": list(self.checks)}


def _must_verify(cert: L0Certificate) -> None:
    result = verify_certificate(cert)
    if not result.ok:
        raise AssertionError(f"freshly built certificate failed replay: {result.failures()}")


def verify_certificate(cert: L0Certificate) -> VerifyResult:
    """Replay a certificate: recheck every sign condition it records, then
    sweep the whole window [l0, l0+100] of admissible pairs through the
    exact gap evaluators."""
    checks: list[dict] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    kind = cert.kind
    n, b = cert.n, cert.b
    gap = _gap_fn(kind)
    record("dmin", cert.dmin == _dmin(n, b, kind), f"dmin={cert.dmin}")

    expected_ds = list(range(cert.dmin, (cert.fixed_B if cert.fixed_B is not None else cert.d0) + 1))
    record("table-coverage", [e.d for e in cert.table] == expected_ds,
           f"table covers d = {expected_ds[0]}..{expected_ds[-1]}" if expected_ds
           else "empty table range")

    for e in cert.table:
        if e.method == "monotone":
            ok = gap(n, b, e.d, e.l_min).holds
            if e.l_min > 1:
                ok = ok and not gap(n, b, e.d, e.l_min - 1).holds
            record(f"table-d{e.d}", ok, f"minimal passing l = {e.l_min}")
        else:
            # the margin is a polynomial in l of degree b once every binomial
            # top is non-negative; pin the stored polynomial to it on b+1
            # points inside that regime, then the root bound carries the sign
            floor_true = max(POLY_FLOOR_MIN, 2 * e.d - 1 - b, 3 - b)
            ok = e.poly.lead > 0 and e.poly.degree <= b
            ok = ok and e.poly_floor == floor_true
            ok = ok and e.poly.root_bound_int() <= e.scan_to and floor_true <= e.scan_to
            ok = ok and all(gap(n, b, e.d, l).holds
                            for l in range(e.l_min, e.scan_to + 1))
            agree_hi = max(e.scan_to, floor_true + b)
            ok = ok and all(e.poly(l) == gap(n, b, e.d, l).margin
                            for l in range(floor_true, agree_hi + 1))
            record(f"table-d{e.d}", ok,
                   f"margin positive on [{e.l_min}, {e.scan_to}] and beyond")

    if cert.tail is not None:
        t = cert.tail
        literal = _tail_literal(n, b, kind)
        floor_true = _tail_offset(n, b, kind) - 1 if kind == SECOND_COMPONENT else POLY_FLOOR_MIN
        ok = t.poly.lead > 0 and t.poly.degree <= b + 1
        ok = ok and t.poly_floor == floor_true
        ok = ok and t.poly.cauchy_bound() <= cert.d0
        hi = max(t.scan_to, cert.d0 + TAIL_CHECK_SPAN, cert.d0 + b + 2)
        ok = ok and all(literal(d) > 0 for d in range(cert.d0 + 1, hi + 1))
        ok = ok and all(t.poly(d) == literal(d)
                        for d in range(max(floor_true, cert.d0 + 1), hi + 1))
        record("tail", ok, f"d-tail positive past d0={cert.d0}, root bound "
                           f"{t.poly.cauchy_bound()} <= d0")
    elif cert.fixed_B is None:
        record("tail", False, "missing d-tail certificate")

    if kind == SECOND_COMPONENT:
        if cert.aux is None:
            record("aux", False, "missing auxiliary l-bound certificate")
        else:
            a = cert.aux
            literal = _aux_literal(n, b)
            floor_true = max(POLY_FLOOR_MIN, (7 if n - b == 1 else 5) - b, 3 - b)
            ok = a.poly.lead > 0 and a.poly.degree <= b
            ok = ok and a.poly_floor == floor_true
            ok = ok and a.poly.root_bound_int() <= a.scan_to and floor_true <= a.scan_to
            hi = max(a.scan_to, a.start + TAIL_CHECK_SPAN)
            ok = ok and all(literal(l) > 0 for l in range(a.start, hi + 1))
            agree_hi = max(a.scan_to, floor_true + b)
            ok = ok and all(a.poly(l) == literal(l)
                            for l in range(floor_true, agree_hi + 1))
            ok = ok and cert.d0 >= (a.start + 2) // 2
            record("aux", ok, f"auxiliary bound holds from l = {a.start}; "
                              f"d0 >= ceil((l_A+1)/2)")

    ok_cov = all(e.l_min <= max(cert.l0, 2 * e.d - 1) for e in cert.table)
    record("l0-coverage", ok_cov, f"l0={cert.l0} dominates every constraining entry")

    replay_ok = True
    bad = None
    for l in range(cert.l0, cert.l0 + REPLAY_WINDOW + 1):
        top = (l + 1) // 2 if cert.fixed_B is None else cert.fixed_B
        for d in range(cert.dmin, top + 1):
            if not gap(n, b, d, l).holds:
                replay_ok = False
                bad = (d, l)
                break
        if not replay_ok:
            break
    record("window-replay", replay_ok,
           f"all admissible (d, l) for l in [{cert.l0}, {cert.l0 + REPLAY_WINDOW}]"
           + ("" if replay_ok else f"; first failure at (d, l) = {bad}"))

    return VerifyResult(all(c["ok"] for c in checks), tuple(checks))
