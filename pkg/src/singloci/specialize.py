"""Degeneration and singular-support checks over prime fields, by exhaustive
enumeration of projective points.

A projective point is a coordinate tuple normalized so that its first
nonzero entry is 1; sets of points are kept sorted, so reports are
deterministic.  Only prime fields are supported.
"""
from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Sequence

from .gradedpoly import HomPoly, basis
from .ideals import IdealPresentation, graded_piece, square
from .scalars import FieldSpec, Scalar, _is_prime, prime_field

POINT_BUDGET = 10 ** 6

ProjPoint = tuple[int, ...]


class PointBudgetError(ValueError):
    """Raised when a projective-space scan would exceed the point budget."""


def normalize_point(coords: Sequence[int], q: int) -> ProjPoint:
    vals = [c % q for c in coords]
    lead = next((v for v in vals if v), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    inv = pow(lead, -1, q)
    return tuple(v * inv % q for v in vals)


def _check_prime(q: int) -> None:
    if not _is_prime(q):
        raise ValueError(f"{q} is not prime (prime powers are out of scope)")


def projective_count(n: int, q: int) -> int:
    return (q ** (n + 1) - 1) // (q - 1)


def enumerate_points(n: int, q: int) -> list[ProjPoint]:
    """All points of P^n(F_q) in canonical order: grouped by the position of
    the leading 1, then lexicographically in the free coordinates."""
    _check_prime(q)
    if n < 1:
        raise ValueError("need n >= 1")
    count = projective_count(n, q)
    if count > POINT_BUDGET:
        raise PointBudgetError(f"P^{n}(F_{q}) has {count} points; budget is {POINT_BUDGET}")
    points: list[ProjPoint] = []
    for lead in range(n + 1):
        tail = n - lead
        free = [0] * tail
        while True:
            points.append((0,) * lead + (1,) + tuple(free))
            for i in range(tail - 1, -1, -1):
                free[i] += 1
                if free[i] < q:
                    break
                free[i] = 0
            else:
                break
            continue
    assert len(points) == count
    return points


def zero_set(gens: Sequence[HomPoly], n: int, q: int) -> tuple[ProjPoint, ...]:
    """Common vanishing set of the generators in P^n(F_q), sorted."""
    field = prime_field(q)
    for g in gens:
        if g.field != field or g.n != n:
            raise ValueError("generators must live in k[x_0..x_n] over F_q")
    out = [pt for pt in enumerate_points(n, q)
           if all(g.evaluate(pt) == 0 for g in gens)]
    return tuple(out)


def specialize_generators(gens: Sequence[HomPoly], n: int, b: int,
                          a: Scalar) -> list[HomPoly]:
    """Substitute x_j -> a*x_j for the last b variables in every generator.
    At a = 0 this is the limit family; zero polynomials may appear."""
    if not 1 <= b <= n - 1:
        raise ValueError("need 1 <= b <= n-1")
    first = n - b + 1
    return [g.scale_tail_variables(first, a.value) for g in gens]


def singular_points(F: HomPoly, n: int, q: int) -> tuple[ProjPoint, ...]:
    """Points where F and all of its partial derivatives vanish."""
    field = prime_field(q)
    if F.field != field or F.n != n:
        raise ValueError("form must live in k[x_0..x_n] over F_q")
    polys = [F] + [F.partial(i) for i in range(n + 1)]
    out = []
    for pt in enumerate_points(n, q):
        if F.evaluate(pt):
            continue
        if all(g.evaluate(pt) == 0 for g in polys[1:]):
            out.append(pt)
    return tuple(out)


def linear_span_points(q: int, vectors: Sequence[Sequence[int]]) -> set[ProjPoint]:
    """All projective points in the span of the given coordinate vectors."""
    _check_prime(q)
    k = len(vectors)
    n = len(vectors[0]) - 1
    pts: set[ProjPoint] = set()
    # one representative per point of P^(k-1): leading coefficient 1
    for lead in range(k):
        free = [0] * (k - lead - 1)
        while True:
            coeffs = [0] * lead + [1] + list(free)
            vec = [0] * (n + 1)
            for c, v in zip(coeffs, vectors):
                if c:
                    for i, x in enumerate(v):
                        vec[i] = (vec[i] + c * x) % q
            if any(vec):
                pts.add(normalize_point(vec, q))
            for i in range(len(free) - 1, -1, -1):
                free[i] += 1
                if free[i] < q:
                    break
                free[i] = 0
            else:
                break
            continue
    return pts


@dataclass(frozen=True)
class FlatLimitReport:
    """Outcome of comparing the a=0 specialization with the union of the
    linear spaces through the common center and the hyperplane-section
    points."""

    n: int
    b: int
    q: int
    d: int
    section_points: tuple[ProjPoint, ...]
    limit_count: int
    union_count: int
    extra_points: tuple[ProjPoint, ...]
    missing_points: tuple[ProjPoint, ...]
    verdict: str  # EQUAL | PROPER_CONTAINMENT | MISMATCH

    def to_json(self) -> dict:
        return {
            "n": self.n, "b": self.b, "q": self.q, "d": self.d,
            "section_points": [list(p) for p in self.section_points],
            "limit_count": self.limit_count,
            "union_count": self.union_count,
            "extra_points": [list(p) for p in self.extra_points],
            "missing_points": [list(p) for p in self.missing_points],
            "verdict": self.verdict,
        }


def check_flat_limit_support(gens: Sequence[HomPoly], n: int, b: int, q: int,
                             expected_d: int | None = None) -> FlatLimitReport:
    """Scan-verify that the support of the a=0 specialization equals the
    union of the b-planes spanned by the center V(x_0,..,x_{n-b}) and the
    points of C cut by x_{n-b+1} = ... = x_n = 0.

    The transversality hypothesis is checked set-theoretically: the section
    must consist of exactly `expected_d` distinct points (when supplied)."""
    field = prime_field(q)
    if not 1 <= b <= n - 1:
        raise ValueError("need 1 <= b <= n-1")
    section_gens = list(gens) + [HomPoly.variable(field, n, j)
                                 for j in range(n - b + 1, n + 1)]
    section = zero_set(section_gens, n, q)
    if expected_d is not None and len(section) != expected_d:
        raise ValueError(
            f"hyperplane section has {len(section)} points, expected {expected_d}: "
            "the transversality hypothesis is not met")
    d = len(section)
    if d == 0:
        raise ValueError("the section is empty; no linear spaces to compare")

    limit_gens = specialize_generators(gens, n, b, Scalar.of(field, 0))
    limit_pts = set(zero_set([g for g in limit_gens if not g.is_zero()], n, q))

    center = [tuple(1 if i == j else 0 for i in range(n + 1))
              for j in range(n - b + 1, n + 1)]
    union_pts: set[ProjPoint] = set()
    for qpt in section:
        union_pts |= linear_span_points(q, [list(qpt)] + center)

    extra = tuple(sorted(limit_pts - union_pts))
    missing = tuple(sorted(union_pts - limit_pts))
    if not extra and not missing:
        verdict = "EQUAL"
    elif not missing:
        verdict = "PROPER_CONTAINMENT"
    else:
        verdict = "MISMATCH"
    return FlatLimitReport(n, b, q, d, section, len(limit_pts), len(union_pts),
                           extra, missing, verdict)


@dataclass(frozen=True)
class GenericSingReport:
    """Sampling report for the singular-support genericity statement: how
    often a random form from the squared-ideal piece is singular exactly
    along the subscheme, over F_q."""

    q: int
    l: int
    trials: int
    seed: int
    subscheme_count: int
    containment_count: int
    equal_count: int
    witness: dict | None

    @property
    def has_witness(self) -> bool:
        return self.equal_count > 0

    def to_json(self) -> dict:
        return {
            "q": self.q, "l": self.l, "trials": self.trials, "seed": self.seed,
            "subscheme_points": self.subscheme_count,
            "containment_count": self.containment_count,
            "equal_count": self.equal_count,
            "witness": self.witness,
        }


def generic_singular_support_check(ideal: IdealPresentation, l: int, q: int,
                                   trials: int, seed: int = 0) -> GenericSingReport:
    """Sample nonzero forms uniformly from the degree-l piece of the squared
    ideal; report how many have singular support exactly the zero set of the
    ideal, and how many (all, one-sidedly) contain it."""
    field = prime_field(q)
    if ideal.field != field:
        raise ValueError("ideal must be presented over F_q")
    degrees = [g.degree for g in ideal.generators]
    dmax = max(degrees)
    if l < 2 * dmax + 1:
        raise ValueError(f"need l >= 2*max generator degree + 1 = {2 * dmax + 1}")
    w = graded_piece(square(ideal), l)
    if w.dim == 0:
        raise ValueError("the squared-ideal piece is zero; nothing to sample")
    target = set(zero_set(list(ideal.generators), ideal.n, q))
    amb = basis(ideal.n, l)
    rng = Random(seed)
    containment = 0
    equal = 0
    witness: dict | None = None
    for _ in range(trials):
        while True:
            coeffs = [rng.randrange(q) for _ in range(w.dim)]
            if any(coeffs):
                break
        vec: dict[int, int] = {}
        for c, row in zip(coeffs, w.rows):
            if not c:
                continue
            for col, v in row.items():
                s = (vec.get(col, 0) + c * v) % q
                if s:
                    vec[col] = s
                else:
                    vec.pop(col, None)
        F = HomPoly.from_sparse_vector(field, amb, vec)
        sing = set(singular_points(F, ideal.n, q))
        if target <= sing:
            containment += 1
        if sing == target:
            equal += 1
            if witness is None:
                witness = F.to_json()
    return GenericSingReport(q, l, trials, seed, len(target), containment,
                             equal, witness)
