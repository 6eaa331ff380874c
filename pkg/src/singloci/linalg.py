"""Exact linear algebra over the scalars: echelon, rank, kernel, intersection.

Over the rationals, elimination is fraction-free: rows are kept as integer
vectors (content removed after every combination), so intermediate entries
never pick up denominators; pivots are normalized to 1 only when the final
reduced echelon form is assembled.  Over F_p, plain Gaussian elimination.
Pivoting is deterministic (first nonzero in column order), so echelon forms,
kernels and intersections are reproducible.

Rows travel through the eliminator as {column -> value} maps; the public
matrix type is dense.  Every operation is pure.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .gradedpoly import GradedBasis
from .scalars import FieldSpec, Raw, Scalar


class AmbientMismatchError(ValueError):
    """Raised when subspaces of different ambient spaces are combined."""


SparseRow = dict[int, Raw]


def _strip_content(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def _int_row(row: Mapping[int, Raw]) -> dict[int, int]:
    """Clear denominators and remove content from a rational sparse row."""
    lcm = 1
    for v in row.values():
        d = v.denominator
        lcm = lcm // gcd(lcm, d) * d
    out = {c: int(v * lcm) for c, v in row.items() if v}
    return _strip_content(out)


def _rref_rational(rows: Iterable[Mapping[int, Raw]]) -> dict[int, dict[int, int]]:
    """Forward-and-back elimination; returns pivot column -> integer row."""
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = _int_row(raw)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                break
            a, b = piv[lead], row[lead]
            new = {}
            for c, v in row.items():
                w = a * v - b * piv.get(c, 0)
                if w:
                    new[c] = w
            for c, v in piv.items():
                if c not in row:
                    w = -b * v
                    if w:
                        new[c] = w
            row = _strip_content(new)
    # back-substitution: clear pivot columns from the other rows
    for lead in sorted(pivots, reverse=True):
        piv = pivots[lead]
        for other_lead, other in pivots.items():
            if other_lead >= lead or lead not in other:
                continue
            a, b = piv[lead], other[lead]
            new = {}
            for c, v in other.items():
                w = a * v - b * piv.get(c, 0)
                if w:
                    new[c] = w
            for c, v in piv.items():
                if c not in other:
                    w = -b * v
                    if w:
                        new[c] = w
            pivots[other_lead] = _strip_content(new)
    return pivots


def _rref_mod(rows: Iterable[Mapping[int, Raw]], p: int) -> dict[int, dict[int, int]]:
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            b = row[lead]
            new = {}
            for c, v in row.items():
                w = (v - b * piv.get(c, 0)) % p
                if w:
                    new[c] = w
            for c, v in piv.items():
                if c not in row:
                    w = -b * v % p
                    if w:
                        new[c] = w
            row = new
    for lead in sorted(pivots, reverse=True):
        piv = pivots[lead]
        for other_lead, other in pivots.items():
            if other_lead >= lead or lead not in other:
                continue
            b = other[lead]
            new = {}
            for c, v in other.items():
                w = (v - b * piv.get(c, 0)) % p
                if w:
                    new[c] = w
            for c, v in piv.items():
                if c not in other:
                    w = -b * v % p
                    if w:
                        new[c] = w
            pivots[other_lead] = new
    return pivots


def rref_rows(field: FieldSpec, rows: Iterable[Mapping[int, Raw]]) -> list[SparseRow]:
    """Canonical reduced rows (pivots 1, increasing pivot columns)."""
    if field.is_rational:
        pivots = _rref_rational(rows)
        out = []
        for lead in sorted(pivots):
            piv = pivots[lead]
            a = piv[lead]
            out.append({c: Fraction(v, a) for c, v in piv.items()})
        return out
    pivots = _rref_mod(rows, field.p)
    return [dict(pivots[lead]) for lead in sorted(pivots)]


@dataclass(frozen=True)
class ExactMatrix:
    """A dense matrix of exact scalars."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[tuple[Raw, ...], ...] = dc_field(repr=False)

    @staticmethod
    def from_rows(field: FieldSpec, data: Sequence[Sequence]) -> "ExactMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        ent = []
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged matrix")
            ent.append(tuple(field.canon(v) for v in r))
        return ExactMatrix(field, rows, cols, tuple(ent))

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self.entries[i][j])

    def sparse_rows(self) -> list[SparseRow]:
        return [{j: v for j, v in enumerate(row) if v} for row in self.entries]

    def to_json(self) -> list[list]:
        f = self.field
        return [[f.raw_to_string(v) for v in row] for row in self.entries]


def _densify(field: FieldSpec, sparse: Sequence[SparseRow], cols: int) -> list[tuple[Raw, ...]]:
    zero = field.zero()
    out = []
    for row in sparse:
        dense = [zero] * cols
        for c, v in row.items():
            dense[c] = v
        out.append(tuple(dense))
    return out


def echelon(m: ExactMatrix) -> tuple[ExactMatrix, int]:
    """Reduced row-echelon form (same shape, zero rows at the bottom) and rank."""
    reduced = rref_rows(m.field, m.sparse_rows())
    rank = len(reduced)
    dense = _densify(m.field, reduced, m.cols)
    zero_row = tuple([m.field.zero()] * m.cols)
    dense.extend([zero_row] * (m.rows - rank))
    return ExactMatrix(m.field, m.rows, m.cols, tuple(dense)), rank


@dataclass(frozen=True, eq=False)
class Subspace:
    """A linear subspace, held as reduced row-echelon coordinate rows.

    `ambient_basis` is set when the ambient space is a graded piece S_l;
    plain coordinate spaces (e.g. kernels of arbitrary matrices) leave it
    unset.  The reduced rows are canonical, so two subspaces are equal
    exactly when their row lists agree.
    """

    field: FieldSpec
    ambient_dim: int
    rows: tuple[SparseRow, ...] = dc_field(repr=False)
    ambient_basis: GradedBasis | None = None

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return self.ambient_dim - len(self.rows)

    def pivot_columns(self) -> list[int]:
        return [min(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.rows == other.rows)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def check_compatible(self, other: "Subspace") -> None:
        if (self.field != other.field or self.ambient_dim != other.ambient_dim
                or (self.ambient_basis is not None and other.ambient_basis is not None
                    and (self.ambient_basis.n != other.ambient_basis.n
                         or self.ambient_basis.degree != other.ambient_basis.degree))):
            raise AmbientMismatchError("subspaces live in different ambient spaces")

    def to_matrix(self) -> ExactMatrix:
        dense = _densify(self.field, self.rows, self.ambient_dim)
        return ExactMatrix(self.field, len(self.rows), self.ambient_dim, tuple(dense))


def subspace_from_rows(field: FieldSpec, rows: Iterable[Mapping[int, Raw]],
                       ambient_dim: int, ambient_basis: GradedBasis | None = None) -> Subspace:
    reduced = rref_rows(field, rows)
    if reduced and max(max(r) for r in reduced) >= ambient_dim:
        raise ValueError("row support exceeds ambient dimension")
    return Subspace(field, ambient_dim, tuple(reduced), ambient_basis)


def _reduce_vector(field: FieldSpec, rows: Sequence[SparseRow], vec: Mapping[int, Raw]) -> SparseRow:
    residual = {c: field.canon(v) for c, v in vec.items() if v}
    by_pivot = {min(r): r for r in rows}
    for lead in sorted(by_pivot):
        coeff = residual.get(lead)
        if not coeff:
            continue
        row = by_pivot[lead]
        for c, v in row.items():
            w = field.rsub(residual.get(c, field.zero()), field.rmul(coeff, v))
            if w:
                residual[c] = w
            else:
                residual.pop(c, None)
    return residual


def kernel_sparse(field: FieldSpec, rows: Iterable[Mapping[int, Raw]], cols: int,
                  ambient_basis: GradedBasis | None = None) -> Subspace:
    """Right null space of the linear system given by sparse functional rows."""
    reduced = rref_rows(field, rows)
    pivot_cols = [min(r) for r in reduced]
    pivot_set = set(pivot_cols)
    one = field.one()
    vectors: list[SparseRow] = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec: SparseRow = {free: one}
        for lead, row in zip(pivot_cols, reduced):
            v = row.get(free)
            if v:
                vec[lead] = field.rneg(v)
        vectors.append(vec)
    return subspace_from_rows(field, vectors, cols, ambient_basis)


def kernel(m: ExactMatrix) -> Subspace:
    """Basis of the right null space; dim = cols - rank."""
    return kernel_sparse(m.field, m.sparse_rows(), m.cols)


def contains(a: Subspace, v) -> bool:
    """True exactly when the coordinate vector v lies in the span of a."""
    if isinstance(v, Mapping):
        vec = dict(v)
    else:
        seq = list(v)
        if len(seq) != a.ambient_dim:
            raise AmbientMismatchError("vector length does not match ambient dimension")
        vec = {i: x for i, x in enumerate(seq) if x}
    if vec and max(vec) >= a.ambient_dim:
        raise AmbientMismatchError("vector support exceeds ambient dimension")
    return not _reduce_vector(a.field, a.rows, vec)


def contains_subspace(a: Subspace, b: Subspace) -> bool:
    """True exactly when b is a subspace of a."""
    a.check_compatible(b)
    return all(not _reduce_vector(a.field, a.rows, r) for r in b.rows)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection, via the kernel of the stacked-generators system."""
    a.check_compatible(b)
    da = a.dim
    # columns 0..da-1 carry coefficients on a's rows, the rest on b's rows;
    # kernel vectors (alpha, beta) satisfy alpha*A + beta*B = 0
    stacked: list[SparseRow] = [dict() for _ in range(a.ambient_dim)]
    for j, row in enumerate(a.rows):
        for c, v in row.items():
            stacked[c][j] = v
    for j, row in enumerate(b.rows):
        for c, v in row.items():
            stacked[c][da + j] = v
    null = kernel_sparse(a.field, [r for r in stacked if r], da + b.dim)
    f = a.field
    vectors: list[SparseRow] = []
    for combo in null.rows:
        vec: SparseRow = {}
        for j, coeff in combo.items():
            if j >= da:
                continue
            for c, v in a.rows[j].items():
                w = f.radd(vec.get(c, f.zero()), f.rmul(coeff, v))
                if w:
                    vec[c] = w
                else:
                    vec.pop(c, None)
        if vec:
            vectors.append(vec)
    return subspace_from_rows(a.field, vectors, a.ambient_dim,
                              a.ambient_basis or b.ambient_basis)


def sum_dim(a: Subspace, b: Subspace) -> int:
    """Dimension of a + b (rank of the stacked rows)."""
    a.check_compatible(b)
    return len(rref_rows(a.field, list(a.rows) + list(b.rows)))


def rank_of_rows(field: FieldSpec, rows: Iterable[Mapping[int, Raw]]) -> int:
    return len(rref_rows(field, rows))
