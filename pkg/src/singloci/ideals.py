"""Graded pieces of homogeneous ideals, squared ideals, and the space of
forms singular along a fixed subscheme.

Graded pieces are spanned by the presented generators times monomials; no
saturation is performed.  For the ideal families used by the checks (ideals
of linear spaces, (f, x_{b+2}, ..., x_n) and its square) the presented piece
agrees with the saturated one in the degrees exercised; arbitrary ideals get
no such promise.

Every operation allocates its own matrices and mutates nothing shared, so
parameter sweeps can run in parallel.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .gradedpoly import GradedBasis, HomPoly, basis
from .linalg import (SparseRow, Subspace, intersect, kernel_sparse,
                     subspace_from_rows)
from .scalars import FieldSpec, Raw


@dataclass(frozen=True, eq=False)
class IdealPresentation:
    """A homogeneous ideal of k[x_0..x_n], given by generators."""

    field: FieldSpec
    n: int
    generators: tuple[HomPoly, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.is_zero():
                raise ValueError("generators must be nonzero")
            if g.n != self.n or g.field != self.field:
                raise ValueError("generator does not match the ambient ring")

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [g.to_json() for g in self.generators]}

    @staticmethod
    def from_json(obj: Mapping, field: FieldSpec) -> "IdealPresentation":
        n = int(obj["n"])
        gens = tuple(HomPoly.from_json(g, field) for g in obj["generators"])
        return IdealPresentation(field, n, gens)

    @staticmethod
    def load(path: str, field: FieldSpec) -> "IdealPresentation":
        with open(path, "r", encoding="utf-8") as fh:
            return IdealPresentation.from_json(json.load(fh), field)


def linear_space_ideal(field: FieldSpec, n: int, b: int,
                       direction: Sequence | None = None) -> IdealPresentation:
    """The ideal of a linear b-plane: (x_{b+1}, ..., x_n) when no direction
    is given, else (x_{b+1} - p_{b+1} x_0, ..., x_n - p_n x_0)."""
    if not 1 <= b <= n - 1:
        raise ValueError("need 1 <= b <= n-1")
    gens = []
    for j in range(b + 1, n + 1):
        g = HomPoly.variable(field, n, j)
        if direction is not None:
            c = field.canon(direction[j - b - 1])
            if c:
                g = g - HomPoly.variable(field, n, 0).scale(c)
        gens.append(g)
    return IdealPresentation(field, n, tuple(gens))


@dataclass(frozen=True, eq=False)
class LinearSpaceConfig:
    """d distinct linear b-planes through the common (b-1)-plane
    V(x_0, x_{b+1}, ..., x_n), the i-th cut out by
    (x_{b+1} - p^(i)_{b+1} x_0, ..., x_n - p^(i)_n x_0)."""

    field: FieldSpec
    n: int
    b: int
    directions: tuple[tuple[Raw, ...], ...]

    def __post_init__(self):
        if not self.directions:
            raise ValueError("need at least one linear space (d >= 1)")
        seen = set()
        for p in self.directions:
            if len(p) != self.n - self.b:
                raise ValueError("direction vector has wrong length")
            key = tuple(self.field.canon(c) for c in p)
            if key in seen:
                raise ValueError("directions must be pairwise distinct")
            seen.add(key)

    @property
    def d(self) -> int:
        return len(self.directions)

    def ideals(self) -> list[IdealPresentation]:
        return [linear_space_ideal(self.field, self.n, self.b, p)
                for p in self.directions]

    def to_json(self) -> dict:
        f = self.field
        return {"n": self.n, "b": self.b,
                "directions": [[f.raw_to_string(c) for c in p] for p in self.directions]}

    @staticmethod
    def from_json(obj: Mapping, field: FieldSpec) -> "LinearSpaceConfig":
        dirs = tuple(tuple(field.raw_from_string(c) for c in p)
                     for p in obj["directions"])
        return LinearSpaceConfig(field, int(obj["n"]), int(obj["b"]), dirs)


def _span_rows(ideal: IdealPresentation, l: int, amb: GradedBasis):
    """Sparse rows g*m over all generators g and monomials m of degree l-deg(g),
    shortest rows first so that elimination meets easy pivots early."""
    rows: list[SparseRow] = []
    for g in ideal.generators:
        if g.degree > l:
            continue
        for m in basis(ideal.n, l - g.degree).monomials:
            rows.append(g.shift(m).to_sparse_vector(amb))
    rows.sort(key=len)
    return rows


def graded_piece(ideal: IdealPresentation, l: int) -> Subspace:
    """The degree-l piece of the ideal generated by the presented generators,
    as an echelonized subspace of S_l."""
    if l < 0:
        raise ValueError("degree must be non-negative")
    amb = basis(ideal.n, l)
    return subspace_from_rows(ideal.field, _span_rows(ideal, l, amb), len(amb), amb)


def square(ideal: IdealPresentation) -> IdealPresentation:
    """The ideal generated by all pairwise products of the generators."""
    gens = []
    g = ideal.generators
    for i in range(len(g)):
        for j in range(i, len(g)):
            gens.append(g[i] * g[j])
    return IdealPresentation(ideal.field, ideal.n, tuple(gens))


def _quotient_functionals(space: Subspace) -> list[SparseRow]:
    """Linear functionals on the ambient space that vanish exactly on `space`:
    one per non-pivot column of its reduced rows."""
    f = space.field
    pivot_cols = space.pivot_columns()
    pivot_set = set(pivot_cols)
    funcs: dict[int, SparseRow] = {c: {c: f.one()} for c in range(space.ambient_dim)
                                   if c not in pivot_set}
    for lead, row in zip(pivot_cols, space.rows):
        for c, v in row.items():
            if c != lead:
                funcs[c][lead] = f.rneg(v)
    return [funcs[c] for c in sorted(funcs)]


def w_space(ideal: IdealPresentation, l: int) -> Subspace:
    """All F in S_l with F in I_l and every partial derivative in I_{l-1}:
    the forms whose hypersurface is singular along V(I).  Computed as the
    kernel of the stacked quotient maps S_l -> S_l/I_l and
    S_l -> S_{l-1}/I_{l-1} (one per partial derivative)."""
    if l < 1:
        raise ValueError("need l >= 1")
    n = ideal.n
    f = ideal.field
    amb = basis(n, l)
    amb_low = basis(n, l - 1)
    piece = graded_piece(ideal, l)
    piece_low = graded_piece(ideal, l - 1)

    constraints: list[SparseRow] = list(_quotient_functionals(piece))
    low_funcs = _quotient_functionals(piece_low)
    for i in range(n + 1):
        for func in low_funcs:
            # pull the functional back through d/dx_i: the coefficient of
            # monomial mu in dF/dx_i is (mu_i + 1) * F_{mu + e_i}
            row: SparseRow = {}
            for c, v in func.items():
                mu = amb_low.monomials[c]
                lifted = list(mu)
                lifted[i] += 1
                col = amb.index(tuple(lifted))
                coeff = f.rmul(v, f.from_int(mu[i] + 1))
                if coeff:
                    prev = row.get(col)
                    w = f.radd(prev, coeff) if prev is not None else coeff
                    if w:
                        row[col] = w
                    else:
                        row.pop(col, None)
            if row:
                constraints.append(row)
    return kernel_sparse(f, constraints, len(amb), amb)


def union_squared_piece(cfg: LinearSpaceConfig, l: int) -> Subspace:
    """The degree-l piece of the intersection of the squared ideals of the
    configured linear spaces: the forms singular along their union."""
    if l < 1:
        raise ValueError("need l >= 1")
    result: Subspace | None = None
    for ideal in cfg.ideals():
        piece = graded_piece(square(ideal), l)
        result = piece if result is None else intersect(result, piece)
    return result
