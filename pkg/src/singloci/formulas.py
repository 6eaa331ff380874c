"""Closed-form evaluators for the named dimension and codimension quantities.

Everything here is pure big-integer arithmetic.  Binomials follow the
convention C(m, k) = 0 whenever m < k, which silently covers the shifted
tops (possibly negative) that appear at small degrees; the theorem
hypotheses themselves are enforced by the checkers, not here.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


def binom(m: int, k: int) -> int:
    """C(m, k), with C(m, k) = 0 when m < k.  k must be non-negative."""
    if k < 0:
        raise ValueError("lower binomial index must be non-negative")
    if m < k:
        return 0
    return math.comb(m, k)


@dataclass(frozen=True)
class Params:
    """Ambient dimension n, subscheme dimension b, degree d, form degree l."""

    n: int
    b: int
    d: int = 1
    l: int = 1

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("need n >= 3")
        if not 1 <= self.b <= self.n - 1:
            raise ValueError("need 1 <= b <= n-1")
        if self.d < 1:
            raise ValueError("need d >= 1")
        if self.l < 1:
            raise ValueError("need l >= 1")


def _check_nb(n: int, b: int) -> None:
    if n < 3 or not 1 <= b <= n - 1:
        raise ValueError(f"invalid (n, b) = ({n}, {b}): need n >= 3, 1 <= b <= n-1")


def a_formula(n: int, b: int, l: int) -> int:
    """C(l+b,b) + (n-b)C(l-1+b,b) + 1 - (b+1)(n-b): the codimension of the
    locus of forms singular along some linear b-plane."""
    _check_nb(n, b)
    return binom(l + b, b) + (n - b) * binom(l - 1 + b, b) + 1 - (b + 1) * (n - b)


def linear_codim(n: int, b: int, l: int) -> int:
    """Codimension in S_l of the forms singular along a fixed linear b-plane:
    C(l+b,b) + (n-b)C(l-1+b,b)."""
    _check_nb(n, b)
    return binom(l + b, b) + (n - b) * binom(l - 1 + b, b)


def union_bound(n: int, b: int, d: int, l: int) -> int:
    """Lower bound for the codimension of the forms singular along d linear
    b-planes through a common (b-1)-plane:
    C(l+b,b) + (n-b) * sum_{e=1..d} C(l-2e+1+b, b).
    The bound is asserted for d <= (l+1)/2; the evaluator is total."""
    _check_nb(n, b)
    if d < 1:
        raise ValueError("need d >= 1")
    return binom(l + b, b) + (n - b) * sum(binom(l - 2 * e + 1 + b, b)
                                           for e in range(1, d + 1))


def beta(n: int, b: int, d: int, l: int) -> int:
    """Codimension of the degree-l piece of (f, x_{b+2},..,x_n)^2 for any
    nonzero f of degree d in x_0..x_{b+1}, valid once l >= 2d:
    C(l+b+1,b+1) - C(l-2d+b+1,b+1) + (n-b-1)(C(l+b,b+1) - C(l-d+b,b+1))."""
    _check_nb(n, b)
    return (binom(l + b + 1, b + 1) - binom(l - 2 * d + b + 1, b + 1)
            + (n - b - 1) * (binom(l + b, b + 1) - binom(l - d + b, b + 1)))


def gamma2(n: int, b: int, l: int) -> int:
    """beta_2(l) + 1 - (b+2)n + b(b+1)/2; the dimension of the second
    candidate component is C(l+n,n) - gamma2(l)."""
    return beta(n, b, 2, l) + 1 - (b + 2) * n + b * (b + 1) // 2


def hilb2_poly(b: int, z: int) -> int:
    """Hilbert polynomial of a degree-2 hypersurface inside a linear
    (b+1)-plane, evaluated at z: C(z+b+1,b+1) - C(z-1+b,b+1)."""
    if b < 1:
        raise ValueError("need b >= 1")
    return binom(z + b + 1, b + 1) - binom(z - 1 + b, b + 1)


@dataclass(frozen=True)
class RestrictedHilbertDim:
    """Dimension of the restricted Hilbert scheme of integral b-dimensional
    degree-d subschemes; `conditional` marks the conjectural case b >= 2."""

    value: int
    conditional: bool


def plane_curve_rhilb_dim(n: int, d: int) -> int:
    """b = 1 case (a theorem): 3(n-2) + d(d+3)/2."""
    return 3 * (n - 2) + d * (d + 3) // 2


def conjectural_rhilb_dim(n: int, b: int, d: int) -> int:
    """General-b formula (conjectural for b >= 2):
    (b+2)(n-b-1) - 1 + C(d+b+1, b+1)."""
    return (b + 2) * (n - b - 1) - 1 + binom(d + b + 1, b + 1)


def rhilb_dim(n: int, b: int, d: int) -> RestrictedHilbertDim:
    """Dimension of the restricted Hilbert scheme; d >= 2 required."""
    _check_nb(n, b)
    if d < 2:
        raise ValueError("need d >= 2")
    if b == 1:
        return RestrictedHilbertDim(plane_curve_rhilb_dim(n, d), False)
    return RestrictedHilbertDim(conjectural_rhilb_dim(n, b, d), True)


@dataclass(frozen=True)
class X1Dim:
    """Dimension of the linear-singular-locus component and its split into
    the projectivized fiber and the Grassmannian of b-planes."""

    total: int
    fiber_dim: int
    grassmannian_dim: int


def dim_x1(n: int, b: int, l: int) -> X1Dim:
    """C(l+n,n) - a_{n,b}(l), together with the accounting decomposition
    [C(l+n,n) - linear_codim - 1] + (b+1)(n-b)."""
    _check_nb(n, b)
    total = binom(l + n, n) - a_formula(n, b, l)
    fiber = binom(l + n, n) - linear_codim(n, b, l) - 1
    return X1Dim(total, fiber, (b + 1) * (n - b))
