"""Exact-arithmetic verification of dimension and codimension formulas for
hypersurfaces singular along low-degree subschemes, with finite-field
degeneration scans and certified effective thresholds."""

from .bounds import (GapReport, L0Certificate, SECOND_COMPONENT, SMALL_DEGREE,
                     SMALL_DEGREE_UNCONDITIONAL, compute_l0, gap_second_component,
                     gap_small_degree, verify_certificate)
from .formulas import (Params, RestrictedHilbertDim, X1Dim, a_formula, beta, binom,
                       dim_x1, gamma2, hilb2_poly, linear_codim, rhilb_dim,
                       union_bound)
from .gradedpoly import GradedBasis, HomPoly, basis, random_poly
from .ideals import (IdealPresentation, LinearSpaceConfig, graded_piece,
                     linear_space_ideal, square, union_squared_piece, w_space)
from .linalg import (AmbientMismatchError, ExactMatrix, Subspace, contains,
                     contains_subspace, echelon, intersect, kernel, sum_dim)
from .scalars import (FieldMismatchError, FieldSpec, Scalar, parse_field,
                      prime_field, rationals)
from .specialize import (FlatLimitReport, GenericSingReport, check_flat_limit_support,
                         enumerate_points, generic_singular_support_check,
                         singular_points, specialize_generators, zero_set)

__version__ = "0.1.0"
