"""Exact Ehrhart theory for lattice polytopes.

Ehrhart polynomials and h*-vectors by lattice-point enumeration, the spanning
index and lattice coarsening via integer normal forms, the integer
decomposition property, checkers for the h*-inequality families, and a small
lab for Hilbert functions of point sets in weighted projective space.
"""

__version__ = "0.1.0"

from .constructions import (CorpusSpec, cube, join, random_corpus, reeve_bipyramid, reeve_simplex, segment,
                            standard_family, unimodular_simplex)
from .ehrhart import EhrhartPolynomial, HStarVector, ehrhart_counts, ehrhart_polynomial, hstar_vector
from .geometry import (DegeneratePolytopeError, HalfspaceRep, LatticePolytope, affine_dimension,
                       facet_representation, lattice_points_in_dilate)
from .idp import IdpVerdict, is_idp
from .inequalities import InequalityReport, check_lower_bounds, check_stanley, check_strong
from .lattice import PointLatticeInfo, SmithForm, coarsen, hermite_normal_form, smith_normal_form, spanning_index
from .upp import (ProjectivePoint, ProjectivePointSet, WeightedSpace, check_min_formula, check_upp_bound,
                  hilbert_function, is_uniform_position, weighted_monomial_basis)
