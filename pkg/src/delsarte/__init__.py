"""Exact invariants of deformed Delsarte Laurent polynomials

    f(x) = x^{alpha(1)} + ... + x^{alpha(n)} + 1 + s x^{alpha(n+2)}.

Typical use::

    from delsarte import ExponentData, build_structure, ring_basis, char_polys
    sm = build_structure(ExponentData(2, [(3, 3), (3, -1)], (2, 1)))
    sm.gamma, sm.B            # 12, (5, 3, 4)
"""

from .errors import *  # noqa: F401,F403
from .lattice import ExponentData, LinearForm, StructureMatrix, build_structure, gcd_condition, in_s_delta, weight_vector
from .ehrhart import EhrhartPair, count_points, parallelepiped_points
from .ehrhart import ehrhart as ehrhart_pair
from .jacobi import MonomialRep, UnitClass, descend, ds_transition_and_gradings, hodge_weight_classification, lambda_bar, normal_form, ring_basis, z_gamma_zero
from .mellin import GammaProduct, beta_and_rbeta, mellin_transform, pk_residue, pole_order_at_zero, positive_poles
from .hyperg import ThetaOperator, exponent_multisets, frobenius_series, operators, quantum_ode, reduced_operator, singular_loci
from .monodromy import MonodromyData, char_polys, companion_pair, global_generators, hodge_numbers, invariant_form, reducible_pair
from .mirror import GramData, gram_and_stokes, poincare_series, polar_and_flags, transpose_polynomial

__version__ = "0.1.0"
