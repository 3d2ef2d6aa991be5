"""Exact computations with line arrangements and the quartic surfaces they parametrize."""

from .arrangements import (
    LabeledArrangement,
    labeled_lambda,
    labeled_lambda7,
    labeled_lambda8,
    lambda_operator,
    proj_equivalent,
    singular_points,
    t_vector,
)
from .dynamics import (
    aut_action,
    degree_estimate,
    form_multiplier,
    lambda_step,
    orbit,
    period_map,
)
from .errors import (
    BudgetExceeded,
    CertificationFailed,
    Degenerate,
    NonInvertible,
    UnknownCase,
)
from .families import parametrized_realization, surface_model
from .fields import QQ, ExtensionField, PrimeField, RationalFunctionField
from .matroids import Permutation, Rank3Matroid, matroid_M, matroid_from_arrangement
from .modular import WeierstrassModel, fiber_profile, point_order, weierstrass
from .mpoly import MPoly, gcd, parse
from .projective import ProjLine, ProjMap2, ProjPoint, frame_map, join, meet
from .semiconj import F_eval, branch_curve, mu_pointwise, plane_map_model

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
