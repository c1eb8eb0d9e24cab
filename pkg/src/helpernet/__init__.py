"""Rate regions, outer bounds and capacity-boundary segments for parallel
Gaussian networks assisted by a common state-cognitive helper.

All rates are in bits per channel use (base-2 logs); noise variances are
normalized to 1. Closed-form rate expressions are independently checkable
against the joint-Gaussian mutual-information oracle in
:mod:`helpernet.oracle`.
"""

from .errors import HelperNetError, InputError, OracleError, UnboundedRegionError
from .powers import INFINITE, PowerConfig
from .rates import LOG_BASE, awgn_capacity
from .region import (BoundarySegment, Halfspace, RateRegion, boundary_segment,
                     contains, convex_hull_frontier, max_gap, pareto_frontier,
                     vertices_from_halfspaces)
from .oracle import (JointGaussian, MCEstimate, build_model1_joint,
                     build_model2_joint, cond_mutual_info, diff_entropy,
                     mc_estimate_mi, mutual_info)
from . import model1, model2, model3

__version__ = "0.1.0"

__all__ = [
    "HelperNetError", "InputError", "OracleError", "UnboundedRegionError",
    "INFINITE", "PowerConfig", "LOG_BASE", "awgn_capacity",
    "BoundarySegment", "Halfspace", "RateRegion", "boundary_segment",
    "contains", "convex_hull_frontier", "max_gap", "pareto_frontier",
    "vertices_from_halfspaces",
    "JointGaussian", "MCEstimate", "build_model1_joint", "build_model2_joint",
    "cond_mutual_info", "diff_entropy", "mc_estimate_mi", "mutual_info",
    "model1", "model2", "model3",
    "__version__",
]
