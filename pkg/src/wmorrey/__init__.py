"""Weighted Morrey spaces on uniform grids.

Norm functionals over finite ball families, the Hardy-Littlewood maximal
operator, a truncated Hilbert transform, closed-form range predicates for
power weights, and a harness that checks the predicates against numerics.
"""

from .czops import TruncationSpec, hilbert_truncated, operator_norm_lower_bound
from .discretize import (CharBall, DomainTruncationWarning, DualPower, GridFunction, GridSpec,
                         GridWeight, OffsetBump, RadialPower, SingularPower, Tent, build_witness,
                         dilate, integrate)
from .geometry import (Annulus, Ball, BallFamily, BallType, Strategy, classify, enumerate_balls,
                       reduction_admissible)
from .maximal import MaximalConfig, a1_from_maximal, maximal_brute, maximal_fast
from .morrey import (NormEstimate, ball_functional, lebesgue_norm, morrey_norm, two_weight_norm,
                     weak_morrey_norm)
from .params import MorreyParams
from .ranges import (ExtrapolationRegion, RangeVerdict, embedding_exponents,
                     extrapolation_region_full, extrapolation_region_limited,
                     extrapolation_region_power, extrapolation_region_power_limited,
                     hl_general_sufficient, hl_necessity_class, hl_power_range, hl_power_verdict,
                     identify_space, space_is_trivial)
from .weights import (PowerWeight, ShiftedPowerWeight, Weight, a1_constant_estimate,
                      ap_constant_estimate, ap_membership_power, constant_weight,
                      measure_comparison_defect, rh_check, sigma_w_power, theta_power)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
