"""Exact orbifold Chern numbers and a bigness test for cotangent bundles of canonical surfaces."""

from .chern_core import (
    ADESingularity,
    CriterionVerdict,
    DomainError,
    SingularityProfile,
    SurfaceRecord,
    Verdict,
    evaluate_criterion,
    group_order,
    jump_coefficient,
    local_defect,
    orbifold_c2,
    segre,
)
from .geography import GeographyReport, NoetherClass, geography_report

__version__ = "0.1.0"
