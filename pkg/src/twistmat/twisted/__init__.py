"""Twisted conjugacy, fixed points and automorphism search."""

from .autsearch import AutomorphismSurvey, enumerate_automorphisms_small, survey_automorphisms
from .fixed import (
    FixFamilyCertificate,
    FixSearchReport,
    UnitSwapCheck,
    fix_family_certify,
    fix_trivial_box_search,
    unit_pair_swap_check,
)
from .reidemeister import (
    HeathReport,
    ReidemeisterReport,
    conjugacy_class_count,
    fixed_points_finite,
    heath_finiteness_check,
    reidemeister_classes_finite,
    reidemeister_lower_bound_via_quotient,
    twisted_conjugate,
)
