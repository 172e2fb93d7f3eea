"""Canonical reduction number and related invariants of numerical semigroup rings."""

from .errors import (BoundExceeded, CanredError, GcdNotOne, InputError,
                     TheoremViolation)
from .idealization import (IdealizationReport, idealization_type, is_trace_ideal,
                           is_trace_iso, over_semigroups,
                           verify_trace_extension_bijection)
from .invariants import (ClassificationReport, HilbertTable, blow_up, can_red,
                         canonical_ideal, classify, hilbert_table, ratliff_rush,
                         reduction_number, trace_of_canonical, type_of_quotient)
from .enumeration import SurveyReport, genus_tree, survey
from .relideal import RelativeIdeal
from .semigroup import NumericalSemigroup, is_symmetric, pseudo_frobenius

__version__ = "0.1.0"
