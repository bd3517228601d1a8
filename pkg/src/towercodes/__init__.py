"""Linear codes with few weights from trace conditions over subfield
towers, with exact Gauss-sum arithmetic to predict and verify their
weight distributions."""

from .field import Element, Field, TowerSpec, get_field
from .cyclotomic import (AddChar, CycloInt, MultChar, davenport_hasse_lift,
                         gauss_sum, gauss_sum_semiprimitive,
                         lifted_char_index, monomial_char_sum,
                         unity_power_sums, zeta)
from .codes import (DefiningSet, WeightDistribution,
                    brute_weight_distribution, build_defining_set, codeword,
                    puncture, zero_trace_counts)
from .theory import (TheoryReport, code_length, dist_binary_cubic,
                     dist_nonzero_shift, dist_zero_shift_f2,
                     dist_zero_shift_f2_punctured, dmin_bound_nonzero_shift,
                     dmin_bound_zero_shift, dmin_bound_zero_shift_punctured,
                     griesmer_min_length, griesmer_verdict,
                     predicted_distribution, secret_sharing_check,
                     singleton_slack, walsh_spectrum,
                     walsh_weight_distribution)
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "AddChar", "CheckResult", "CycloInt", "DefiningSet", "Element", "Field",
    "MultChar", "TheoryReport", "TowerSpec", "WeightDistribution",
    "brute_weight_distribution", "build_defining_set", "code_length",
    "codeword", "davenport_hasse_lift", "dist_binary_cubic",
    "dist_nonzero_shift", "dist_zero_shift_f2",
    "dist_zero_shift_f2_punctured", "dmin_bound_nonzero_shift",
    "dmin_bound_zero_shift", "dmin_bound_zero_shift_punctured",
    "gauss_sum", "gauss_sum_semiprimitive", "get_field",
    "griesmer_min_length", "griesmer_verdict", "lifted_char_index",
    "monomial_char_sum", "predicted_distribution", "puncture", "run_suite",
    "secret_sharing_check", "singleton_slack", "unity_power_sums",
    "walsh_spectrum", "walsh_weight_distribution", "zero_trace_counts",
    "zeta",
]
