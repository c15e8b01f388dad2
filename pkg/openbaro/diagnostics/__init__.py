#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright 2023 The OpenBARO Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

""""""
from typing import Callable, List

from openbaro.diagnostics.bounds import (
    BoundCurves,
    blocking_bound,
    bound_curves,
    epsilon_t,
    headline_curve,
    value_lower_bound,
)
from openbaro.diagnostics.inequalities import (
    MomentCheck,
    PsiIntegralCheck,
    TailCheck,
    check_chebyshev_sum,
    check_markov_tail,
    check_moment_bound,
    check_psi_integral,
    check_sampling_comparison,
    check_simplified_factor,
    check_wo_replacement_tail,
    inequalities_suite,
    psi_integral,
)
from openbaro.diagnostics.oracles import (
    LpScenario,
    OracleHistory,
    OracleResult,
    lbpick_hypotheses,
    lemma_lbpick_oracle,
    lemma_lbpick_suite,
    lemma_sat_oracle,
    lemma_sat_suite,
    lp_equivalence_oracle,
    lp_equivalence_suite,
    random_lp_instance,
    random_scenario,
    suite_dict,
)
from openbaro.diagnostics.profiles import (
    OccupationProfile,
    RankProfile,
    RelaxedTentative,
    ValueProfile,
    mean_tentative_occupation,
    occupation_profile,
    rank_profile,
    relaxed_indicator,
    relaxed_tentative,
    tentative_occupation_bound,
    value_profile,
)
from openbaro.diagnostics.ratio import RatioReport, competitive_ratio

suite_dict["inequalities"] = inequalities_suite


class SuiteFactory:
    @staticmethod
    def register_suite(name: str, suite: Callable[..., OracleHistory]):
        suite_dict[name] = suite

    @staticmethod
    def get_suite(name: str) -> Callable[..., OracleHistory]:
        if name not in suite_dict:
            raise ValueError(f"verification suite {name} not found")
        return suite_dict[name]

    @staticmethod
    def suites() -> List[str]:
        return list(suite_dict.keys())


__all__ = [
    "BoundCurves",
    "blocking_bound",
    "bound_curves",
    "epsilon_t",
    "headline_curve",
    "value_lower_bound",
    "MomentCheck",
    "PsiIntegralCheck",
    "TailCheck",
    "check_chebyshev_sum",
    "check_markov_tail",
    "check_moment_bound",
    "check_psi_integral",
    "check_sampling_comparison",
    "check_simplified_factor",
    "check_wo_replacement_tail",
    "inequalities_suite",
    "psi_integral",
    "LpScenario",
    "OracleHistory",
    "OracleResult",
    "lbpick_hypotheses",
    "lemma_lbpick_oracle",
    "lemma_lbpick_suite",
    "lemma_sat_oracle",
    "lemma_sat_suite",
    "lp_equivalence_oracle",
    "lp_equivalence_suite",
    "random_lp_instance",
    "random_scenario",
    "OccupationProfile",
    "RankProfile",
    "RelaxedTentative",
    "ValueProfile",
    "mean_tentative_occupation",
    "occupation_profile",
    "rank_profile",
    "relaxed_indicator",
    "relaxed_tentative",
    "tentative_occupation_bound",
    "value_profile",
    "RatioReport",
    "competitive_ratio",
    "SuiteFactory",
]
