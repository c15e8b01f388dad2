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
from openbaro.lpsolve.greedy import (
    PrefixGreedy,
    greedy_current_fraction,
    solve_greedy,
    tentative_indicators,
)
from openbaro.lpsolve.instance import (
    LpInstance,
    build_lp_instance,
    step_budget,
    window_cap,
)
from openbaro.lpsolve.reference import (
    MAX_REFERENCE_ENTRIES,
    lagrangian_value,
    solve_reference,
)

__all__ = [
    "LpInstance",
    "build_lp_instance",
    "step_budget",
    "window_cap",
    "solve_greedy",
    "greedy_current_fraction",
    "PrefixGreedy",
    "tentative_indicators",
    "solve_reference",
    "lagrangian_value",
    "MAX_REFERENCE_ENTRIES",
]
