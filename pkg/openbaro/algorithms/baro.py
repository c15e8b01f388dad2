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
import math
from typing import Any, Dict, Optional, Tuple

from openbaro.adversary.schedule import Schedule
from openbaro.algorithms.base_algorithm import (
    AlgoState,
    BaseOnlineAlgorithm,
    StepRecord,
    Trace,
)
from openbaro.core.items import Item
from openbaro.core.params import AlgoConstants, ModelParams
from openbaro.lpsolve.greedy import PrefixGreedy
from openbaro.lpsolve.instance import step_budget, window_cap


class BaroAlgorithm(BaseOnlineAlgorithm):
    """
    Tentatively pick the current item when the per-step program over all items seen
    so far gives it positive mass. The program has budget c_t * (t / n) * k and a cap
    a1 * (ell / n) * k on every window. A tentative pick becomes permanent unless
    the past occupation exceeds k - 1 or the occupation of the last window of the
    previous prefix exceeds a4 * (ell / n) * k - 1.
    """

    name = "baro"

    def __init__(self, params: ModelParams, constants: AlgoConstants):
        super().__init__(params, constants)
        self.cap = window_cap(params, constants)
        self.outer_cap = constants.a4 * params.ell / params.n * params.k

    def _initial_memo(self) -> Dict[str, Any]:
        return {"prefix": PrefixGreedy(self.cap, self.params.ell)}

    def _budget(self, t: int) -> float:
        return step_budget(t, self.params, self.constants)

    def _tentative_fraction(self, state: AlgoState, item: Item, t: int) -> float:
        budget = self._budget(t)
        if budget <= 0:
            return 0.0
        if "prefix" not in state.memo:
            state.memo["prefix"] = PrefixGreedy(self.cap, self.params.ell)
        prefix = state.memo["prefix"]
        return prefix.fraction(state.values, state.weights, state.tie_keys, t, budget)

    def _blocked_outer(self, state: AlgoState, t: int) -> bool:
        if t == 1:
            return False
        last_window = int(self.window_ids[t - 2])
        return state.window_occupation(last_window) > self.outer_cap - 1


class PrimalAlgorithm(BaroAlgorithm):
    """
    Random-order primal rule: budget ceil((t / n) * k), no window caps, no outer
    check, pick while the past occupation is at most k - 1.
    """

    name = "primal"

    def __init__(self, params: ModelParams, constants: Optional[AlgoConstants] = None):
        BaseOnlineAlgorithm.__init__(self, params, None)
        self.cap = math.inf
        self.outer_cap = math.inf

    def _budget(self, t: int) -> float:
        # t * k / n can land a rounding error above an integer
        return float(math.ceil(t * self.params.k / self.params.n - 1e-9))

    def _blocked_outer(self, state: AlgoState, t: int) -> bool:
        return False


def step(
    state: AlgoState,
    item: Item,
    t: int,
    params: ModelParams,
    constants: AlgoConstants,
    is_ro: bool = True,
    rank: Optional[float] = None,
    tie_key: Optional[float] = None,
) -> Tuple[StepRecord, AlgoState]:
    return BaroAlgorithm(params, constants).step(state, item, t, is_ro, rank, tie_key)


def run(schedule: Schedule, params: ModelParams, constants: AlgoConstants) -> Trace:
    return BaroAlgorithm(params, constants).run(schedule)


def run_baseline_primal(schedule: Schedule, params: ModelParams) -> Trace:
    return PrimalAlgorithm(params).run(schedule)
