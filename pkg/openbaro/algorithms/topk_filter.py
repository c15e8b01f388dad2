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
import heapq
import math
from typing import Any, Dict, Optional

from openbaro.adversary.schedule import Schedule
from openbaro.algorithms.base_algorithm import (
    AlgoState,
    BaseOnlineAlgorithm,
    StepRecord,
    Trace,
)
from openbaro.core.items import Item
from openbaro.core.params import AlgoConstants, ModelParams


class TopKFilterAlgorithm(BaseOnlineAlgorithm):
    """
    Sample-then-threshold rule that never picks items outside the best k so far.

    The first floor(n / e) arrivals are only observed. Afterwards an item is picked
    when its value is among the k highest values seen so far and above the largest
    sampled value, until k items are packed.
    """

    name = "topk"

    def __init__(self, params: ModelParams, constants: Optional[AlgoConstants] = None):
        super().__init__(params, None)
        self.sample_size = int(math.floor(params.n / math.e))
        self.top = max(1, int(math.floor(params.k)))

    def _initial_memo(self) -> Dict[str, Any]:
        return {"heap": [], "sample_max": -math.inf, "picks": 0}

    def _tentative_fraction(self, state: AlgoState, item: Item, t: int) -> float:
        memo = state.memo
        if t <= self.sample_size:
            return 0.0
        heap = memo["heap"]
        in_top = len(heap) < self.top or item.value >= heap[0]
        return 1.0 if in_top and item.value > memo["sample_max"] else 0.0

    def _blocked_main(self, state: AlgoState, t: int) -> bool:
        return state.memo["picks"] > self.params.k - 1

    def _update_memo(self, state: AlgoState, record: StepRecord) -> None:
        memo = state.memo
        value = record.item.value
        if record.time <= self.sample_size:
            memo["sample_max"] = max(memo["sample_max"], value)
        heap = memo["heap"]
        if len(heap) < self.top:
            heapq.heappush(heap, value)
        elif value > heap[0]:
            heapq.heapreplace(heap, value)
        if record.picked:
            memo["picks"] += 1


def run_baseline_topk_filter(schedule: Schedule, params: ModelParams) -> Trace:
    return TopKFilterAlgorithm(params).run(schedule)
