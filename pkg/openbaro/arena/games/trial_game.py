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
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

from openbaro.adversary.base_adversary import BaseAdversary
from openbaro.adversary.schedule import build_schedule
from openbaro.algorithms import AlgorithmFactory, verify_trace
from openbaro.arena.games.base_game import BaseGame
from openbaro.core.items import Item
from openbaro.core.params import AlgoConstants, ModelParams


@dataclass(frozen=True)
class TrialSpec:
    """Everything a trial needs besides its seed."""

    pool: Tuple[Item, ...]
    params: ModelParams
    strategy: BaseAdversary
    algorithm: str = "baro"
    constants: Optional[AlgoConstants] = None
    verify: bool = True


class TrialGame(BaseGame):
    """One trial: a seeded schedule played by one online algorithm."""

    def _run(self, spec_fn: Callable[[], TrialSpec]) -> Dict[str, Any]:
        spec = spec_fn()
        schedule = build_schedule(spec.pool, spec.params, spec.strategy, seed=self.seed)
        algorithm = AlgorithmFactory.get_algorithm(spec.algorithm)(spec.params, spec.constants)
        trace = algorithm.run(schedule)
        if spec.verify:
            verify_trace(trace)
        return {"seed": self.seed, "trace": trace}
