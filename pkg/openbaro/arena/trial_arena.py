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
from typing import Any, Callable, Dict, List

from openbaro.arena.base_arena import BaseArena
from openbaro.arena.games.trial_game import TrialGame


class TrialArena(BaseArena):
    def __init__(self, spec_fn: Callable, use_tqdm: bool = True):
        super().__init__(spec_fn, use_tqdm=use_tqdm)
        self.game = TrialGame()
        self.results: List[Dict[str, Any]] = []

    def reset(self, total_trials: int, max_trials_onetime: int = 5, seed: int = 0):
        super().reset(total_trials, max_trials_onetime, seed)
        self.results = []

    def _deal_result(self, result: Dict[str, Any]):
        self.results.append(result)

    def _get_final_result(self) -> Dict[str, Any]:
        ordered = sorted(self.results, key=lambda result: result["seed"])
        return {
            "seeds": [result["seed"] for result in ordered],
            "traces": [result["trace"] for result in ordered],
        }
