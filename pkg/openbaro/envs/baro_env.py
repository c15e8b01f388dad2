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
from typing import Any, Dict, List, Optional, Sequence, Tuple

import gymnasium as gym
import numpy as np
from gymnasium import spaces

from openbaro.adversary.base_adversary import RO, BaseAdversary, HistoryEntry
from openbaro.adversary.schedule import Schedule, build_schedule
from openbaro.core.items import Item
from openbaro.core.params import ModelParams

_CAPACITY_TOL = 1e-9


class BaroKnapsackEnv(gym.Env):
    """
    Online knapsack under the bursty-adversary random-order model.

    Every step shows the item of the current time; action 1 packs it, action 0
    passes. The reward is the value of a packed item. Adversarial items of adaptive
    strategies are produced only when their time comes, from the history of earlier
    items and decisions.
    """

    metadata = {"render_modes": []}

    def __init__(
        self,
        pool: Optional[Sequence[Item]] = None,
        params: Optional[ModelParams] = None,
        strategy: Optional[BaseAdversary] = None,
        schedule: Optional[Schedule] = None,
    ):
        """
        :param pool: random-order items; a fresh schedule is drawn on each seeded reset.
        :param params: model parameters.
        :param strategy: adversary for the covered windows.
        :param schedule: a fixed schedule, replaces pool/params/strategy.
        """
        if schedule is None:
            assert (
                pool is not None and params is not None and strategy is not None
            ), "either a schedule or pool, params and strategy must be provided"
        else:
            params = schedule.params
        self.pool = None if pool is None else tuple(pool)
        self.params = params
        self.strategy = strategy
        self.schedule = schedule

        self.observation_space = spaces.Dict(
            {
                "value": spaces.Box(low=0.0, high=np.inf, shape=(1,), dtype=np.float64),
                "weight": spaces.Box(low=0.0, high=1.0, shape=(1,), dtype=np.float64),
                "t": spaces.Discrete(params.n + 2),
            }
        )
        self.action_space = spaces.Discrete(2)

        self.t = 0
        self.occupation = 0.0
        self.history: List[HistoryEntry] = []
        self._ro_items: Dict[int, Item] = {}
        self._ro_max_density = 0.0
        self._item: Optional[Item] = None

    def reset(
        self,
        *,
        seed: Optional[int] = None,
        options: Optional[Dict[str, Any]] = None,
    ):
        super().reset(seed=seed)
        if self.pool is not None and (self.schedule is None or seed is not None):
            self.schedule = build_schedule(self.pool, self.params, self.strategy, seed)
        self.t = 1
        self.occupation = 0.0
        self.history = []
        self._ro_items = self.schedule.ro_items()
        self._ro_max_density = 0.0
        self._item = self._resolve(self.t)
        return self._get_obs(), self._get_info()

    def step(self, action) -> Tuple[Dict[str, Any], float, bool, bool, Dict[str, Any]]:
        assert self._item is not None, "step() called before reset() or after the end"
        assert self.action_space.contains(int(action)), f"invalid action {action}"
        picked = bool(action)
        item = self._item
        if picked:
            assert (
                self.occupation + item.weight <= self.params.k + _CAPACITY_TOL
            ), f"packing item at t={self.t} overflows the knapsack"
            self.occupation += item.weight
        label = self.schedule[self.t].label
        self.history.append(HistoryEntry(self.t, item, label, picked))
        if label == RO:
            self._ro_max_density = max(self._ro_max_density, item.density)
        reward = item.value if picked else 0.0

        self.t += 1
        terminated = self.t > self.params.n
        if terminated:
            self._item = None
            obs = {
                "value": np.zeros(1),
                "weight": np.zeros(1),
                "t": self.params.n + 1,
            }
            return obs, reward, True, False, {"t": self.t, "occupation": self.occupation}
        self._item = self._resolve(self.t)
        return self._get_obs(), reward, False, False, self._get_info()

    def _resolve(self, t: int) -> Item:
        return self.schedule.resolve(
            t, self.history, self._ro_items, ro_max_density=self._ro_max_density
        )

    def _get_obs(self) -> Dict[str, Any]:
        return {
            "value": np.array([self._item.value], dtype=np.float64),
            "weight": np.array([self._item.weight], dtype=np.float64),
            "t": self.t,
        }

    def _get_info(self) -> Dict[str, Any]:
        assignment = self.schedule[self.t]
        return {
            "t": self.t,
            "item": self._item,
            "is_ro": assignment.label == RO,
            "ro_index": assignment.ro_index,
            "occupation": self.occupation,
        }

    def render(self) -> None:
        pass
