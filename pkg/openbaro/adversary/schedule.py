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
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from gymnasium.utils import seeding

from openbaro.adversary.base_adversary import (
    ADV,
    RO,
    AdversaryView,
    BaseAdversary,
    HistoryEntry,
    StaticAdversary,
)
from openbaro.core.errors import ScheduleError
from openbaro.core.items import Item
from openbaro.core.params import ModelParams


@dataclass(frozen=True)
class Assignment:
    label: str
    item: Optional[Item] = None
    ro_index: Optional[int] = None


@dataclass(frozen=True)
class Schedule:
    """
    Arrival sequence over times 1..n (assignments[t - 1] is time t).

    Items of adaptive adversaries are left empty and resolved while the run
    unfolds, see :meth:`resolve`.
    """

    assignments: Tuple[Assignment, ...]
    params: ModelParams
    seed: Optional[int]
    pool: Tuple[Item, ...]
    strategy: BaseAdversary

    def __len__(self) -> int:
        return len(self.assignments)

    def __getitem__(self, t: int) -> Assignment:
        return self.assignments[t - 1]

    def ro_items(self) -> Dict[int, Item]:
        return {
            t: a.item
            for t, a in enumerate(self.assignments, start=1)
            if a.label == RO
        }

    def resolve(
        self,
        t: int,
        history: Sequence[HistoryEntry],
        ro_items: Optional[Mapping[int, Item]] = None,
        ro_max_density: float = 0.0,
    ) -> Item:
        assignment = self[t]
        if assignment.item is not None:
            return assignment.item
        view = AdversaryView(
            t=t,
            params=self.params,
            history=history,
            ro_items=None if self.strategy.history_only else ro_items,
            ro_max_density=ro_max_density,
        )
        return self.strategy(view)


def _check_static(strategy: StaticAdversary, adversarial_times: List[int]) -> None:
    expected = set(adversarial_times)
    emitted = set(strategy.items)
    outside = sorted(emitted - expected)
    if outside:
        raise ScheduleError(
            f"static strategy emits outside covered windows at times {outside[:5]}"
        )
    missing = sorted(expected - emitted)
    if missing:
        raise ScheduleError(
            f"static strategy leaves adversarial times {missing[:5]} without an item"
        )


def _oblivious_item(
    strategy: BaseAdversary, params: ModelParams, t: int
) -> Optional[Item]:
    if strategy.adaptive:
        return None
    if isinstance(strategy, StaticAdversary):
        return strategy.items[t]
    # oblivious strategies see neither the history nor the random-order items
    return strategy(AdversaryView(t=t, params=params, history=()))


def build_schedule(
    pool: Sequence[Item],
    params: ModelParams,
    strategy: BaseAdversary,
    seed: Optional[int] = None,
) -> Schedule:
    """
    Place a uniformly random permutation of the pool on the random-order times and
    the strategy's items on the adversarial times.

    :param pool: random-order items, one per uncovered time.
    :param params: model parameters.
    :param strategy: adversary for the covered windows.
    :param seed: seed of the permutation.
    """
    mask = params.adversarial_mask()
    adversarial_times = [int(t) for t in np.flatnonzero(mask) + 1]
    ro_times = np.flatnonzero(~mask) + 1
    if len(pool) != len(ro_times):
        raise ScheduleError(
            f"pool has {len(pool)} items but there are {len(ro_times)} random-order times"
        )
    if isinstance(strategy, StaticAdversary):
        _check_static(strategy, adversarial_times)

    np_random, _ = seeding.np_random(seed)
    permutation = np_random.permutation(len(pool))

    assignments: List[Optional[Assignment]] = [None] * params.n
    for t, index in zip(ro_times, permutation):
        assignments[t - 1] = Assignment(label=RO, item=pool[index], ro_index=int(index))
    for t in adversarial_times:
        item = _oblivious_item(strategy, params, t)
        assignments[t - 1] = Assignment(label=ADV, item=item)

    return Schedule(
        assignments=tuple(assignments),
        params=params,
        seed=seed,
        pool=tuple(pool),
        strategy=strategy,
    )
