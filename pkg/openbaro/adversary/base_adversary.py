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
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Dict, Mapping, NamedTuple, Optional, Sequence

from openbaro.core.errors import ScheduleError
from openbaro.core.items import Item
from openbaro.core.params import ModelParams

RO = "RO"
ADV = "ADV"


class HistoryEntry(NamedTuple):
    time: int
    item: Item
    label: str
    picked: bool


@dataclass(frozen=True)
class AdversaryView:
    """
    What an adaptive adversary sees when it has to emit the item of time t.

    ro_items maps every random-order time to its realized item; it is None when
    the adversary only observes the public history. ``history`` is read-only and
    ``ro_max_density`` is the largest random-order density in it (0 when none).
    """

    t: int
    params: ModelParams
    history: Sequence[HistoryEntry]
    ro_items: Optional[Mapping[int, Item]] = None
    ro_max_density: float = 0.0


class BaseAdversary(ABC):
    adaptive: bool = False

    def __init__(self, history_only: bool = False):
        self.history_only = history_only

    @abstractmethod
    def emit(self, view: AdversaryView) -> Item:
        raise NotImplementedError

    def __call__(self, view: AdversaryView) -> Item:
        if not view.params.is_adversarial(view.t):
            raise ScheduleError(f"adversary asked to emit at random-order time {view.t}")
        item = self.emit(view)
        if not isinstance(item, Item):
            raise ScheduleError(f"adversary emitted {item!r} at time {view.t}, not an Item")
        return item


class StaticAdversary(BaseAdversary):
    """Fixed items at fixed adversarial times."""

    def __init__(self, items: Mapping[int, Item]):
        super().__init__(history_only=True)
        self.items: Dict[int, Item] = dict(items)

    def emit(self, view: AdversaryView) -> Item:
        return self.items[view.t]


class AdaptiveAdversary(BaseAdversary):
    adaptive = True

    def __init__(self, rule: Callable[[AdversaryView], Item], history_only: bool = False):
        super().__init__(history_only=history_only)
        self.rule = rule

    def emit(self, view: AdversaryView) -> Item:
        return self.rule(view)
