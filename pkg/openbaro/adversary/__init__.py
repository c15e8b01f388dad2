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
from typing import Callable, Dict, List, Tuple

import numpy as np

from openbaro.adversary.base_adversary import (
    ADV,
    RO,
    AdaptiveAdversary,
    AdversaryView,
    BaseAdversary,
    HistoryEntry,
    StaticAdversary,
)
from openbaro.adversary.density_topper import DensityTopperAdversary
from openbaro.adversary.generators import (
    gen_density_topper,
    gen_kleinberg_killer,
    gen_random_adversary,
    gen_random_pool,
    gen_too_few,
    gen_too_many,
)
from openbaro.adversary.schedule import Assignment, Schedule, build_schedule
from openbaro.core.items import Item
from openbaro.core.params import ModelParams

PatternBuilder = Callable[..., Tuple[List[Item], BaseAdversary]]


def _random_pattern(
    params: ModelParams,
    rng: np.random.Generator,
    value_low: float = 0.0,
    value_high: float = 1.0,
    weight_low: float = 0.0,
    **kwargs,
):
    value_range = (value_low, value_high)
    pool = gen_random_pool(params.num_random_order, rng, value_range, weight_low)
    return pool, gen_random_adversary(params, rng, value_range, weight_low)


def _too_many_pattern(params: ModelParams, rng: np.random.Generator, **kwargs):
    return gen_too_many(params)


def _too_few_pattern(
    params: ModelParams, rng: np.random.Generator, eps: float = 0.01, **kwargs
):
    return gen_too_few(params, eps)


def _kleinberg_killer_pattern(
    params: ModelParams,
    rng: np.random.Generator,
    hi: float = 100.0,
    lo_max: float = 1.0,
    **kwargs,
):
    return gen_kleinberg_killer(params, hi, lo_max, rng)


def _density_topper_pattern(
    params: ModelParams,
    rng: np.random.Generator,
    eta: float = 0.05,
    history_only: bool = False,
    value_low: float = 0.0,
    value_high: float = 1.0,
    weight_low: float = 0.0,
    **kwargs,
):
    pool = gen_random_pool(
        params.num_random_order, rng, (value_low, value_high), weight_low
    )
    return pool, gen_density_topper(params, eta=eta, history_only=history_only)


pattern_dict: Dict[str, PatternBuilder] = {
    "random": _random_pattern,
    "too_many": _too_many_pattern,
    "too_few": _too_few_pattern,
    "kleinberg_killer": _kleinberg_killer_pattern,
    "density_topper": _density_topper_pattern,
}


class AdversaryFactory:
    def __init__(self):
        pass

    @staticmethod
    def register_pattern(name: str, builder: PatternBuilder):
        pattern_dict[name] = builder

    @staticmethod
    def get_pattern(name: str) -> PatternBuilder:
        if name not in pattern_dict:
            raise ValueError(f"adversary pattern {name} not found")
        return pattern_dict[name]

    @staticmethod
    def patterns() -> List[str]:
        return list(pattern_dict)


__all__ = [
    "RO",
    "ADV",
    "Item",
    "HistoryEntry",
    "AdversaryView",
    "BaseAdversary",
    "StaticAdversary",
    "AdaptiveAdversary",
    "DensityTopperAdversary",
    "Assignment",
    "Schedule",
    "build_schedule",
    "gen_random_pool",
    "gen_random_adversary",
    "gen_too_many",
    "gen_too_few",
    "gen_kleinberg_killer",
    "gen_density_topper",
    "AdversaryFactory",
]
