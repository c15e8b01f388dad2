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
from typing import List, Tuple

import numpy as np

from openbaro.adversary.base_adversary import BaseAdversary, StaticAdversary
from openbaro.adversary.density_topper import DensityTopperAdversary
from openbaro.core.errors import InvalidParameterError
from openbaro.core.items import Item
from openbaro.core.params import ModelParams

# infinitesimal adversarial values: DELTA * (1 + j * DELTA_STEP)
DELTA = 1e-6
DELTA_STEP = 1e-3


def _adversarial_times(params: ModelParams) -> List[int]:
    return [int(t) for t in np.flatnonzero(params.adversarial_mask()) + 1]


def _uniform_open_closed(rng: np.random.Generator, low: float, high: float, size: int):
    """Samples from (low, high]."""
    return low + (high - low) * (1.0 - rng.random(size))


def _require_front_burst(params: ModelParams) -> List[int]:
    needed = int(math.ceil(params.k / params.ell))
    if not set(range(needed)) <= params.adv_cover:
        raise InvalidParameterError(
            f"the first {needed} windows must be adversarial to hold a burst of k items"
        )
    times = _adversarial_times(params)
    if len(times) < params.k:
        raise InvalidParameterError(
            f"insufficient adversarial coverage: {len(times)} times for k={params.k} items"
        )
    return times


def gen_random_pool(
    n_items: int,
    rng: np.random.Generator,
    value_range: Tuple[float, float] = (0.0, 1.0),
    weight_low: float = 0.0,
) -> List[Item]:
    """Items with values in (low, high] and weights in (weight_low, 1]."""
    value_low, value_high = value_range
    if not (0.0 <= value_low < value_high):
        raise InvalidParameterError(f"invalid value range {value_range}")
    if not (0.0 <= weight_low < 1.0):
        raise InvalidParameterError(f"weight_low must lie in [0, 1), got {weight_low}")
    values = _uniform_open_closed(rng, value_low, value_high, n_items)
    weights = _uniform_open_closed(rng, weight_low, 1.0, n_items)
    return [Item(float(v), float(w)) for v, w in zip(values, weights)]


def gen_too_many(params: ModelParams) -> Tuple[List[Item], BaseAdversary]:
    """
    Unit-weight adversarial items of infinitesimal, increasing value followed by
    unit random-order items. A primal algorithm fills its knapsack with the burst.
    """
    times = _require_front_burst(params)
    items = {
        t: Item(value=DELTA * (1.0 + j * DELTA_STEP), weight=1.0)
        for j, t in enumerate(times)
    }
    pool = [Item(1.0, 1.0) for _ in range(params.num_random_order)]
    return pool, StaticAdversary(items)


def gen_too_few(params: ModelParams, eps: float) -> Tuple[List[Item], BaseAdversary]:
    """Adversarial items slightly better than the unit random-order items."""
    if not eps > 0:
        raise InvalidParameterError(f"eps must be positive, got {eps}")
    times = _require_front_burst(params)
    items = {t: Item(value=1.0 + eps, weight=1.0) for t in times}
    pool = [Item(1.0, 1.0) for _ in range(params.num_random_order)]
    return pool, StaticAdversary(items)


def gen_kleinberg_killer(
    params: ModelParams, hi: float, lo_max: float, rng: np.random.Generator
) -> Tuple[List[Item], BaseAdversary]:
    """
    A burst of k items of value hi on the first adversarial times, then small values.
    Adversarial times beyond the burst carry small values like the pool.
    """
    if not (hi > lo_max > 0):
        raise InvalidParameterError(f"need hi > lo_max > 0, got hi={hi}, lo_max={lo_max}")
    times = _adversarial_times(params)
    burst = int(math.ceil(params.k))
    tail = _uniform_open_closed(rng, 0.0, lo_max, max(0, len(times) - burst))
    items = {}
    for j, t in enumerate(times):
        value = hi if j < burst else float(tail[j - burst])
        items[t] = Item(value=value, weight=1.0)
    values = _uniform_open_closed(rng, 0.0, lo_max, params.num_random_order)
    pool = [Item(float(v), 1.0) for v in values]
    return pool, StaticAdversary(items)


def gen_density_topper(
    params: ModelParams, eta: float = 0.05, history_only: bool = False
) -> BaseAdversary:
    return DensityTopperAdversary(eta=eta, history_only=history_only)


def gen_random_adversary(
    params: ModelParams,
    rng: np.random.Generator,
    value_range: Tuple[float, float] = (0.0, 1.0),
    weight_low: float = 0.0,
) -> BaseAdversary:
    """Static adversary whose items come from the same law as a random pool."""
    times = _adversarial_times(params)
    items = gen_random_pool(len(times), rng, value_range, weight_low)
    return StaticAdversary(dict(zip(times, items)))
