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
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from openbaro.core.errors import InvalidParameterError

FRACTION_TOL = 1e-12


@dataclass(frozen=True)
class Item:
    """
    A value/weight pair. Both random-order pool items and adversarial emissions
    are Items; the knapsack has size k and every item weighs at most 1.
    """

    value: float
    weight: float

    def __post_init__(self):
        if not (0.0 < self.weight <= 1.0):
            raise InvalidParameterError(
                f"item weight must lie in (0, 1], got {self.weight}"
            )
        if not self.value > 0.0:
            raise InvalidParameterError(f"item value must be positive, got {self.value}")

    @property
    def density(self) -> float:
        return self.value / self.weight


@dataclass(frozen=True)
class FractionalSolution:
    fractions: Mapping[int, float]
    total_value: float
    total_weight: float

    def __post_init__(self):
        for key, x in self.fractions.items():
            assert (
                -FRACTION_TOL <= x <= 1.0 + FRACTION_TOL
            ), f"fraction of {key} is {x}, outside [0, 1]"

    def fraction(self, key: int) -> float:
        return self.fractions.get(key, 0.0)

    @classmethod
    def from_arrays(
        cls, keys: Sequence[int], x: np.ndarray, values: np.ndarray, weights: np.ndarray
    ) -> "FractionalSolution":
        x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
        fractions: Dict[int, float] = {int(k): float(v) for k, v in zip(keys, x)}
        return cls(
            fractions=fractions,
            total_value=float(np.dot(values, x)) if len(x) else 0.0,
            total_weight=float(np.dot(weights, x)) if len(x) else 0.0,
        )


def density_order(values: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """
    Indices sorted by strictly decreasing density; equal densities keep index order.
    """
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    if len(values) == 0:
        return np.zeros(0, dtype=np.int64)
    # lexsort uses the last key as the primary one
    return np.lexsort((np.arange(len(values)), -(values / weights)))


def sort_pool(items: Sequence[Item]) -> Tuple[List[Item], List[int]]:
    """
    Sort items by decreasing value density, breaking ties by original index.

    :param items: the pool.
    :return: the sorted pool and the permutation, where permutation[j] is the
        original index of the j-th sorted item.
    """
    if len(items) == 0:
        return [], []
    values = np.array([item.value for item in items])
    weights = np.array([item.weight for item in items])
    permutation = [int(i) for i in density_order(values, weights)]
    return [items[i] for i in permutation], permutation


def opt_ro(pool: Sequence[Item], k: float) -> FractionalSolution:
    """
    Offline fractional knapsack optimum over the pool with capacity k.
    Fractions are keyed by the original pool index.
    """
    if k < 0:
        raise InvalidParameterError(f"knapsack size must be nonnegative, got {k}")
    n = len(pool)
    values = np.array([item.value for item in pool], dtype=float)
    weights = np.array([item.weight for item in pool], dtype=float)
    x = np.zeros(n)
    if n > 0:
        order = density_order(values, weights)
        w_sorted = weights[order]
        before = np.cumsum(w_sorted) - w_sorted
        taken = np.clip(k - before, 0.0, w_sorted)
        x[order] = taken / w_sorted
    return FractionalSolution.from_arrays(range(n), x, values, weights)
