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
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from openbaro.core.errors import InvalidParameterError
from openbaro.core.items import Item, sort_pool


@dataclass(frozen=True)
class RankTable:
    """
    Weighted ranks of a density-sorted pool: ranks[i] is 1/k times the weight of
    the items sorted ahead of position i, sentinel is 1/k times the total weight.
    """

    ranks: np.ndarray
    sentinel: float
    k: float

    def __len__(self) -> int:
        return len(self.ranks)

    def __getitem__(self, i: int) -> float:
        return float(self.ranks[i])


def weighted_ranks(sorted_pool: Sequence[Item], k: float) -> RankTable:
    if not k > 0:
        raise InvalidParameterError(f"k must be positive, got {k}")
    weights = np.array([item.weight for item in sorted_pool], dtype=float)
    cumulative = np.concatenate([[0.0], np.cumsum(weights)])
    ranks = cumulative[:-1] / k
    ranks.setflags(write=False)
    return RankTable(ranks=ranks, sentinel=float(cumulative[-1] / k), k=k)


def pool_ranks(pool: Sequence[Item], k: float) -> np.ndarray:
    """Weighted rank of every pool item, indexed by its original pool index."""
    sorted_pool, permutation = sort_pool(pool)
    table = weighted_ranks(sorted_pool, k)
    ranks = np.empty(len(pool))
    ranks[np.asarray(permutation, dtype=np.int64)] = table.ranks
    return ranks


def psi(gamma: Union[float, np.ndarray], k: float) -> Union[float, np.ndarray]:
    """
    Upper bound on the probability that an item of weighted rank gamma is
    tentatively selected. Accepts scalars or arrays.
    """
    g = np.asarray(gamma, dtype=float)
    tail = 4.0 * k * np.exp(-(g / 20.0) * math.log(k))
    out = np.where(g < 1.0, 1.0, np.where(g <= 50.0, 2.0 / k, tail))
    if out.ndim == 0:
        return float(out)
    return out
