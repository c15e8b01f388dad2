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
import warnings
from dataclasses import dataclass, field, replace
from typing import FrozenSet, Iterable, List, Optional

import numpy as np

from openbaro.core.errors import InvalidParameterError, RegimeError

# analysis constant behind the paper profile's outer cap multiplier
_A2 = 500.0
_A3 = 8 * _A2


def default_window_size(n: int, k: float) -> int:
    """Window size ceil(n ln k / k), kept inside [1, n]."""
    if k <= 1:
        return 1
    ell = int(math.ceil(n * math.log(k) / k))
    return min(max(ell, 1), n)


def cover_front(n: int, ell: int, gamma: int) -> FrozenSet[int]:
    num_windows = int(math.ceil(n / ell))
    return frozenset(range(min(gamma, num_windows)))


def cover_scattered(n: int, ell: int, gamma: int) -> FrozenSet[int]:
    """Gamma windows spread evenly over the horizon."""
    num_windows = int(math.ceil(n / ell))
    gamma = min(gamma, num_windows)
    if gamma == 0:
        return frozenset()
    return frozenset((j * num_windows) // gamma for j in range(gamma))


@dataclass(frozen=True)
class ModelParams:
    """
    Configuration of the bursty-adversary random-order model.

    Window indices are 0-based; times are 1-based. Window j holds the times
    j * ell + 1 .. min((j + 1) * ell, n). Adversarial times are exactly the
    times of the covered windows, every other time is a random-order time.

    gamma * ell <= n / 2 is not enforced here, so a cover of every window remains
    constructible. ``check_regime`` reports it with the other regime conditions.
    """

    n: int
    k: float
    ell: Optional[int] = None
    gamma: int = 0
    adv_cover: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError(f"horizon n must be positive, got {self.n}")
        if not self.k > 0:
            raise InvalidParameterError(f"knapsack size k must be positive, got {self.k}")
        if self.ell is None:
            object.__setattr__(self, "ell", default_window_size(self.n, self.k))
        if self.ell < 1:
            raise InvalidParameterError(f"window size must be positive, got {self.ell}")
        if self.gamma < 0:
            raise InvalidParameterError(f"gamma must be nonnegative, got {self.gamma}")
        object.__setattr__(self, "adv_cover", frozenset(int(j) for j in self.adv_cover))
        if len(self.adv_cover) > self.gamma:
            raise InvalidParameterError(
                f"cover has {len(self.adv_cover)} windows but gamma is {self.gamma}"
            )
        for j in self.adv_cover:
            if not 0 <= j < self.num_windows:
                raise InvalidParameterError(
                    f"covered window {j} outside [0, {self.num_windows})"
                )

    @property
    def num_windows(self) -> int:
        return int(math.ceil(self.n / self.ell))

    def window_index(self, t: int) -> int:
        return (t - 1) // self.ell

    def is_adversarial(self, t: int) -> bool:
        return self.window_index(t) in self.adv_cover

    def adversarial_mask(self) -> np.ndarray:
        """Boolean array over t = 1..n (position t - 1)."""
        windows = np.arange(self.n) // self.ell
        return np.isin(windows, np.fromiter(self.adv_cover, dtype=np.int64))

    @property
    def num_adversarial(self) -> int:
        return int(self.adversarial_mask().sum())

    @property
    def num_random_order(self) -> int:
        return self.n - self.num_adversarial

    def with_cover(self, cover: Iterable[int]) -> "ModelParams":
        return replace(self, adv_cover=frozenset(cover))


@dataclass(frozen=True)
class AlgoConstants:
    a1: float
    a4: float
    scale_budget: bool = True

    def __post_init__(self):
        if not self.a1 > 0:
            raise InvalidParameterError(f"a1 must be positive, got {self.a1}")
        if not self.a4 >= self.a1:
            raise InvalidParameterError(
                f"a4 must be at least a1, got a4={self.a4} < a1={self.a1}"
            )

    @classmethod
    def paper(cls, scale_budget: bool = True) -> "AlgoConstants":
        return cls(a1=601.0, a4=2 * math.exp(6) * _A3, scale_budget=scale_budget)

    @classmethod
    def practical(cls, scale_budget: bool = True) -> "AlgoConstants":
        return cls(a1=3.0, a4=6.0, scale_budget=scale_budget)

    @classmethod
    def from_profile(cls, name: str, scale_budget: bool = True) -> "AlgoConstants":
        if name == "paper":
            return cls.paper(scale_budget)
        if name == "practical":
            return cls.practical(scale_budget)
        raise ValueError(f"constants profile {name} not found")


def budget_scale_c(t: int, params: ModelParams) -> float:
    return max(0.0, 1.0 - 4.0 * params.gamma * params.ell / t)


def check_regime(params: ModelParams, strict: bool = False) -> List[str]:
    """
    Check the parameter regime the guarantees are stated for.

    :param params: model parameters.
    :param strict: raise RegimeError instead of warning.
    :return: the list of violated conditions (empty when inside the regime).
    """
    messages = []
    if params.k < 80:
        messages.append(f"k={params.k} is below 80")
    if params.n < 2 * params.k:
        messages.append(f"n={params.n} is below 2k={2 * params.k}")
    if params.gamma > 0 and params.gamma < math.sqrt(params.k):
        messages.append(f"gamma={params.gamma} is below sqrt(k)={math.sqrt(params.k):.3f}")
    if params.gamma * params.ell > params.n / 2:
        messages.append(
            f"gamma*ell={params.gamma * params.ell} exceeds n/2={params.n / 2}"
        )
    if messages:
        text = "; ".join(messages)
        if strict:
            raise RegimeError(f"parameters outside the analysed regime: {text}")
        warnings.warn(f"parameters outside the analysed regime: {text}", UserWarning)
    return messages
