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
from typing import FrozenSet, List, Tuple

from openbaro.core.errors import InvalidParameterError
from openbaro.core.params import ModelParams


def window_partition(n: int, ell: int) -> List[range]:
    """Consecutive windows of length ell covering times 1..n; the last may be shorter."""
    if n < 1 or ell < 1:
        raise InvalidParameterError(f"n and ell must be positive, got n={n}, ell={ell}")
    return [range(start, min(start + ell, n + 1)) for start in range(1, n + 1, ell)]


def truncate(windows: List[range], t: int) -> List[range]:
    """Windows clipped to the prefix [t]; windows starting after t are dropped."""
    truncated = []
    for window in windows:
        if window.start > t:
            break
        truncated.append(range(window.start, min(window.stop, t + 1)))
    return truncated


@dataclass(frozen=True)
class FreeTimes:
    times: FrozenSet[int]
    ro_count: int

    @property
    def count(self) -> int:
        return len(self.times)


def free_times(params: ModelParams, t: int) -> FreeTimes:
    if not 0 <= t <= params.n:
        raise InvalidParameterError(f"t must lie in [0, {params.n}], got {t}")
    times = frozenset(s for s in range(1, t + 1) if not params.is_adversarial(s))
    # adversarial times fill their covered windows, so random-order times are the free ones
    return FreeTimes(times=times, ro_count=len(times))


def free_time_bounds(params: ModelParams) -> Tuple[float, float, float]:
    """
    The chain 1/RO_n <= 1/|Free_n| <= (1 + 2 gamma ell / n) / n.

    :return: (1/RO_n, 1/|Free_n|, (1 + 2 gamma ell / n) / n)
    """
    if params.gamma * params.ell > params.n / 2:
        raise InvalidParameterError("free-time bounds need gamma * ell <= n / 2")
    free = free_times(params, params.n)
    ro_n = free.ro_count
    return (
        1.0 / ro_n,
        1.0 / free.count,
        (1.0 + 2.0 * params.gamma * params.ell / params.n) / params.n,
    )
