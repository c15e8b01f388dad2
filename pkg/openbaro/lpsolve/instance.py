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
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from openbaro.core.errors import InvalidParameterError
from openbaro.core.params import AlgoConstants, ModelParams, budget_scale_c


@dataclass(frozen=True)
class LpInstance:
    """
    Fractional knapsack over observed entries with one global budget and one cap per
    window. entries holds (time, value, weight); the window of time t is
    (t - 1) // ell and window_caps maps window index to its cap. Windows
    without a cap are unconstrained.

    Equal densities are ordered by tie_keys and then by time; without tie_keys the
    time alone decides.
    """

    entries: Tuple[Tuple[int, float, float], ...]
    budget: float
    window_caps: Mapping[int, float]
    ell: int = 1
    tie_keys: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.tie_keys is not None:
            object.__setattr__(self, "tie_keys", tuple(float(k) for k in self.tie_keys))
            if len(self.tie_keys) != len(self.entries):
                raise InvalidParameterError("one tie key per entry is required")
        if self.budget < 0:
            raise InvalidParameterError(f"budget must be nonnegative, got {self.budget}")
        for window, cap in self.window_caps.items():
            if cap < 0:
                raise InvalidParameterError(f"cap of window {window} is negative: {cap}")
        times = [entry[0] for entry in self.entries]
        if len(set(times)) != len(times):
            raise InvalidParameterError("entry times must be distinct")
        for _, value, weight in self.entries:
            if not (0 < weight <= 1) or not value > 0:
                raise InvalidParameterError(
                    f"entry (value={value}, weight={weight}) is not a valid item"
                )

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def times(self) -> np.ndarray:
        return np.array([e[0] for e in self.entries], dtype=np.int64)

    @property
    def values(self) -> np.ndarray:
        return np.array([e[1] for e in self.entries], dtype=float)

    @property
    def weights(self) -> np.ndarray:
        return np.array([e[2] for e in self.entries], dtype=float)

    @property
    def keys(self) -> np.ndarray:
        if self.tie_keys is None:
            return self.times.astype(float)
        return np.array(self.tie_keys, dtype=float)

    @property
    def window_ids(self) -> np.ndarray:
        return (self.times - 1) // self.ell

    def caps_of_entries(self) -> np.ndarray:
        return np.array(
            [self.window_caps.get(int(w), math.inf) for w in self.window_ids],
            dtype=float,
        )


def step_budget(t: int, params: ModelParams, constants: AlgoConstants) -> float:
    c_t = budget_scale_c(t, params) if constants.scale_budget else 1.0
    return c_t * t / params.n * params.k


def window_cap(params: ModelParams, constants: AlgoConstants) -> float:
    return constants.a1 * params.ell / params.n * params.k


def build_lp_instance(
    values: Sequence[float],
    weights: Sequence[float],
    t: int,
    params: ModelParams,
    constants: AlgoConstants,
    tie_keys: Optional[Sequence[float]] = None,
) -> LpInstance:
    """
    The per-step program over the prefix [t]; values[s - 1] and
    weights[s - 1] describe the item seen at time s.
    """
    if len(values) < t or len(weights) < t:
        raise InvalidParameterError(f"prefix of length {t} needs {t} observed items")
    entries = tuple((s, float(values[s - 1]), float(weights[s - 1])) for s in range(1, t + 1))
    cap = window_cap(params, constants)
    caps = {j: cap for j in range((t - 1) // params.ell + 1)}
    return LpInstance(
        entries=entries,
        budget=step_budget(t, params, constants),
        window_caps=caps,
        ell=params.ell,
        tie_keys=None if tie_keys is None else tuple(tie_keys[:t]),
    )
