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
from openbaro.core.errors import (
    HypothesisUnmetError,
    InvalidParameterError,
    QuadratureError,
    RegimeError,
    ScheduleError,
    SizeLimitError,
)
from openbaro.core.items import FractionalSolution, Item, opt_ro, sort_pool
from openbaro.core.params import (
    AlgoConstants,
    ModelParams,
    budget_scale_c,
    check_regime,
    cover_front,
    cover_scattered,
    default_window_size,
)
from openbaro.core.ranks import RankTable, pool_ranks, psi, weighted_ranks
from openbaro.core.windows import (
    FreeTimes,
    free_time_bounds,
    free_times,
    truncate,
    window_partition,
)

__all__ = [
    "Item",
    "FractionalSolution",
    "sort_pool",
    "opt_ro",
    "ModelParams",
    "AlgoConstants",
    "budget_scale_c",
    "check_regime",
    "cover_front",
    "cover_scattered",
    "default_window_size",
    "RankTable",
    "weighted_ranks",
    "pool_ranks",
    "psi",
    "FreeTimes",
    "window_partition",
    "truncate",
    "free_times",
    "free_time_bounds",
    "InvalidParameterError",
    "SizeLimitError",
    "ScheduleError",
    "RegimeError",
    "HypothesisUnmetError",
    "QuadratureError",
]
