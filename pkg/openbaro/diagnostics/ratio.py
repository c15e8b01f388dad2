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
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Sequence

import numpy as np

from openbaro.algorithms.base_algorithm import Trace
from openbaro.core.items import Item, opt_ro as compute_opt_ro

# normal quantile of a two-sided 95% interval
Z_95 = 1.96


@dataclass(frozen=True)
class RatioReport:
    """
    Value collected at random-order times, averaged over trials and divided by the
    fractional optimum of the pool. ratio_mean and ratio_ci95 are None when the
    optimum is zero.
    """

    ro_value_mean: float
    opt_ro: float
    ratio_mean: Optional[float]
    ratio_ci95: Optional[float]
    trials: int

    @property
    def applicable(self) -> bool:
        return self.ratio_mean is not None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def competitive_ratio(traces: Sequence[Trace], pool: Sequence[Item], k: float) -> RatioReport:
    assert len(traces) > 0, "at least one trace is required"
    params = traces[0].params
    assert all(
        trace.params == params for trace in traces
    ), "all traces must share the model parameters"
    opt = compute_opt_ro(pool, k).total_value
    values = np.array([trace.ro_value for trace in traces], dtype=float)
    mean = float(values.mean())
    if opt <= 0:
        return RatioReport(
            ro_value_mean=mean, opt_ro=opt, ratio_mean=None, ratio_ci95=None, trials=len(traces)
        )
    std = float(values.std(ddof=1)) if len(values) > 1 else 0.0
    return RatioReport(
        ro_value_mean=mean,
        opt_ro=opt,
        ratio_mean=mean / opt,
        ratio_ci95=Z_95 * std / math.sqrt(len(values)) / opt,
        trials=len(traces),
    )
