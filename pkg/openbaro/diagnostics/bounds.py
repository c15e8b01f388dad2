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
from typing import Optional

import numpy as np

from openbaro.core.params import AlgoConstants, ModelParams

# start of the analysed horizon, in units of gamma * ell
T0_FACTOR = 1212


@dataclass(frozen=True)
class BoundCurves:
    """Closed-form curves over t = 1..n (position t - 1)."""

    t: np.ndarray
    c: np.ndarray
    eps: np.ndarray
    p: np.ndarray
    t0: int

    def as_dict(self) -> dict:
        return {
            "t": self.t.tolist(),
            "c": self.c.tolist(),
            "eps": self.eps.tolist(),
            "p": self.p.tolist(),
            "t0": self.t0,
        }


def budget_scale_curve(params: ModelParams, t: Optional[np.ndarray] = None) -> np.ndarray:
    t = np.arange(1, params.n + 1) if t is None else np.asarray(t, dtype=float)
    return np.maximum(0.0, 1.0 - 4.0 * params.gamma * params.ell / t)


def epsilon_t(t, params: ModelParams, constants: AlgoConstants):
    """
    Loss term (a1 + 3) * gamma * ell / t + sqrt(10 ln k) * sqrt(2n / (t k)).

    Accepts a scalar or an array of times.
    """
    t_arr = np.asarray(t, dtype=float)
    k = params.k
    adversarial = (constants.a1 + 3.0) * params.gamma * params.ell / t_arr
    sampling = math.sqrt(10.0 * math.log(k)) * np.sqrt(2.0 * params.n / (t_arr * k))
    out = adversarial + sampling
    if out.ndim == 0:
        return float(out)
    return out


def blocking_bound(
    t, params: ModelParams, numerator: float = 1.0, a5: float = 1.0
):
    """
    Shape numerator / (k (1 - t/n - a5 gamma ln k / k)^2) of the probability of
    being blocked at t. The numerator and a5 are not pinned and default to 1.

    Defined for t >= 8 ell (gamma + 2); nan before that and inf once the base
    reaches zero.
    """
    t_arr = np.asarray(t, dtype=float)
    k = params.k
    base = 1.0 - t_arr / params.n - a5 * params.gamma * math.log(k) / k
    with np.errstate(divide="ignore"):
        out = np.where(base > 0, numerator / (k * np.square(base)), np.inf)
    out = np.where(t_arr >= 8 * params.ell * (params.gamma + 2), out, np.nan)
    if out.ndim == 0:
        return float(out)
    return out


def bound_curves(
    params: ModelParams,
    constants: AlgoConstants,
    numerator: float = 1.0,
    a5: float = 1.0,
) -> BoundCurves:
    t = np.arange(1, params.n + 1)
    return BoundCurves(
        t=t,
        c=budget_scale_curve(params, t),
        eps=epsilon_t(t, params, constants),
        p=blocking_bound(t, params, numerator, a5),
        t0=T0_FACTOR * params.gamma * params.ell,
    )


def value_lower_bound(
    curves: BoundCurves, params: ModelParams, opt_ro: float
) -> np.ndarray:
    """
    Per-step lower curve (c_t - eps_t - p_t - 2/k) * opt_ro / RO_n, clipped at 0.
    Steps where p_t is undefined get 0.
    """
    ro_n = params.num_random_order
    if ro_n == 0:
        return np.zeros(len(curves.t))
    raw = (curves.c - curves.eps - curves.p - 2.0 / params.k) * opt_ro / ro_n
    return np.where(np.isfinite(raw), np.maximum(raw, 0.0), 0.0)


def headline_curve(params: ModelParams) -> float:
    """1 - (gamma ell / n) ln(n / (gamma ell)); 1 without adversarial windows."""
    burst = params.gamma * params.ell
    if burst == 0:
        return 1.0
    frac = burst / params.n
    return 1.0 - frac * math.log(params.n / burst)
