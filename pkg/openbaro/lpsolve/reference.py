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
import logging
import math
from typing import List, Tuple

import numpy as np
from scipy.optimize import linprog

from openbaro.core.errors import SizeLimitError
from openbaro.core.items import FractionalSolution
from openbaro.lpsolve.instance import LpInstance

logger = logging.getLogger(__name__)

MAX_REFERENCE_ENTRIES = 20
_ACTIVE_TOL = 1e-7
_VALUE_TOL = 1e-9


def _window_groups(inst: LpInstance) -> List[Tuple[float, np.ndarray]]:
    window_ids = inst.window_ids
    groups = []
    for window in np.unique(window_ids):
        cap = inst.window_caps.get(int(window), math.inf)
        groups.append((cap, np.flatnonzero(window_ids == window)))
    return groups


def _window_knapsack(values: np.ndarray, weights: np.ndarray, cap: float) -> float:
    """Fractional knapsack of positive-value entries within a cap."""
    keep = values > 0
    values, weights = values[keep], weights[keep]
    if len(values) == 0:
        return 0.0
    order = np.argsort(-(values / weights), kind="stable")
    values, weights = values[order], weights[order]
    before = np.cumsum(weights) - weights
    taken = np.clip(cap - before, 0.0, weights)
    return float(np.dot(values / weights, taken))


def lagrangian_value(inst: LpInstance) -> float:
    """
    Optimal value through the budget dual: the minimum over multipliers
    lam in {0} and the entry densities of lam * budget plus the windows' fractional
    knapsacks on reduced values v - lam * w. The dual function is piecewise linear
    with breakpoints at the densities, so the minimum sits on one of them.
    """
    if len(inst) == 0:
        return 0.0
    values, weights = inst.values, inst.weights
    groups = _window_groups(inst)
    best = math.inf
    for lam in np.concatenate([[0.0], np.unique(values / weights)]):
        reduced = values - lam * weights
        total = lam * inst.budget
        for cap, idx in groups:
            total += _window_knapsack(reduced[idx], weights[idx], cap)
        best = min(best, total)
    return float(best)


def _constraint_matrix(inst: LpInstance) -> Tuple[np.ndarray, np.ndarray]:
    weights = inst.weights
    rows = [weights]
    rhs = [inst.budget]
    for cap, idx in _window_groups(inst):
        if math.isinf(cap):
            continue
        row = np.zeros(len(weights))
        row[idx] = weights[idx]
        rows.append(row)
        rhs.append(cap)
    return np.vstack(rows), np.array(rhs)


def _polish(x: np.ndarray, a_ub: np.ndarray, b_ub: np.ndarray) -> np.ndarray:
    """
    Re-solve the system induced by the tight constraints, with entries at their
    bounds held fixed, to remove the solver's tolerance from the basic solution.
    """
    at_zero = x <= _ACTIVE_TOL
    at_one = x >= 1.0 - _ACTIVE_TOL
    free = ~(at_zero | at_one)
    polished = np.where(at_one, 1.0, 0.0)
    if not free.any():
        return polished
    tight = np.abs(a_ub @ x - b_ub) <= _ACTIVE_TOL * np.maximum(1.0, np.abs(b_ub))
    if not tight.any():
        return x
    lhs = a_ub[tight][:, free]
    rhs = b_ub[tight] - a_ub[tight][:, ~free] @ polished[~free]
    solution, *_ = np.linalg.lstsq(lhs, rhs, rcond=None)
    polished[free] = solution
    return polished


def _feasible(x: np.ndarray, a_ub: np.ndarray, b_ub: np.ndarray) -> bool:
    return bool(
        np.all(x >= -_VALUE_TOL)
        and np.all(x <= 1.0 + _VALUE_TOL)
        and np.all(a_ub @ x <= b_ub + _VALUE_TOL * np.maximum(1.0, np.abs(b_ub)))
    )


def solve_reference(inst: LpInstance) -> FractionalSolution:
    """
    Exact optimum for small instances.

    HiGHS picks the optimal vertex, the system of its tight constraints is solved
    again for the basic entries, and the value is certified against the dual.

    :raises SizeLimitError: more than MAX_REFERENCE_ENTRIES entries.
    """
    if len(inst) > MAX_REFERENCE_ENTRIES:
        raise SizeLimitError(
            f"reference solver handles at most {MAX_REFERENCE_ENTRIES} entries,"
            f" got {len(inst)}"
        )
    times, values, weights = inst.times, inst.values, inst.weights
    if len(inst) == 0:
        return FractionalSolution(fractions={}, total_value=0.0, total_weight=0.0)

    a_ub, b_ub = _constraint_matrix(inst)
    result = linprog(
        -values,
        A_ub=a_ub,
        b_ub=b_ub,
        bounds=[(0.0, 1.0)] * len(values),
        method="highs",
    )
    assert result.status == 0, f"reference LP failed: {result.message}"
    raw = np.clip(result.x, 0.0, 1.0)
    polished = _polish(raw, a_ub, b_ub)
    x = polished if _feasible(polished, a_ub, b_ub) else raw

    dual_value = lagrangian_value(inst)
    primal_value = float(np.dot(values, x))
    scale = max(1.0, abs(dual_value))
    if abs(primal_value - dual_value) > 1e-6 * scale:
        logger.warning(
            "reference primal %.12g and dual %.12g disagree", primal_value, dual_value
        )
    return FractionalSolution.from_arrays(times, x, values, weights)
