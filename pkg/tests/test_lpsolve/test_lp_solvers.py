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
import os
import sys

import numpy as np
import pytest

from openbaro.core import AlgoConstants, ModelParams, SizeLimitError
from openbaro.lpsolve import (
    LpInstance,
    PrefixGreedy,
    build_lp_instance,
    greedy_current_fraction,
    lagrangian_value,
    solve_greedy,
    solve_reference,
    step_budget,
    tentative_indicators,
)


def random_instance(rng, max_entries=12):
    size = int(rng.integers(1, max_entries + 1))
    ell = int(rng.integers(1, size + 1))
    times = rng.permutation(np.arange(1, size + 1))
    entries = [
        (int(t), float(rng.uniform(0.01, 10)), float(rng.uniform(0.01, 1)))
        for t in times
    ]
    num_windows = (size - 1) // ell + 1
    caps = {j: float(rng.uniform(0, 2 * ell)) for j in range(num_windows)}
    return LpInstance(
        entries=entries, budget=float(rng.uniform(0, size)), window_caps=caps, ell=ell
    )


def check_feasible(inst, sol, tol=1e-9):
    x = np.array([sol.fraction(t) for t in inst.times])
    weights = inst.weights
    assert np.all(x >= -tol) and np.all(x <= 1 + tol)
    assert float(np.dot(weights, x)) <= inst.budget + tol
    for window, cap in inst.window_caps.items():
        mask = inst.window_ids == window
        assert float(np.dot(weights[mask], x[mask])) <= cap + tol


@pytest.mark.unittest
def test_greedy_two_window_example():
    inst = LpInstance(
        entries=[(1, 10.0, 1.0), (2, 1.0, 1.0)],
        budget=1.0,
        window_caps={0: 0.3, 1: 0.3},
        ell=1,
    )
    sol = solve_greedy(inst)
    assert sol.fraction(1) == pytest.approx(0.3)
    assert sol.fraction(2) == pytest.approx(0.3)
    assert sol.total_value == pytest.approx(3.3)
    assert solve_reference(inst).total_value == pytest.approx(3.3, abs=1e-9)


@pytest.mark.unittest
def test_greedy_trivial_cases():
    inst = LpInstance(entries=[(1, 3.0, 1.0), (2, 1.0, 0.5)], budget=0.0, window_caps={0: 5.0})
    sol = solve_greedy(inst)
    assert sol.total_value == 0.0
    assert all(x == 0.0 for x in sol.fractions.values())

    inst = LpInstance(entries=[(1, 5.0, 0.5)], budget=10.0, window_caps={0: 10.0})
    sol = solve_greedy(inst)
    assert sol.fraction(1) == 1.0
    assert sol.total_value == pytest.approx(5.0)


@pytest.mark.unittest
def test_reference_all_slack():
    entries = [(t, float(t), 0.5) for t in range(1, 7)]
    inst = LpInstance(entries=entries, budget=10.0, window_caps={0: 5.0, 1: 5.0}, ell=3)
    sol = solve_reference(inst)
    assert all(x == pytest.approx(1.0) for x in sol.fractions.values())
    assert sol.total_value == pytest.approx(21.0)


@pytest.mark.unittest
def test_reference_size_guard():
    entries = [(t, 1.0, 1.0) for t in range(1, 22)]
    inst = LpInstance(entries=entries, budget=5.0, window_caps={})
    with pytest.raises(SizeLimitError):
        solve_reference(inst)
    assert lagrangian_value(inst) == pytest.approx(5.0)


@pytest.mark.unittest
def test_greedy_matches_reference():
    rng = np.random.default_rng(2023)
    for _ in range(300):
        inst = random_instance(rng)
        greedy = solve_greedy(inst)
        reference = solve_reference(inst)
        check_feasible(inst, greedy)
        check_feasible(inst, reference, tol=1e-7)
        assert abs(greedy.total_value - reference.total_value) <= 1e-9 * max(
            1.0, reference.total_value
        )


@pytest.mark.unittest
def test_reference_value_is_value_of_fractions():
    rng = np.random.default_rng(77)
    for _ in range(100):
        inst = random_instance(rng)
        sol = solve_reference(inst)
        x = np.array([sol.fraction(t) for t in inst.times])
        assert sol.total_value == pytest.approx(float(np.dot(inst.values, x)), abs=1e-12)
        assert sol.total_value == pytest.approx(lagrangian_value(inst), abs=1e-6)


@pytest.mark.unittest
def test_greedy_saturates_budget():
    rng = np.random.default_rng(7)
    for _ in range(200):
        inst = random_instance(rng)
        available = 0.0
        for window, cap in inst.window_caps.items():
            mask = inst.window_ids == window
            available += min(cap, float(inst.weights[mask].sum()))
        sol = solve_greedy(inst)
        assert sol.total_weight == pytest.approx(min(available, inst.budget), abs=1e-9)


@pytest.mark.unittest
def test_raising_density_never_lowers_fraction():
    rng = np.random.default_rng(11)
    for _ in range(200):
        inst = random_instance(rng)
        pick = int(rng.integers(len(inst)))
        time, value, weight = inst.entries[pick]
        before = solve_greedy(inst).fraction(time)
        entries = list(inst.entries)
        entries[pick] = (time, value * float(rng.uniform(1.0, 3.0)), weight)
        raised = LpInstance(
            entries=entries, budget=inst.budget, window_caps=inst.window_caps, ell=inst.ell
        )
        assert solve_greedy(raised).fraction(time) >= before - 1e-12


@pytest.mark.unittest
def test_current_fraction_matches_full_solve():
    rng = np.random.default_rng(5)
    params = ModelParams(n=40, k=6, ell=5, gamma=2, adv_cover={1, 4})
    constants = AlgoConstants(a1=1.5, a4=3.0, scale_budget=True)
    values = rng.uniform(0.01, 5, size=params.n)
    weights = rng.uniform(0.05, 1, size=params.n)
    # repeated densities exercise the tie rule
    values[10:14] = weights[10:14] * 2.0
    for t in range(1, params.n + 1):
        inst = build_lp_instance(values, weights, t, params, constants)
        expected = solve_greedy(inst).fraction(t)
        window_ids = (np.arange(t) // params.ell).astype(np.int64)
        cap = constants.a1 * params.ell / params.n * params.k
        got = greedy_current_fraction(
            values[:t], weights[:t], window_ids, inst.budget, cap
        )
        assert got == pytest.approx(expected, abs=1e-12)


@pytest.mark.unittest
def test_current_fraction_with_tie_keys():
    rng = np.random.default_rng(9)
    params = ModelParams(n=30, k=8, ell=4)
    constants = AlgoConstants(a1=1.0, a4=2.0)
    values = np.ones(params.n)
    weights = np.ones(params.n)
    keys = rng.permutation(params.n).astype(float)
    cap = constants.a1 * params.ell / params.n * params.k
    for t in range(1, params.n + 1):
        inst = build_lp_instance(values, weights, t, params, constants, keys)
        expected = solve_greedy(inst).fraction(t)
        window_ids = (np.arange(t) // params.ell).astype(np.int64)
        got = greedy_current_fraction(
            values[:t], weights[:t], window_ids, inst.budget, cap, keys[:t]
        )
        assert got == pytest.approx(expected, abs=1e-12)


@pytest.mark.unittest
@pytest.mark.parametrize("cap", [1.5, 4.0, math.inf])
def test_prefix_greedy_matches_current_fraction(cap):
    rng = np.random.default_rng(11)
    params = ModelParams(n=200, k=12, ell=9)
    constants = AlgoConstants(a1=1.0, a4=2.0)
    values = rng.uniform(0.01, 2, size=params.n)
    weights = rng.uniform(0.05, 1, size=params.n)
    keys = np.arange(params.n, dtype=float)
    # unit items sharing one key, as adversarial arrivals do
    values[40:70] = weights[40:70] = 1.0
    keys[40:70] = -1.0
    values[120:130] = weights[120:130] * 1.25
    window_ids = (np.arange(params.n) // params.ell).astype(np.int64)
    prefix = PrefixGreedy(cap, params.ell)
    for t in range(1, params.n + 1):
        budget = step_budget(t, params, constants)
        expected = greedy_current_fraction(
            values[:t], weights[:t], window_ids[:t], budget, cap, keys[:t]
        )
        got = prefix.fraction(values, weights, keys, t, budget)
        assert got == pytest.approx(expected, abs=1e-9)


@pytest.mark.unittest
def test_prefix_greedy_rebuilds_after_rewind():
    rng = np.random.default_rng(2)
    ell, cap = 5, 2.0
    values = rng.uniform(0.1, 1, size=40)
    weights = rng.uniform(0.1, 1, size=40)
    keys = np.arange(40, dtype=float)
    window_ids = (np.arange(40) // ell).astype(np.int64)
    prefix = PrefixGreedy(cap, ell)
    for t in range(1, 31):
        prefix.fraction(values, weights, keys, t, 6.0)
    values[20] = 5.0
    for t in (21, 37, 12):
        expected = greedy_current_fraction(
            values[:t], weights[:t], window_ids[:t], 6.0, cap, keys[:t]
        )
        assert prefix.fraction(values, weights, keys, t, 6.0) == pytest.approx(expected)
        assert prefix.size == t


@pytest.mark.unittest
def test_build_lp_instance_budget_and_caps():
    params = ModelParams(n=100, k=10, ell=10, gamma=1, adv_cover={0})
    constants = AlgoConstants(a1=3.0, a4=6.0)
    values = np.ones(100)
    weights = np.ones(100)
    inst = build_lp_instance(values, weights, 50, params, constants)
    assert inst.budget == pytest.approx((1 - 40 / 50) * 50 / 100 * 10)
    assert sorted(inst.window_caps) == [0, 1, 2, 3, 4]
    assert inst.window_caps[0] == pytest.approx(3.0)
    unscaled = build_lp_instance(
        values, weights, 50, params, AlgoConstants(a1=3.0, a4=6.0, scale_budget=False)
    )
    assert unscaled.budget == pytest.approx(5.0)


@pytest.mark.unittest
def test_tentative_indicators():
    inst = LpInstance(entries=[(1, 1.0, 1.0)], budget=0.3, window_caps={0: 1.0})
    assert tentative_indicators(solve_greedy(inst), 1) == (True, False)
    inst = LpInstance(entries=[(1, 1.0, 1.0)], budget=1.0, window_caps={0: 1.0})
    assert tentative_indicators(solve_greedy(inst), 1) == (True, True)
    inst = LpInstance(entries=[(1, 1.0, 1.0)], budget=0.0, window_caps={0: 1.0})
    assert tentative_indicators(solve_greedy(inst), 1) == (False, False)


if __name__ == "__main__":
    sys.exit(pytest.main(["-sv", os.path.basename(__file__)]))
