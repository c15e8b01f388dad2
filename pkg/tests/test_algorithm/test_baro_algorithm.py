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
import os
import sys
from dataclasses import replace

import numpy as np
import pytest

from openbaro.adversary import AdversaryFactory, StaticAdversary, build_schedule
from openbaro.algorithms import (
    AlgorithmFactory,
    BaroAlgorithm,
    PrimalAlgorithm,
    run,
    step,
    verify_trace,
)
from openbaro.core import AlgoConstants, Item, ModelParams
from openbaro.lpsolve import build_lp_instance, solve_greedy, tentative_indicators


def random_schedule(params, seed, pattern="random"):
    builder = AdversaryFactory.get_pattern(pattern)
    pool, strategy = builder(params, np.random.default_rng(seed))
    return build_schedule(pool, params, strategy, seed=seed)


@pytest.mark.unittest
def test_identical_items_all_picked():
    params = ModelParams(n=4, k=4, ell=4, gamma=0)
    constants = AlgoConstants(a1=1e6, a4=1e6)
    schedule = build_schedule([Item(1.0, 1.0)] * 4, params, StaticAdversary({}), seed=0)
    trace = run(schedule, params, constants)
    assert [r.picked for r in trace.records] == [True] * 4
    assert trace.ro_value == pytest.approx(4.0)
    verify_trace(trace)


@pytest.mark.unittest
def test_main_budget_block():
    params = ModelParams(n=4, k=2, ell=4)
    algorithm = BaroAlgorithm(params, AlgoConstants(a1=1e6, a4=1e6))
    state = replace(algorithm.initial_state(), total_occupation=1.5)
    record, new_state = algorithm.step(state, Item(1.0, 1.0), 1)
    assert record.tentative
    assert record.blocked_main
    assert not record.picked
    assert new_state.total_occupation == 1.5

    state = replace(algorithm.initial_state(), total_occupation=1.0)
    record, _ = algorithm.step(state, Item(1.0, 1.0), 1)
    assert not record.blocked_main
    assert record.picked


@pytest.mark.unittest
def test_zero_fraction_is_never_picked():
    params = ModelParams(n=100, k=10, ell=5, gamma=2, adv_cover={0, 1})
    constants = AlgoConstants.practical()
    state = BaroAlgorithm(params, constants).initial_state()
    # c_t is zero while t <= 4 * gamma * ell
    record, _ = step(state, Item(5.0, 1.0), 1, params, constants)
    assert record.fraction == 0.0
    assert not record.tentative and not record.picked


@pytest.mark.unittest
def test_outer_constraint_uses_last_window_of_previous_prefix():
    params = ModelParams(n=20, k=10, ell=5, gamma=0)
    algorithm = BaroAlgorithm(params, AlgoConstants(a1=1.0, a4=1.0))
    state = algorithm.initial_state()
    records = []
    for t in range(1, 21):
        record, state = algorithm.step(state, Item(float(t), 1.0), t)
        records.append(record)
    assert all(r.tentative for r in records)
    assert [r.time for r in records if r.picked] == [1, 2, 7, 8, 12, 13, 17, 18]
    assert [r.time for r in records if r.blocked_outer] == [
        3, 4, 5, 6, 9, 10, 11, 14, 15, 16, 19, 20
    ]
    assert not any(r.blocked_main for r in records)
    assert state.window_occupations == {0: 2.0, 1: 2.0, 2: 2.0, 3: 2.0}


@pytest.mark.unittest
@pytest.mark.parametrize("pattern", ["random", "density_topper"])
def test_trace_invariants_hold(pattern):
    params = ModelParams(n=300, k=20, ell=10, gamma=3, adv_cover={0, 11, 25})
    for constants in (AlgoConstants.practical(), AlgoConstants.paper()):
        for seed in range(5):
            trace = run(random_schedule(params, seed, pattern), params, constants)
            verify_trace(trace)
            assert trace.total_occupation <= params.k


@pytest.mark.unittest
def test_runs_are_deterministic():
    params = ModelParams(n=200, k=15, ell=8, gamma=2, adv_cover={3, 9})
    constants = AlgoConstants.practical()
    first = run(random_schedule(params, 7), params, constants)
    second = run(random_schedule(params, 7), params, constants)
    assert first.records == second.records


@pytest.mark.unittest
def test_recorded_tentative_flags_match_offline_solve():
    params = ModelParams(n=120, k=12, ell=6, gamma=2, adv_cover={2, 10})
    constants = AlgoConstants(a1=2.0, a4=4.0)
    trace = run(random_schedule(params, 5), params, constants)
    values, weights = trace.column("value"), trace.column("weight")
    for record in trace.records:
        inst = build_lp_instance(
            values, weights, record.time, params, constants, trace.column("tie_key")
        )
        tentative, full_pick = tentative_indicators(solve_greedy(inst), record.time)
        assert tentative == record.tentative
        assert full_pick == record.full_pick


@pytest.mark.unittest
def test_ranks_recorded_for_random_order_items():
    params = ModelParams(n=50, k=5, ell=5, gamma=1, adv_cover={4})
    trace = run(random_schedule(params, 1), params, AlgoConstants.practical())
    for record in trace.records:
        if record.is_ro:
            assert record.rank is not None and record.rank >= 0
        else:
            assert record.rank is None


@pytest.mark.unittest
def test_full_cover_leaves_no_random_order_items():
    params = ModelParams(n=10, k=2, ell=5, gamma=2, adv_cover={0, 1})
    strategy = StaticAdversary({t: Item(1.0, 1.0) for t in range(1, 11)})
    schedule = build_schedule([], params, strategy, seed=0)
    trace = run(schedule, params, AlgoConstants.practical())
    verify_trace(trace)
    assert trace.ro_value == 0.0


@pytest.mark.unittest
def test_algorithm_factory():
    assert AlgorithmFactory.get_algorithm("baro") is BaroAlgorithm
    assert AlgorithmFactory.get_algorithm("primal") is PrimalAlgorithm
    with pytest.raises(ValueError):
        AlgorithmFactory.get_algorithm("nope")


if __name__ == "__main__":
    sys.exit(pytest.main(["-sv", os.path.basename(__file__)]))
