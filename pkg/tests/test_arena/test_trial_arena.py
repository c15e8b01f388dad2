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

import pytest
from gymnasium.utils import seeding

from openbaro.adversary import gen_random_adversary, gen_random_pool
from openbaro.arena import TrialSpec, make_arena
from openbaro.core import AlgoConstants, ModelParams, cover_front


@pytest.fixture(scope="module")
def spec():
    params = ModelParams(n=120, k=10, ell=12, gamma=1, adv_cover=cover_front(120, 12, 1))
    np_random, _ = seeding.np_random(3)
    pool = gen_random_pool(params.num_random_order, np_random)
    strategy = gen_random_adversary(params, np_random)
    return TrialSpec(
        pool=tuple(pool),
        params=params,
        strategy=strategy,
        constants=AlgoConstants.practical(),
    )


@pytest.mark.unittest
def test_serial_arena_orders_seeds(spec):
    arena = make_arena(spec, use_tqdm=False)
    arena.reset(total_trials=3, max_trials_onetime=1, seed=10)
    result = arena.run(parallel=False)
    arena.close()
    assert result["seeds"] == [10, 11, 12]
    assert [trace.seed for trace in result["traces"]] == [10, 11, 12]
    assert all(len(trace) == spec.params.n for trace in result["traces"])


@pytest.mark.unittest
def test_parallel_arena_matches_serial(spec):
    serial = make_arena(spec, use_tqdm=False)
    serial.reset(total_trials=4, max_trials_onetime=1, seed=0)
    expected = serial.run(parallel=False)

    parallel = make_arena(spec, use_tqdm=False)
    parallel.reset(total_trials=4, max_trials_onetime=2, seed=0)
    result = parallel.run(parallel=True)
    parallel.close()

    assert result["seeds"] == expected["seeds"]
    for got, want in zip(result["traces"], expected["traces"]):
        assert got.records == want.records


@pytest.mark.unittest
def test_arena_runs_baselines(spec):
    for algorithm in ("primal", "topk"):
        arena = make_arena(
            TrialSpec(
                pool=spec.pool,
                params=spec.params,
                strategy=spec.strategy,
                algorithm=algorithm,
            ),
            use_tqdm=False,
        )
        arena.reset(total_trials=2, seed=0)
        result = arena.run(parallel=False)
        assert [trace.algorithm for trace in result["traces"]] == [algorithm] * 2


@pytest.mark.unittest
def test_arena_requires_a_spec():
    with pytest.raises(AssertionError):
        make_arena()


if __name__ == "__main__":
    sys.exit(pytest.main(["-sv", os.path.basename(__file__)]))
