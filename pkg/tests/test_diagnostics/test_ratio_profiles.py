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

import numpy as np
import pytest

from openbaro.adversary import StaticAdversary, build_schedule, gen_random_pool
from openbaro.algorithms import StepRecord, Trace, run
from openbaro.core import (
    AlgoConstants,
    Item,
    ModelParams,
    opt_ro,
    sort_pool,
    weighted_ranks,
)
from openbaro.diagnostics import (
    competitive_ratio,
    mean_tentative_occupation,
    occupation_profile,
    rank_profile,
    relaxed_indicator,
    relaxed_tentative,
    tentative_occupation_bound,
    value_profile,
)


def make_trace(params, items, picks, ranks=None, tentative=None):
    ranks = [None] * len(items) if ranks is None else ranks
    tentative = picks if tentative is None else tentative
    records = []
    for t, (item, pick, rank, tent) in enumerate(zip(items, picks, ranks, tentative), start=1):
        records.append(
            StepRecord(
                time=t,
                is_ro=not params.is_adversarial(t),
                item=item,
                rank=rank,
                tie_key=float(t),
                fraction=1.0 if tent else 0.0,
                tentative=tent,
                full_pick=tent,
                blocked_main=False,
                blocked_outer=False,
                picked=pick,
                occupation=item.weight if pick else 0.0,
                tentative_occupation=item.weight if tent else 0.0,
            )
        )
    return Trace(records=tuple(records), params=params, constants=None, seed=None)


@pytest.fixture(scope="module")
def unit_params():
    return ModelParams(n=5, k=5, ell=1)


@pytest.mark.unittest
def test_ratio_all_and_nothing(unit_params):
    pool = [Item(1.0, 1.0)] * 5
    all_picks = make_trace(unit_params, pool, [True] * 5)
    report = competitive_ratio([all_picks] * 3, pool, k=5)
    assert report.ratio_mean == pytest.approx(1.0)
    assert report.ratio_ci95 == 0.0
    assert report.trials == 3

    no_picks = make_trace(unit_params, pool, [False] * 5)
    report = competitive_ratio([no_picks], pool, k=5)
    assert report.ratio_mean == 0.0
    assert report.applicable


@pytest.mark.unittest
def test_ratio_interval(unit_params):
    pool = [Item(1.0, 1.0)] * 5
    one = make_trace(unit_params, pool, [True, False, False, False, False])
    three = make_trace(unit_params, pool, [True, True, True, False, False])
    report = competitive_ratio([one, three], pool, k=2)
    assert report.opt_ro == pytest.approx(2.0)
    assert report.ratio_mean == pytest.approx(1.0)
    assert report.ratio_ci95 == pytest.approx(1.96 * np.sqrt(2) / np.sqrt(2) / 2)


@pytest.mark.unittest
def test_ratio_not_applicable_without_pool():
    params = ModelParams(n=2, k=1, ell=1, gamma=2, adv_cover={0, 1})
    items = [Item(1.0, 1.0), Item(2.0, 1.0)]
    report = competitive_ratio([make_trace(params, items, [True, False])], [], k=1)
    assert not report.applicable
    assert report.ratio_mean is None and report.opt_ro == 0.0


@pytest.mark.unittest
def test_rank_profile_buckets():
    params = ModelParams(n=200, k=100, ell=1)
    items = [Item(1.0, 1.0)] * 200
    ranks = [0.5] * 100 + [10.0] * 100
    tentative = [True] * 100 + [True] * 10 + [False] * 90
    trace = make_trace(params, items, [False] * 200, ranks=ranks, tentative=tentative)
    profile = rank_profile([trace], weighted_ranks(items, 100))
    assert profile.start == 8
    by_range = {(b.low, b.high): b for b in profile.buckets}
    low = by_range[(0.0, 1.0)]
    assert low.bound == 1.0 and low.frequency == 1.0 and not low.flagged
    assert low.trials == 100 - 7
    mid = by_range[(1.0, 50.0)]
    assert mid.bound == pytest.approx(0.02)
    assert mid.frequency == pytest.approx(0.1)
    assert mid.flagged
    assert (50.0, np.inf) not in by_range
    assert all(0.0 <= b.frequency <= 1.0 for b in profile.buckets)


@pytest.mark.unittest
def test_rank_profile_of_paper_constant_runs():
    params = ModelParams(n=3000, k=100)
    pool = gen_random_pool(params.n, np.random.default_rng(0))
    constants = AlgoConstants.paper()
    traces = [
        run(build_schedule(pool, params, StaticAdversary({}), seed=seed), params, constants)
        for seed in range(40)
    ]
    profile = rank_profile(traces, weighted_ranks(sort_pool(pool)[0], params.k))
    assert profile.buckets
    assert not profile.flagged
    mid = next(b for b in profile.buckets if b.low == 1.0 and b.closed_high)
    p = 2.0 / params.k
    assert mid.bound <= p
    assert mid.frequency <= p + 3 * np.sqrt(p * (1 - p) / mid.trials)


@pytest.mark.unittest
def test_relaxed_indicator_rule():
    assert relaxed_indicator(0.5, False)
    assert relaxed_indicator(2.0, True)
    assert not relaxed_indicator(2.0, False)
    assert not relaxed_indicator(None, False)


@pytest.mark.unittest
def test_tentative_occupation_bound():
    sorted_pool, _ = sort_pool([Item(3.0, 1.0), Item(2.0, 1.0), Item(1.0, 1.0)])
    table = weighted_ranks(sorted_pool, k=1)
    # ranks 0, 1, 2 give psi values 1, 2, 2
    assert tentative_occupation_bound(table, ro_n=3) == pytest.approx(5 / 3)
    assert tentative_occupation_bound(table, ro_n=0) == 0.0


@pytest.fixture(scope="module")
def pure_runs():
    params = ModelParams(n=400, k=20)
    rng = np.random.default_rng(3)
    pool = gen_random_pool(params.n, rng)
    constants = AlgoConstants.practical()
    traces = [
        run(build_schedule(pool, params, StaticAdversary({}), seed=seed), params, constants)
        for seed in range(6)
    ]
    return params, pool, constants, traces


@pytest.mark.unittest
def test_occupation_profile_respects_caps(pure_runs):
    params, _, constants, traces = pure_runs
    profile = occupation_profile(traces)
    assert len(profile.blocked_frequency) == params.n
    assert len(profile.window_tentative_mean) == params.num_windows
    bound = max(constants.a4 * params.ell / params.n * params.k, 1.0)
    assert np.all(profile.window_occupation_max <= bound + 1e-9)
    assert profile.blocked_frequency[0] == 0.0
    assert np.all(profile.window_tentative_max >= profile.window_tentative_mean)
    assert np.all(
        profile.blocked_frequency
        >= np.maximum(profile.blocked_main_frequency, profile.blocked_outer_frequency)
    )


@pytest.mark.unittest
def test_relaxed_tentative_series(pure_runs):
    params, _, _, traces = pure_runs
    series = relaxed_tentative(traces)
    assert series.relaxed.shape == (len(traces), params.n)
    for i, trace in enumerate(traces):
        for record in trace.records:
            if record.tentative:
                assert series.relaxed[i, record.time - 1]
    assert series.variance[0] >= 0
    assert series.slope is None or np.isfinite(series.slope)


@pytest.mark.unittest
def test_value_profile_totals(pure_runs):
    params, pool, constants, traces = pure_runs
    opt = opt_ro(pool, params.k).total_value
    profile = value_profile(traces, opt, params, constants)
    total = profile.mean_value.sum() * len(traces)
    assert total == pytest.approx(sum(trace.ro_value for trace in traces))
    assert np.all(profile.lower_bound >= 0)
    assert 0.0 <= mean_tentative_occupation(traces) <= 1.0


if __name__ == "__main__":
    sys.exit(pytest.main(["-sv", os.path.basename(__file__)]))
