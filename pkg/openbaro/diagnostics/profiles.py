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
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from openbaro.algorithms.base_algorithm import Trace
from openbaro.core.params import AlgoConstants, ModelParams
from openbaro.core.ranks import RankTable, psi
from openbaro.diagnostics.bounds import blocking_bound, bound_curves, value_lower_bound

# binomial standard deviations tolerated above a bound
SIGMA_SLACK = 3.0
_TOP_EDGE = 50.0


@dataclass(frozen=True)
class RankBucket:
    low: float
    high: float
    closed_high: bool
    frequency: float
    trials: int
    bound: float
    flagged: bool


@dataclass(frozen=True)
class RankProfile:
    buckets: Tuple[RankBucket, ...]
    start: int

    @property
    def flagged(self) -> List[RankBucket]:
        return [bucket for bucket in self.buckets if bucket.flagged]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "start": self.start,
            "buckets": [
                {
                    **asdict(bucket),
                    "high": None if math.isinf(bucket.high) else bucket.high,
                }
                for bucket in self.buckets
            ],
        }


def _bucket_edges() -> List[Tuple[float, float, bool]]:
    deciles = [(i / 10.0, (i + 1) / 10.0, False) for i in range(10)]
    return [(0.0, 1.0, False)] + deciles + [(1.0, _TOP_EDGE, True), (_TOP_EDGE, math.inf, False)]


def _bucket_bound(low: float, k: float) -> float:
    if low < 1.0:
        return 1.0
    if low < _TOP_EDGE:
        return float(psi(low, k))
    # supremum over (50, inf) is the limit at 50 from the right
    return float(psi(np.nextafter(_TOP_EDGE, math.inf), k))


def flag_frequency(frequency: float, bound: float, trials: int) -> bool:
    """True when the observed frequency exceeds bound + 3 binomial sigmas."""
    p = min(bound, 1.0)
    sigma = math.sqrt(p * (1.0 - p) / trials)
    return frequency > p + SIGMA_SLACK * sigma


def rank_start(params: ModelParams) -> int:
    return 8 * params.ell * (params.gamma + 1)


def _ro_steps(traces: Sequence[Trace], start: int) -> Tuple[np.ndarray, np.ndarray]:
    ranks, tentative = [], []
    for trace in traces:
        for record in trace.records:
            if record.is_ro and record.time >= start and record.rank is not None:
                ranks.append(record.rank)
                tentative.append(record.tentative)
    return np.asarray(ranks, dtype=float), np.asarray(tentative, dtype=bool)


def rank_profile(traces: Sequence[Trace], rank_table: RankTable) -> RankProfile:
    """
    Frequency of tentative picks among random-order steps, grouped by weighted
    rank and compared with psi. Only steps t >= 8 ell (gamma + 1) count; buckets
    without observations are omitted.
    """
    assert len(traces) > 0, "at least one trace is required"
    params = traces[0].params
    start = rank_start(params)
    ranks, tentative = _ro_steps(traces, start)
    buckets = []
    for low, high, closed_high in _bucket_edges():
        upper = ranks <= high if closed_high else ranks < high
        mask = (ranks >= low) & upper
        count = int(mask.sum())
        if count == 0:
            continue
        frequency = float(tentative[mask].mean())
        bound = _bucket_bound(low, rank_table.k)
        buckets.append(
            RankBucket(
                low=low,
                high=high,
                closed_high=closed_high,
                frequency=frequency,
                trials=count,
                bound=bound,
                flagged=bound < 1.0 and flag_frequency(frequency, bound, count),
            )
        )
    return RankProfile(buckets=tuple(buckets), start=start)


@dataclass(frozen=True)
class OccupationProfile:
    """
    window_tentative_mean / window_tentative_max: tentative occupation per window,
    averaged and maximised over trials. blocked_frequency[t - 1] is the share of
    trials blocked at t; blocking_bound is the overlaid shape.
    """

    window_tentative_mean: np.ndarray
    window_tentative_max: np.ndarray
    window_occupation_max: np.ndarray
    blocked_frequency: np.ndarray
    blocked_main_frequency: np.ndarray
    blocked_outer_frequency: np.ndarray
    blocking_bound: np.ndarray

    def to_dict(self) -> Dict[str, Any]:
        return {
            name: [None if not np.isfinite(x) else float(x) for x in getattr(self, name)]
            for name in self.__dataclass_fields__
        }


def occupation_profile(
    traces: Sequence[Trace], numerator: float = 1.0, a5: float = 1.0
) -> OccupationProfile:
    assert len(traces) > 0, "at least one trace is required"
    params = traces[0].params
    windows = np.arange(params.n) // params.ell
    tentative = np.zeros((len(traces), params.num_windows))
    occupied = np.zeros((len(traces), params.num_windows))
    blocked_main = np.zeros((len(traces), params.n), dtype=bool)
    blocked_outer = np.zeros((len(traces), params.n), dtype=bool)
    for i, trace in enumerate(traces):
        np.add.at(tentative[i], windows, trace.column("tentative_occupation").astype(float))
        np.add.at(occupied[i], windows, trace.column("occupation").astype(float))
        blocked_main[i] = trace.column("blocked_main")
        blocked_outer[i] = trace.column("blocked_outer")
    blocked = blocked_main | blocked_outer
    return OccupationProfile(
        window_tentative_mean=tentative.mean(axis=0),
        window_tentative_max=tentative.max(axis=0),
        window_occupation_max=occupied.max(axis=0),
        blocked_frequency=blocked.mean(axis=0),
        blocked_main_frequency=blocked_main.mean(axis=0),
        blocked_outer_frequency=blocked_outer.mean(axis=0),
        blocking_bound=blocking_bound(np.arange(1, params.n + 1), params, numerator, a5),
    )


def relaxed_indicator(rank: Optional[float], tentative: bool) -> bool:
    """Tentative pick, or a weighted rank of at most 1."""
    return bool(tentative) or (rank is not None and rank <= 1.0)


@dataclass(frozen=True)
class RelaxedTentative:
    """
    relaxed[i, t - 1] is the relaxed indicator of trial i at time t (0 at
    adversarial times); variance[t - 1] is the across-trial variance of the
    cumulative relaxed occupation up to t; slope is the log-log regression slope
    of that variance against t.
    """

    relaxed: np.ndarray
    variance: np.ndarray
    slope: Optional[float]


def relaxed_tentative(traces: Sequence[Trace], min_t: int = 1) -> RelaxedTentative:
    assert len(traces) > 0, "at least one trace is required"
    params = traces[0].params
    relaxed = np.zeros((len(traces), params.n), dtype=bool)
    mass = np.zeros((len(traces), params.n))
    for i, trace in enumerate(traces):
        for record in trace.records:
            if record.is_ro and relaxed_indicator(record.rank, record.tentative):
                relaxed[i, record.time - 1] = True
                mass[i, record.time - 1] = record.item.weight
    cumulative = np.cumsum(mass, axis=1)
    ddof = 1 if len(traces) > 1 else 0
    variance = cumulative.var(axis=0, ddof=ddof)
    t = np.arange(1, params.n + 1)
    usable = (variance > 0) & (t >= min_t)
    slope = None
    if usable.sum() >= 2:
        slope = float(np.polyfit(np.log(t[usable]), np.log(variance[usable]), 1)[0])
    return RelaxedTentative(relaxed=relaxed, variance=variance, slope=slope)


def tentative_occupation_bound(rank_table: RankTable, ro_n: int) -> float:
    """(1 / RO_n) * sum_i w_i psi(r_i), bounding the mean tentative occupation at a free time."""
    if ro_n <= 0:
        return 0.0
    cumulative = np.append(np.asarray(rank_table.ranks, dtype=float), rank_table.sentinel)
    weights = np.diff(cumulative) * rank_table.k
    return float(np.dot(weights, psi(np.asarray(rank_table.ranks), rank_table.k)) / ro_n)


def mean_tentative_occupation(traces: Sequence[Trace]) -> float:
    """Mean tentative occupation over random-order steps t >= 8 ell (gamma + 1)."""
    assert len(traces) > 0, "at least one trace is required"
    start = rank_start(traces[0].params)
    samples = [
        record.tentative_occupation
        for trace in traces
        for record in trace.records
        if record.is_ro and record.time >= start
    ]
    return float(np.mean(samples)) if samples else 0.0


@dataclass(frozen=True)
class ValueProfile:
    mean_value: np.ndarray
    lower_bound: np.ndarray


def value_profile(
    traces: Sequence[Trace],
    opt_ro: float,
    params: ModelParams,
    constants: AlgoConstants,
    numerator: float = 1.0,
    a5: float = 1.0,
) -> ValueProfile:
    """Per-step mean value packed at random-order times, next to its lower curve."""
    assert len(traces) > 0, "at least one trace is required"
    collected = np.zeros((len(traces), params.n))
    for i, trace in enumerate(traces):
        for record in trace.records:
            if record.is_ro and record.picked:
                collected[i, record.time - 1] = record.item.value
    curves = bound_curves(params, constants, numerator, a5)
    return ValueProfile(
        mean_value=collected.mean(axis=0),
        lower_bound=value_lower_bound(curves, params, opt_ro),
    )
