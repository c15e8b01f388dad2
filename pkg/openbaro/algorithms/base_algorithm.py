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
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from openbaro.adversary.schedule import Schedule
from openbaro.core.items import FRACTION_TOL, Item
from openbaro.core.params import AlgoConstants, ModelParams
from openbaro.core.ranks import pool_ranks
from openbaro.envs.baro_env import BaroKnapsackEnv

_OCCUPATION_TOL = 1e-9
# random-order items tie-break by pool index, adversarial ones go first
ADVERSARIAL_TIE_KEY = -1.0


@dataclass(frozen=True)
class StepRecord:
    time: int
    is_ro: bool
    item: Item
    rank: Optional[float]
    tie_key: float
    fraction: float
    tentative: bool
    full_pick: bool
    blocked_main: bool
    blocked_outer: bool
    picked: bool
    occupation: float
    tentative_occupation: float

    @property
    def blocked(self) -> bool:
        return self.blocked_main or self.blocked_outer


@dataclass(frozen=True)
class AlgoState:
    """
    State after ``step`` arrivals.

    The observation buffers and the record list are shared between successive
    states and only their first ``step`` entries belong to this state, so a state
    must not be advanced twice.
    """

    step: int
    total_occupation: float
    window_occupations: Dict[int, float]
    values: np.ndarray = field(repr=False, compare=False)
    weights: np.ndarray = field(repr=False, compare=False)
    tie_keys: np.ndarray = field(repr=False, compare=False)
    records_buffer: List[StepRecord] = field(repr=False, compare=False)
    memo: Dict[str, Any] = field(default_factory=dict, repr=False, compare=False)

    @property
    def records(self) -> Tuple[StepRecord, ...]:
        return tuple(self.records_buffer[: self.step])

    def window_occupation(self, window: int) -> float:
        return self.window_occupations.get(window, 0.0)


@dataclass(frozen=True)
class Trace:
    records: Tuple[StepRecord, ...]
    params: ModelParams
    constants: Optional[AlgoConstants]
    seed: Optional[int]
    algorithm: str = "baro"

    def __len__(self) -> int:
        return len(self.records)

    def column(self, name: str) -> np.ndarray:
        if name in ("value", "weight"):
            return np.array([getattr(r.item, name) for r in self.records], dtype=float)
        if name == "rank":
            return np.array(
                [np.nan if r.rank is None else r.rank for r in self.records], dtype=float
            )
        return np.array([getattr(r, name) for r in self.records])

    @property
    def ro_value(self) -> float:
        return float(sum(r.item.value for r in self.records if r.is_ro and r.picked))

    @property
    def total_occupation(self) -> float:
        return float(sum(r.occupation for r in self.records))

    def window_occupations(self) -> np.ndarray:
        occupation = np.zeros(self.params.num_windows)
        windows = (self.column("time") - 1) // self.params.ell
        np.add.at(occupation, windows, self.column("occupation").astype(float))
        return occupation


TRACE_COLUMNS = (
    "t",
    "is_ro",
    "value",
    "weight",
    "rank",
    "tentative",
    "blocked_main",
    "blocked_outer",
    "picked",
    "occupation",
)


def trace_rows(trace: Trace) -> List[Tuple[Any, ...]]:
    return [
        (
            r.time,
            r.is_ro,
            r.item.value,
            r.item.weight,
            r.rank,
            r.tentative,
            r.blocked_main,
            r.blocked_outer,
            r.picked,
            r.occupation,
        )
        for r in trace.records
    ]


def verify_trace(trace: Trace) -> None:
    """Assert feasibility, window safety and the pick implication chain."""
    params = trace.params
    assert len(trace) == params.n, f"trace has {len(trace)} steps, expected {params.n}"
    for r in trace.records:
        if r.picked:
            assert r.tentative, f"t={r.time}: picked without a tentative pick"
            assert not r.blocked, f"t={r.time}: picked while blocked"
        assert r.occupation == (
            r.item.weight if r.picked else 0.0
        ), f"t={r.time}: occupation does not match the pick"
        assert r.tentative_occupation == (
            r.item.weight if r.tentative else 0.0
        ), f"t={r.time}: tentative occupation does not match the tentative pick"
    total = trace.total_occupation
    assert total <= params.k + _OCCUPATION_TOL, f"occupation {total} exceeds k={params.k}"
    if trace.constants is not None and trace.algorithm == "baro":
        # the first item of a window is checked against the previous window only
        bound = max(trace.constants.a4 * params.ell / params.n * params.k, 1.0)
        worst = float(trace.window_occupations().max(initial=0.0))
        assert (
            worst <= bound + _OCCUPATION_TOL
        ), f"window occupation {worst} exceeds the outer cap {bound}"


class BaseOnlineAlgorithm(ABC):
    """
    Online rule deciding at each arrival whether to pack the item.

    Subclasses provide the tentative fraction and may override the blocking rules;
    the permanent decision is the tentative pick unless one of the checks blocks it.
    """

    name = "base"

    def __init__(self, params: ModelParams, constants: Optional[AlgoConstants] = None):
        self.params = params
        self.constants = constants
        self.window_ids = np.arange(params.n, dtype=np.int64) // params.ell

    def initial_state(self) -> AlgoState:
        return AlgoState(
            step=0,
            total_occupation=0.0,
            window_occupations={},
            values=np.zeros(self.params.n),
            weights=np.zeros(self.params.n),
            tie_keys=np.zeros(self.params.n),
            records_buffer=[],
            memo=self._initial_memo(),
        )

    def _initial_memo(self) -> Dict[str, Any]:
        return {}

    @abstractmethod
    def _tentative_fraction(self, state: AlgoState, item: Item, t: int) -> float:
        raise NotImplementedError

    def _blocked_main(self, state: AlgoState, t: int) -> bool:
        return state.total_occupation > self.params.k - 1

    def _blocked_outer(self, state: AlgoState, t: int) -> bool:
        return False

    def step(
        self,
        state: AlgoState,
        item: Item,
        t: int,
        is_ro: bool = True,
        rank: Optional[float] = None,
        tie_key: Optional[float] = None,
    ) -> Tuple[StepRecord, AlgoState]:
        """
        Decide on the item arriving at time t.

        :param tie_key: order among equal densities, lower goes first; defaults to t.
        """
        assert t == state.step + 1, f"state is at step {state.step}, cannot process t={t}"
        tie_key = float(t) if tie_key is None else float(tie_key)
        state.values[t - 1] = item.value
        state.weights[t - 1] = item.weight
        state.tie_keys[t - 1] = tie_key

        fraction = self._tentative_fraction(state, item, t)
        tentative = fraction > FRACTION_TOL
        blocked_main = self._blocked_main(state, t)
        blocked_outer = self._blocked_outer(state, t)
        picked = tentative and not blocked_main and not blocked_outer
        occupation = item.weight if picked else 0.0

        record = StepRecord(
            time=t,
            is_ro=is_ro,
            item=item,
            rank=rank,
            tie_key=tie_key,
            fraction=fraction,
            tentative=tentative,
            full_pick=fraction >= 1.0 - FRACTION_TOL,
            blocked_main=blocked_main,
            blocked_outer=blocked_outer,
            picked=picked,
            occupation=occupation,
            tentative_occupation=item.weight if tentative else 0.0,
        )
        window_occupations = state.window_occupations
        if picked:
            window = int(self.window_ids[t - 1])
            window_occupations = dict(window_occupations)
            window_occupations[window] = window_occupations.get(window, 0.0) + occupation
        self._update_memo(state, record)
        del state.records_buffer[state.step :]
        state.records_buffer.append(record)
        new_state = replace(
            state,
            step=t,
            total_occupation=state.total_occupation + occupation,
            window_occupations=window_occupations,
        )
        return record, new_state

    def _update_memo(self, state: AlgoState, record: StepRecord) -> None:
        pass

    def run(self, schedule: Schedule) -> Trace:
        assert schedule.params == self.params, "schedule built for other model parameters"
        env = BaroKnapsackEnv(schedule=schedule)
        ranks = pool_ranks(schedule.pool, self.params.k)
        _, info = env.reset(seed=schedule.seed)
        state = self.initial_state()
        terminated = False
        while not terminated:
            ro_index = info["ro_index"]
            if ro_index is None:
                rank, tie_key = None, ADVERSARIAL_TIE_KEY
            else:
                rank, tie_key = float(ranks[ro_index]), float(ro_index)
            record, state = self.step(
                state, info["item"], info["t"], info["is_ro"], rank, tie_key
            )
            _, _, terminated, _, info = env.step(int(record.picked))
        return Trace(
            records=state.records,
            params=self.params,
            constants=self.constants,
            seed=schedule.seed,
            algorithm=self.name,
        )
