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
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

import numpy as np
from gymnasium.utils import seeding

from openbaro.core.params import AlgoConstants, ModelParams
from openbaro.lpsolve.greedy import solve_greedy
from openbaro.lpsolve.instance import LpInstance, build_lp_instance, step_budget, window_cap
from openbaro.lpsolve.reference import solve_reference

logger = logging.getLogger(__name__)

MAX_SCENARIO_N = 12
_VALUE_TOL = 1e-9
_MASS_TOL = 1e-12


class OracleResult(Enum):
    PASS = 0
    FLAG = 1
    FAIL = 2


class OracleHistory:
    def __init__(self):
        self.num_cases = 0
        self.num_pass = 0
        self.num_flag = 0
        self.num_fail = 0
        self.num_vacuous = 0
        self.failures: List[Any] = []

    def update(self, result: OracleResult, vacuous: bool = False, case: Any = None):
        self.num_cases += 1
        if result == OracleResult.PASS:
            self.num_pass += 1
            if vacuous:
                self.num_vacuous += 1
        elif result == OracleResult.FLAG:
            self.num_flag += 1
        else:
            self.num_fail += 1
            self.failures.append(case)

    def merge(self, other: "OracleHistory") -> "OracleHistory":
        self.num_cases += other.num_cases
        self.num_pass += other.num_pass
        self.num_flag += other.num_flag
        self.num_fail += other.num_fail
        self.num_vacuous += other.num_vacuous
        self.failures.extend(other.failures)
        return self

    @property
    def ok(self) -> bool:
        return self.num_fail == 0

    def get_info(self) -> Dict[str, int]:
        return {
            "cases": self.num_cases,
            "pass": self.num_pass,
            "flag": self.num_flag,
            "fail": self.num_fail,
            "vacuous": self.num_vacuous,
        }


@dataclass(frozen=True)
class LpScenario:
    """
    A realized prefix: values[s - 1] and weights[s - 1] are the item seen at
    time s <= t. tie_keys follow the online convention (lower goes first).
    """

    values: np.ndarray
    weights: np.ndarray
    t: int
    params: ModelParams
    constants: AlgoConstants
    tie_keys: Optional[np.ndarray] = None

    def instance(self) -> LpInstance:
        return build_lp_instance(
            self.values, self.weights, self.t, self.params, self.constants, self.tie_keys
        )

    @property
    def budget(self) -> float:
        return step_budget(self.t, self.params, self.constants)

    @property
    def cap(self) -> float:
        return window_cap(self.params, self.constants)

    def _prefix(self):
        values = np.asarray(self.values[: self.t], dtype=float)
        weights = np.asarray(self.weights[: self.t], dtype=float)
        return values, weights, values / weights

    def better_mask(self) -> np.ndarray:
        """Earlier items strictly denser than the item at t."""
        _, _, density = self._prefix()
        mask = density > density[-1]
        mask[-1] = False
        return mask

    def has_ties(self) -> bool:
        _, _, density = self._prefix()
        return bool(np.any(density[:-1] == density[-1]))

    def better_window_mass(self) -> np.ndarray:
        _, weights, _ = self._prefix()
        windows = np.arange(self.t) // self.params.ell
        return np.bincount(
            windows, weights=np.where(self.better_mask(), weights, 0.0), minlength=windows[-1] + 1
        )

    def current_fraction(self) -> float:
        return solve_greedy(self.instance()).fraction(self.t)


def random_scenario(
    np_random: np.random.Generator, max_n: int = MAX_SCENARIO_N, coarse_values: bool = False
) -> LpScenario:
    """
    Draw a small model, constants and prefix. coarse_values rounds values to one
    decimal so that equal densities occur.
    """
    n = int(np_random.integers(2, max_n + 1))
    k = float(np_random.uniform(0.5, n))
    ell = int(np_random.integers(1, n + 1))
    num_windows = (n - 1) // ell + 1
    gamma = int(np_random.integers(0, num_windows + 1))
    cover_size = int(np_random.integers(0, gamma + 1))
    cover = np_random.choice(num_windows, size=cover_size, replace=False)
    params = ModelParams(n=n, k=k, ell=ell, gamma=gamma, adv_cover=frozenset(int(j) for j in cover))
    a1 = float(np_random.uniform(0.5, 4.0))
    constants = AlgoConstants(a1=a1, a4=2 * a1, scale_budget=bool(np_random.integers(0, 2)))
    t = int(np_random.integers(1, n + 1))
    values = np_random.uniform(0.05, 1.0, size=n)
    weights = np_random.uniform(0.05, 1.0, size=n)
    if coarse_values:
        values = np.round(values, 1) + 0.1
        weights = np.ones(n)
    return LpScenario(values=values, weights=weights, t=t, params=params, constants=constants)


def random_lp_instance(np_random: np.random.Generator, max_entries: int = MAX_SCENARIO_N) -> LpInstance:
    size = int(np_random.integers(1, max_entries + 1))
    ell = int(np_random.integers(1, size + 1))
    times = np_random.permutation(np.arange(1, size + 1))
    entries = [
        (int(t), float(np_random.uniform(0.01, 10)), float(np_random.uniform(0.01, 1)))
        for t in times
    ]
    num_windows = (size - 1) // ell + 1
    caps = {j: float(np_random.uniform(0, 2 * ell)) for j in range(num_windows)}
    return LpInstance(
        entries=entries, budget=float(np_random.uniform(0, size)), window_caps=caps, ell=ell
    )


def lp_equivalence_oracle(inst: LpInstance) -> OracleResult:
    greedy = solve_greedy(inst).total_value
    reference = solve_reference(inst).total_value
    if abs(greedy - reference) <= _VALUE_TOL * max(1.0, abs(reference)):
        return OracleResult.PASS
    return OracleResult.FAIL


def better_only_saturates(scenario: LpScenario) -> bool:
    """Whether the strictly denser items alone can fill the budget within the caps."""
    used = float(np.minimum(scenario.better_window_mass(), scenario.cap).sum())
    return used >= scenario.budget


def lemma_sat_oracle(scenario: LpScenario) -> OracleResult:
    """
    When strictly denser items can saturate the budget, the greedy optimum must
    leave the item at t out. Equal densities make the optimum degenerate and are
    flagged. A scenario without a saturating solution passes vacuously.
    """
    if not better_only_saturates(scenario):
        return OracleResult.PASS
    if scenario.has_ties():
        return OracleResult.FLAG
    mass = scenario.current_fraction() * float(scenario.weights[scenario.t - 1])
    if mass <= _MASS_TOL * max(1.0, scenario.budget):
        return OracleResult.PASS
    return OracleResult.FAIL


def lbpick_hypotheses(scenario: LpScenario, include_own_size: bool = True) -> bool:
    """
    Strict margins under which the item at a free time t is fully picked: the
    strictly denser mass at free times stays below budget - gamma * cap, and the
    strictly denser mass in the window of t stays below the cap. With
    include_own_size the weight of the item at t is added to both masses.
    """
    params = scenario.params
    t = scenario.t
    if params.is_adversarial(t):
        return False
    _, weights, _ = scenario._prefix()
    free = ~params.adversarial_mask()[:t]
    better = scenario.better_mask()
    own = float(weights[-1]) if include_own_size else 0.0
    free_mass = float(weights[better & free].sum()) + own
    last_mass = float(scenario.better_window_mass()[-1]) + own
    slack = scenario.budget - params.gamma * scenario.cap
    return free_mass < slack and last_mass < scenario.cap


def lemma_lbpick_oracle(scenario: LpScenario, include_own_size: bool = True) -> OracleResult:
    if not lbpick_hypotheses(scenario, include_own_size):
        return OracleResult.PASS
    if scenario.has_ties():
        return OracleResult.FLAG
    if scenario.current_fraction() >= 1.0 - _MASS_TOL:
        return OracleResult.PASS
    return OracleResult.FAIL


def lp_equivalence_suite(cases: int, seed: Optional[int] = None) -> OracleHistory:
    np_random, _ = seeding.np_random(seed)
    history = OracleHistory()
    for _ in range(cases):
        inst = random_lp_instance(np_random)
        history.update(lp_equivalence_oracle(inst), case=inst)
    return history


def lemma_sat_suite(cases: int, seed: Optional[int] = None) -> OracleHistory:
    np_random, _ = seeding.np_random(seed)
    history = OracleHistory()
    for i in range(cases):
        scenario = random_scenario(np_random, coarse_values=i % 4 == 3)
        vacuous = not better_only_saturates(scenario)
        history.update(lemma_sat_oracle(scenario), vacuous=vacuous, case=scenario)
    return history


def lemma_lbpick_suite(
    cases: int,
    seed: Optional[int] = None,
    include_own_size: bool = True,
    max_attempts: Optional[int] = None,
) -> OracleHistory:
    """Draw scenarios until ``cases`` of them meet the hypotheses."""
    np_random, _ = seeding.np_random(seed)
    history = OracleHistory()
    max_attempts = 200 * cases if max_attempts is None else max_attempts
    attempts = 0
    while history.num_cases < cases and attempts < max_attempts:
        attempts += 1
        scenario = random_scenario(np_random, coarse_values=attempts % 4 == 0)
        if not lbpick_hypotheses(scenario, include_own_size):
            continue
        history.update(lemma_lbpick_oracle(scenario, include_own_size), case=scenario)
    if history.num_cases < cases:
        logger.warning(
            f"only {history.num_cases} of {cases} scenarios met the hypotheses "
            f"after {attempts} attempts"
        )
    return history


suite_dict: Dict[str, Callable[..., OracleHistory]] = {
    "lp-equivalence": lp_equivalence_suite,
    "lemma-sat": lemma_sat_suite,
    "lemma-lbpick": lemma_lbpick_suite,
}
