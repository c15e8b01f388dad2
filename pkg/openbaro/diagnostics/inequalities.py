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
import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from gymnasium.utils import seeding
from scipy import integrate, stats

from openbaro.core.errors import (
    HypothesisUnmetError,
    InvalidParameterError,
    QuadratureError,
    SizeLimitError,
)
from openbaro.core.ranks import psi
from openbaro.diagnostics.oracles import OracleHistory, OracleResult

SIGMA_SLACK = 3.0
# constant of the psi integral bound
PSI_INTEGRAL_A2 = 500.0
QUAD_ABS_TOL = 1e-8
MAX_ENUM_SET = 7
MAX_ENUM_DRAWS = 3
_CHUNK = 10000


@dataclass(frozen=True)
class TailCheck:
    empirical: float
    bound: float
    trials: int
    passed: bool


def _binomial_slack(p: float, trials: int) -> float:
    p = min(max(p, 0.0), 1.0)
    return SIGMA_SLACK * math.sqrt(p * (1.0 - p) / trials)


def check_wo_replacement_tail(
    U: Sequence[float],
    s: int,
    tau: float,
    trials: int,
    np_random: Optional[np.random.Generator] = None,
) -> TailCheck:
    """
    Monte-Carlo tail of a sum of s draws without replacement from U, against
    2 exp(-tau^2 / (4 mu + tau)) with mu = s * mean(U).
    """
    U = np.asarray(U, dtype=float)
    if np.any(U < 0) or np.any(U > 1):
        raise InvalidParameterError("entries of U must lie in [0, 1]")
    if not 0 < s <= len(U):
        raise InvalidParameterError(f"need 0 < s <= |U| = {len(U)}, got s={s}")
    if tau < 0 or trials < 1:
        raise InvalidParameterError(f"need tau >= 0 and trials >= 1, got {tau}, {trials}")
    if np_random is None:
        np_random, _ = seeding.np_random(0)
    mu = s * float(U.mean())
    bound = 2.0 if tau == 0 else 2.0 * math.exp(-(tau**2) / (4.0 * mu + tau))
    hits = 0
    remaining = trials
    while remaining > 0:
        size = min(_CHUNK, remaining)
        keys = np_random.random((size, len(U)))
        subset = np.argpartition(keys, s - 1, axis=1)[:, :s]
        sums = U[subset].sum(axis=1)
        hits += int(np.count_nonzero(np.abs(sums - mu) >= tau))
        remaining -= size
    empirical = hits / trials
    passed = empirical <= min(bound, 1.0) + _binomial_slack(bound, trials)
    return TailCheck(empirical=empirical, bound=bound, trials=trials, passed=passed)


def check_chebyshev_sum(a: Sequence[float], b: Sequence[float], p: Sequence[float]) -> bool:
    """sum a_i b_i p_i >= (sum a_i p_i)(sum b_i p_i) / sum p_i for non-increasing a, b."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    p = np.asarray(p, dtype=float)
    if not len(a) == len(b) == len(p) or len(a) == 0:
        raise InvalidParameterError("a, b and p must be nonempty and of equal length")
    if np.any(np.diff(a) > 0) or np.any(np.diff(b) > 0):
        raise InvalidParameterError("a and b must be non-increasing")
    if np.any(p < 0) or not p.sum() > 0:
        raise InvalidParameterError("p must be nonnegative with a positive sum")
    total = p.sum()
    lhs = float(np.sum(a * b * p))
    rhs = float(np.sum(a * p) * np.sum(b * p) / total)
    scale = float(np.sum(np.abs(a * b) * p)) + abs(rhs)
    return lhs >= rhs - 1e-12 * scale


def sampling_factor(n: int, m: int) -> float:
    return (1.0 + m / (n - m)) ** m


def check_sampling_comparison(
    S: Sequence, m: int, f: Callable[[Tuple], float]
) -> bool:
    """
    For every x in S, the mean of f over ordered m-draws without replacement from
    S without x is at most (1 + m/(n - m))^m times the mean of f over m-draws
    with replacement from S. Both sides are enumerated exactly.
    """
    S = list(S)
    n = len(S)
    if m < 1 or m >= n:
        raise InvalidParameterError(f"need 1 <= m < |S| = {n}, got m={m}")
    if n > MAX_ENUM_SET or m > MAX_ENUM_DRAWS:
        raise SizeLimitError(
            f"enumeration limited to |S| <= {MAX_ENUM_SET} and m <= {MAX_ENUM_DRAWS}"
        )
    with_replacement = float(np.mean([f(draw) for draw in itertools.product(S, repeat=m)]))
    factor = sampling_factor(n, m)
    for i in range(n):
        rest = S[:i] + S[i + 1 :]
        values = [f(draw) for draw in itertools.permutations(rest, m)]
        if any(v < 0 for v in values):
            raise InvalidParameterError("f must be nonnegative")
        without = float(np.mean(values))
        if without > factor * with_replacement * (1.0 + 1e-12) + 1e-300:
            return False
    return True


def check_simplified_factor(n: int, m: int) -> bool:
    """1 + 4m^2/n dominates (1 + m/(n - m))^m when m^2/(n - m) <= 1 and m <= n/2."""
    if m >= n or m * m / (n - m) > 1 or m > n / 2:
        return True
    return 1.0 + 4.0 * m * m / n >= sampling_factor(n, m)


@dataclass(frozen=True)
class MomentCheck:
    estimate: float
    exact: float
    bound: float
    passed: bool
    vacuous: bool = False


def _check_moment_args(n: int, p: float, m: int) -> None:
    if n < 1 or not 0 <= p <= 1:
        raise InvalidParameterError(f"need n >= 1 and p in [0, 1], got n={n}, p={p}")
    if m < 2:
        raise InvalidParameterError(f"moment order must be at least 2, got {m}")


def check_moment_bound(
    n: int,
    p: float,
    m: int,
    trials: int,
    np_random: Optional[np.random.Generator] = None,
) -> MomentCheck:
    """E (sum of n Bernoulli(p))^m <= (2 e^2 n p)^m, by sampling and exactly."""
    _check_moment_args(n, p, m)
    if p == 0:
        return MomentCheck(estimate=0.0, exact=0.0, bound=0.0, passed=True, vacuous=True)
    if m > n * p:
        raise HypothesisUnmetError(f"moment order m={m} exceeds np={n * p}")
    if np_random is None:
        np_random, _ = seeding.np_random(0)
    sums = np_random.binomial(n, p, size=trials).astype(float)
    estimate = float(np.mean(sums**m))
    exact = float(stats.binom.moment(m, n, p))
    bound = (2.0 * math.e**2 * n * p) ** m
    return MomentCheck(
        estimate=estimate, exact=exact, bound=bound, passed=estimate <= bound and exact <= bound
    )


def check_markov_tail(
    n: int,
    p: float,
    m: int,
    alpha: float,
    trials: int,
    np_random: Optional[np.random.Generator] = None,
) -> TailCheck:
    """Pr(sum >= alpha n p) <= (2 e^2 / alpha)^m."""
    _check_moment_args(n, p, m)
    if not alpha > 0:
        raise InvalidParameterError(f"alpha must be positive, got {alpha}")
    if m > n * p:
        raise HypothesisUnmetError(f"moment order m={m} exceeds np={n * p}")
    if np_random is None:
        np_random, _ = seeding.np_random(0)
    sums = np_random.binomial(n, p, size=trials)
    empirical = float(np.mean(sums >= alpha * n * p))
    bound = (2.0 * math.e**2 / alpha) ** m
    passed = empirical <= min(bound, 1.0) + _binomial_slack(bound, trials)
    return TailCheck(empirical=empirical, bound=bound, trials=trials, passed=passed)


@dataclass(frozen=True)
class PsiIntegralCheck:
    value: float
    bound: float
    in_regime: bool
    passed: bool


def _quad(func, low: float, high: float) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, _ = integrate.quad(func, low, high, epsabs=QUAD_ABS_TOL, limit=200)
        except integrate.IntegrationWarning as e:
            raise QuadratureError(f"integral over [{low}, {high}] did not converge: {e}")
    return float(value)


def psi_integral(k: float, m: int) -> float:
    """
    Integral of psi(max_i x_i - 1/k) over the positive orthant in m dimensions,
    reduced to one dimension through the density m z^(m-1) of the maximum.
    """
    if m < 1 or not k > 0:
        raise InvalidParameterError(f"need m >= 1 and k > 0, got m={m}, k={k}")

    def integrand(z: float) -> float:
        return float(psi(z - 1.0 / k, k)) * m * z ** (m - 1)

    edges = [0.0, 1.0 + 1.0 / k, 50.0 + 1.0 / k, math.inf]
    return sum(_quad(integrand, lo, hi) for lo, hi in zip(edges[:-1], edges[1:]))


def check_psi_integral(k: float, m: int) -> PsiIntegralCheck:
    """
    Compare the psi integral with 1 + 500^m / k. Arguments outside m <= ln(k)/4
    and k >= 80 are evaluated as well and reported with in_regime False.
    """
    value = psi_integral(k, m)
    bound = 1.0 + PSI_INTEGRAL_A2**m / k
    in_regime = k >= 80 and m <= math.log(k) / 4.0
    return PsiIntegralCheck(value=value, bound=bound, in_regime=in_regime, passed=value <= bound)


def _sorted_desc(np_random: np.random.Generator, size: int) -> np.ndarray:
    return np.sort(np_random.normal(size=size))[::-1]


def inequalities_suite(
    cases: int = 100000,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    random_f: int = 200,
) -> OracleHistory:
    """
    Run every checker once per configuration of a small grid.

    :param cases: number of random Chebyshev-sum triples.
    :param seed: seed of all random draws.
    :param trials: Monte-Carlo samples per tail and moment cell, ``cases`` when None.
    :param random_f: random functions for the sampling comparison, at most ``cases``.
    """
    np_random, _ = seeding.np_random(seed)
    history = OracleHistory()

    def record(passed: bool, case, vacuous: bool = False):
        history.update(
            OracleResult.PASS if passed else OracleResult.FAIL, vacuous=vacuous, case=case
        )

    trials = max(100, cases if trials is None else trials)
    for size, s in ((100, 30), (50, 10), (20, 15), (200, 60)):
        U = np_random.uniform(0.0, 1.0, size=size)
        for tau in (1.0, 2.0, 4.0):
            result = check_wo_replacement_tail(U, s, tau, trials, np_random)
            record(result.passed, ("wo_replacement_tail", size, s, tau))

    for _ in range(cases):
        size = int(np_random.integers(1, 20))
        p = np_random.uniform(0.0, 1.0, size=size) + 1e-3
        record(
            check_chebyshev_sum(_sorted_desc(np_random, size), _sorted_desc(np_random, size), p),
            ("chebyshev_sum", size),
        )

    for _ in range(max(1, min(random_f, cases))):
        size = int(np_random.integers(2, MAX_ENUM_SET + 1))
        m = int(np_random.integers(1, min(MAX_ENUM_DRAWS, size - 1) + 1))
        table = {}

        def f(draw, table=table):
            if draw not in table:
                table[draw] = float(np_random.exponential())
            return table[draw]

        record(check_sampling_comparison(range(size), m, f), ("sampling_comparison", size, m))
    for n in range(2, 40):
        for m in range(1, n):
            record(check_simplified_factor(n, m), ("simplified_factor", n, m))

    for n in (20, 50):
        for p in (0.1, 0.3):
            for m in (2, 3, 4):
                if m > n * p:
                    continue
                moment = check_moment_bound(n, p, m, trials, np_random)
                record(moment.passed, ("moment_bound", n, p, m))
                tail = check_markov_tail(n, p, m, 4.0 * math.e**2, trials, np_random)
                record(tail.passed, ("markov_tail", n, p, m))

    for k in (100.0, 1e4):
        for m in (1, 2, 3):
            check = check_psi_integral(k, m)
            record(check.passed, ("psi_integral", k, m), vacuous=not check.in_regime)
    return history
