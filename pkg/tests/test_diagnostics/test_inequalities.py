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
from hypothesis import given, settings
from hypothesis import strategies as st

from openbaro.cli.verify import DEFAULT_CASES
from openbaro.core import HypothesisUnmetError, InvalidParameterError, SizeLimitError
from openbaro.diagnostics import (
    check_chebyshev_sum,
    check_markov_tail,
    check_moment_bound,
    check_psi_integral,
    check_sampling_comparison,
    check_simplified_factor,
    check_wo_replacement_tail,
    inequalities_suite,
)


@pytest.mark.unittest
def test_tail_of_constant_population():
    result = check_wo_replacement_tail([0.3] * 20, 5, 0.5, 1000, np.random.default_rng(0))
    assert result.empirical == 0.0
    assert result.passed


@pytest.mark.unittest
def test_tail_with_zero_deviation_is_trivial():
    result = check_wo_replacement_tail([0.1, 0.9, 0.5], 2, 0.0, 100, np.random.default_rng(0))
    assert result.bound == 2.0
    assert result.empirical == 1.0
    assert result.passed


@pytest.mark.unittest
@pytest.mark.parametrize("tau", [1.0, 2.0, 4.0])
def test_tail_grid(tau):
    rng = np.random.default_rng(5)
    U = rng.uniform(0, 1, size=100)
    result = check_wo_replacement_tail(U, 30, tau, 20000, rng)
    assert result.passed
    assert result.empirical <= min(result.bound, 1.0) + 0.02


@pytest.mark.unittest
def test_tail_rejects_bad_input():
    with pytest.raises(InvalidParameterError):
        check_wo_replacement_tail([0.5] * 3, 4, 1.0, 10)
    with pytest.raises(InvalidParameterError):
        check_wo_replacement_tail([1.5], 1, 1.0, 10)


@pytest.mark.unittest
def test_chebyshev_equality_cases():
    assert check_chebyshev_sum([2.0] * 4, [3.0] * 4, [0.1, 0.2, 0.3, 0.4])
    assert check_chebyshev_sum([5.0], [-1.0], [2.0])
    with pytest.raises(InvalidParameterError):
        check_chebyshev_sum([1.0, 2.0], [2.0, 1.0], [1.0, 1.0])
    with pytest.raises(InvalidParameterError):
        check_chebyshev_sum([2.0, 1.0], [2.0, 1.0], [0.0, 0.0])


tenths = st.integers(min_value=-1000, max_value=1000).map(lambda i: i / 10)
weights = st.integers(min_value=0, max_value=100).map(lambda i: i / 10)


@pytest.mark.unittest
@settings(max_examples=300, deadline=None)
@given(
    st.lists(st.tuples(tenths, tenths, weights), min_size=1, max_size=15),
    st.integers(min_value=1, max_value=100).map(lambda i: i / 10),
)
def test_chebyshev_random_triples(triples, p0):
    a = sorted((x[0] for x in triples), reverse=True)
    b = sorted((x[1] for x in triples), reverse=True)
    p = [p0] + [x[2] for x in triples[1:]]
    assert check_chebyshev_sum(a, b, p)


@pytest.mark.unittest
def test_sampling_comparison_exact_cases():
    assert check_sampling_comparison(range(4), 2, lambda draw: 1.0)
    distinct = lambda draw: float(len(set(draw)) == len(draw))
    assert check_sampling_comparison(range(3), 2, distinct)
    with pytest.raises(InvalidParameterError):
        check_sampling_comparison(range(3), 3, distinct)
    with pytest.raises(SizeLimitError):
        check_sampling_comparison(range(8), 2, distinct)


@pytest.mark.unittest
def test_sampling_comparison_random_functions():
    rng = np.random.default_rng(9)
    for _ in range(40):
        size = int(rng.integers(4, 8))
        m = int(rng.integers(1, 4))
        table = {draw: float(rng.exponential()) for draw in np.ndindex(*([size] * m))}
        assert check_sampling_comparison(range(size), m, lambda draw: table[tuple(draw)])


@pytest.mark.unittest
def test_simplified_factor():
    assert all(check_simplified_factor(n, m) for n in range(2, 60) for m in range(1, n))


@pytest.mark.unittest
def test_moment_bound_exact_value():
    result = check_moment_bound(10, 0.5, 2, 2000, np.random.default_rng(1))
    assert result.exact == pytest.approx(27.5)
    assert result.bound == pytest.approx((2 * math.e**2 * 5) ** 2)
    assert result.passed


@pytest.mark.unittest
def test_moment_bound_edge_cases():
    assert check_moment_bound(10, 0.0, 2, 100).vacuous
    with pytest.raises(HypothesisUnmetError):
        check_moment_bound(10, 0.1, 2, 100)
    with pytest.raises(InvalidParameterError):
        check_moment_bound(10, 0.5, 1, 100)


@pytest.mark.unittest
@pytest.mark.parametrize("n", [20, 50])
@pytest.mark.parametrize("p", [0.1, 0.3])
@pytest.mark.parametrize("m", [2, 3, 4])
def test_moment_grid(n, p, m):
    if m > n * p:
        pytest.skip("moment order above np")
    rng = np.random.default_rng(n + m)
    assert check_moment_bound(n, p, m, 5000, rng).passed
    assert check_markov_tail(n, p, m, 4 * math.e**2, 5000, rng).passed


@pytest.mark.unittest
def test_psi_integral_single_draw():
    k = 100.0
    check = check_psi_integral(k, 1)
    tail = 4 * k * (20 / math.log(k)) * k ** (-2.5)
    assert check.value == pytest.approx(1 + 1 / k + (2 / k) * 49 + tail, rel=1e-6)
    assert check.value >= 1 - 2 / k
    assert check.bound == pytest.approx(6.0)
    assert check.in_regime and check.passed


@pytest.mark.unittest
@pytest.mark.parametrize("k", [100.0, 1e4])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_psi_integral_grid(k, m):
    check = check_psi_integral(k, m)
    assert check.passed
    assert check.in_regime == (m <= math.log(k) / 4)


@pytest.mark.unittest
def test_inequalities_suite():
    history = inequalities_suite(cases=50, seed=0, trials=500, random_f=10)
    assert history.ok
    assert history.num_cases > 0


@pytest.mark.unittest
def test_inequalities_suite_scales_triples_separately():
    small = inequalities_suite(cases=200, seed=1, trials=300, random_f=10)
    large = inequalities_suite(cases=300, seed=1, trials=300, random_f=10)
    assert small.ok and large.ok
    assert large.num_cases - small.num_cases == 100
    assert DEFAULT_CASES["inequalities"] == 100000


if __name__ == "__main__":
    sys.exit(pytest.main(["-sv", os.path.basename(__file__)]))
