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

from openbaro.core import (
    ModelParams,
    free_time_bounds,
    free_times,
    truncate,
    window_partition,
)


@pytest.mark.unittest
def test_window_partition():
    windows = window_partition(10, 3)
    assert [list(w) for w in windows] == [[1, 2, 3], [4, 5, 6], [7, 8, 9], [10]]
    assert [list(w) for w in truncate(windows, 5)] == [[1, 2, 3], [4, 5]]
    assert [list(w) for w in window_partition(4, 4)] == [[1, 2, 3, 4]]


@pytest.mark.unittest
@pytest.mark.parametrize("n,ell", [(1, 1), (17, 4), (100, 7), (64, 64), (5, 9)])
def test_window_partition_covers_horizon(n, ell):
    times = [t for w in window_partition(n, ell) for t in w]
    assert times == list(range(1, n + 1))


@pytest.mark.unittest
def test_free_times():
    params = ModelParams(n=10, k=2, ell=3, gamma=1, adv_cover={0})
    free = free_times(params, 5)
    assert free.times == frozenset({4, 5})
    assert free.count == 2
    assert free.ro_count == 2
    assert free_times(ModelParams(n=10, k=2, ell=3), 6).times == frozenset(range(1, 7))


@pytest.mark.unittest
@pytest.mark.parametrize("cover", [{0, 1}, {2, 7}, {0, 9}, {4}])
def test_free_times_half_after_two_gamma_ell(cover):
    params = ModelParams(n=100, k=20, ell=10, gamma=2, adv_cover=cover)
    for t in range(2 * params.gamma * params.ell, params.n + 1):
        assert free_times(params, t).count >= t / 2


@pytest.mark.unittest
def test_free_time_bounds_chain():
    params = ModelParams(n=100, k=20, ell=10, gamma=2, adv_cover={3, 6})
    lhs, mid, rhs = free_time_bounds(params)
    assert lhs <= mid <= rhs
    assert mid == pytest.approx(1 / 80)


if __name__ == "__main__":
    sys.exit(pytest.main(["-sv", os.path.basename(__file__)]))
