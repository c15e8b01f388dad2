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
from hypothesis import given, settings
from hypothesis import strategies as st

from openbaro.core import InvalidParameterError, Item, pool_ranks, psi, sort_pool, weighted_ranks


@pytest.mark.unittest
def test_weighted_ranks_examples():
    table = weighted_ranks([Item(3, 1), Item(1, 0.5), Item(1, 1)], 2)
    assert list(table.ranks) == pytest.approx([0, 0.5, 0.75])
    assert table.sentinel == pytest.approx(1.25)

    table = weighted_ranks([Item(1, 1)], 7)
    assert list(table.ranks) == [0.0]
    assert table.sentinel == pytest.approx(1 / 7)

    table = weighted_ranks([Item(1, 1)] * 8, 4)
    assert list(table.ranks) == pytest.approx([0.25 * i for i in range(8)])

    with pytest.raises(InvalidParameterError):
        weighted_ranks([Item(1, 1)], 0)


@pytest.mark.unittest
@settings(max_examples=100, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.floats(min_value=0.01, max_value=10.0),
            st.floats(min_value=0.01, max_value=1.0),
        ),
        min_size=1,
        max_size=30,
    ),
    st.floats(min_value=0.5, max_value=50.0),
)
def test_rank_differences(pairs, k):
    sorted_pool, _ = sort_pool([Item(v, w) for v, w in pairs])
    table = weighted_ranks(sorted_pool, k)
    ranks = np.append(table.ranks, table.sentinel)
    assert ranks[0] == 0.0
    diffs = np.diff(ranks)
    assert list(diffs) == pytest.approx([item.weight / k for item in sorted_pool], abs=1e-12)
    assert np.all(diffs <= 1 / k + 1e-12)


@pytest.mark.unittest
def test_pool_ranks_follow_original_index():
    pool = [Item(1, 1), Item(9, 1), Item(4, 0.5)]
    ranks = pool_ranks(pool, 1)
    assert list(ranks) == pytest.approx([1.5, 0.0, 1.0])


@pytest.mark.unittest
def test_psi_cases():
    assert psi(0.5, 100) == 1.0
    assert psi(25, 100) == pytest.approx(0.02)
    assert psi(60, 100) == pytest.approx(4e-4)
    assert psi(1.0, 100) == pytest.approx(0.02)
    assert psi(50.0, 100) == pytest.approx(0.02)


@pytest.mark.unittest
@pytest.mark.parametrize("k", [80, 100, 1000, 10**4])
def test_psi_nonincreasing(k):
    grid = np.linspace(0, 200, 4001)
    values = psi(grid, k)
    assert np.all(np.diff(values) <= 1e-15)
    assert np.all(values[grid >= 1] <= 1.0)


if __name__ == "__main__":
    sys.exit(pytest.main(["-sv", os.path.basename(__file__)]))
