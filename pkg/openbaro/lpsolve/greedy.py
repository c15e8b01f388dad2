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
from typing import List, Optional, Tuple

import numpy as np

from openbaro.core.items import FRACTION_TOL, FractionalSolution
from openbaro.lpsolve.instance import LpInstance


def _group_prefix_sums(groups: np.ndarray, amounts: np.ndarray) -> np.ndarray:
    """For each position, the sum of earlier amounts in the same group."""
    order = np.argsort(groups, kind="stable")
    sorted_groups = groups[order]
    sorted_amounts = amounts[order]
    cumulative = np.cumsum(sorted_amounts) - sorted_amounts
    starts = np.searchsorted(sorted_groups, sorted_groups, side="left")
    group_offset = cumulative[starts]
    before = np.empty_like(amounts)
    before[order] = cumulative - group_offset
    return before


def solve_greedy(inst: LpInstance) -> FractionalSolution:
    """
    Density greedy over the laminar family (global budget plus disjoint window caps).

    Entries are visited by decreasing density, ties by tie key and then by time.
    Each takes the largest fraction that fits both its window's remaining cap and
    the remaining budget.
    """
    times = inst.times
    values = inst.values
    weights = inst.weights
    if len(times) == 0:
        return FractionalSolution(fractions={}, total_value=0.0, total_weight=0.0)

    order = np.lexsort((times, inst.keys, -(values / weights)))
    w_sorted = weights[order]
    caps_sorted = inst.caps_of_entries()[order]
    windows_sorted = inst.window_ids[order]

    window_before = _group_prefix_sums(windows_sorted, w_sorted)
    window_take = np.clip(caps_sorted - window_before, 0.0, w_sorted)
    budget_before = np.cumsum(window_take) - window_take
    amount = np.clip(inst.budget - budget_before, 0.0, window_take)

    x = np.zeros(len(times))
    x[order] = amount / w_sorted
    return FractionalSolution.from_arrays(times, x, values, weights)


def greedy_current_fraction(
    values: np.ndarray,
    weights: np.ndarray,
    window_ids: np.ndarray,
    budget: float,
    cap: float,
    tie_keys: Optional[np.ndarray] = None,
) -> float:
    """
    Fraction the greedy optimum assigns to the last entry of the prefix, computed
    without solving for the other entries. All windows share the same cap.

    An earlier entry is ranked ahead of the last one when its density is larger, or
    equal with a tie key not above the last key (time order when tie_keys is None).
    In each window the ahead entries occupy min(cap, mass ahead), so the last entry
    receives what remains of both the budget and its window cap.
    """
    w_t = float(weights[-1])
    d = values / weights
    if tie_keys is None:
        ahead = d[:-1] >= d[-1]
    else:
        ahead = (d[:-1] > d[-1]) | ((d[:-1] == d[-1]) & (tie_keys[:-1] <= tie_keys[-1]))
    last_window = int(window_ids[-1])
    mass_ahead = np.bincount(
        window_ids[:-1][ahead],
        weights=weights[:-1][ahead],
        minlength=last_window + 1,
    )
    used = float(np.minimum(mass_ahead, cap).sum())
    window_room = max(0.0, cap - float(mass_ahead[last_window]))
    amount = min(w_t, window_room, max(0.0, budget - used))
    return amount / w_t


class PrefixGreedy:
    """
    Incremental form of ``greedy_current_fraction`` for a prefix that grows by one
    entry per call, with windows of ``ell`` consecutive times sharing one cap.

    Windows that are complete are folded into one array sorted by decreasing
    density and tie key, holding for each entry the weight it adds to its window's
    capped mass. The capped mass ahead of a new entry over all complete windows is
    then a prefix sum found by binary search. Only the open window is scanned.
    """

    def __init__(self, cap: float, ell: int):
        self.cap = cap
        self.ell = ell
        self.size = 0
        self._closed = 0
        self._parts: List[Tuple[np.ndarray, np.ndarray, np.ndarray]] = []
        self._neg_density = np.zeros(0)
        self._keys = np.zeros(0)
        self._cum = np.zeros(1)

    def reset(self) -> None:
        self.size = 0
        self._closed = 0
        self._parts = []
        self._neg_density = np.zeros(0)
        self._keys = np.zeros(0)
        self._cum = np.zeros(1)

    def _fold_window(
        self, values: np.ndarray, weights: np.ndarray, tie_keys: np.ndarray
    ) -> None:
        neg_density = -(values / weights)
        order = np.lexsort((tie_keys, neg_density))
        mass = np.cumsum(weights[order])
        before = np.concatenate(([0.0], mass[:-1]))
        added = np.minimum(mass, self.cap) - np.minimum(before, self.cap)
        # entries past the cap add nothing
        keep = added > 0.0
        self._parts.append(
            (neg_density[order][keep], tie_keys[order][keep], added[keep])
        )

    def _merge(self) -> None:
        neg_density = np.concatenate([p[0] for p in self._parts])
        keys = np.concatenate([p[1] for p in self._parts])
        added = np.concatenate([p[2] for p in self._parts])
        order = np.lexsort((keys, neg_density))
        self._neg_density = neg_density[order]
        self._keys = keys[order]
        self._cum = np.concatenate(([0.0], np.cumsum(added[order])))

    def _closed_mass_ahead(self, neg_density: float, key: float) -> float:
        lo = int(np.searchsorted(self._neg_density, neg_density, side="left"))
        hi = int(np.searchsorted(self._neg_density, neg_density, side="right"))
        pos = lo + int(np.searchsorted(self._keys[lo:hi], key, side="right"))
        return float(self._cum[pos])

    def fraction(
        self,
        values: np.ndarray,
        weights: np.ndarray,
        tie_keys: np.ndarray,
        t: int,
        budget: float,
    ) -> float:
        """
        Fraction of entry t given the first t entries of the buffers.

        Calls are expected for t = 1, 2, ...; any other t rebuilds the index.
        """
        if t - 1 != self.size:
            self.reset()
        window = (t - 1) // self.ell
        if window > self._closed:
            for w in range(self._closed, window):
                s = slice(w * self.ell, (w + 1) * self.ell)
                self._fold_window(values[s], weights[s], tie_keys[s])
            self._closed = window
            self._merge()
        self.size = t

        w_t = float(weights[t - 1])
        d_t = values[t - 1] / weights[t - 1]
        key_t = tie_keys[t - 1]
        start = window * self.ell
        d = values[start : t - 1] / weights[start : t - 1]
        ahead = (d > d_t) | ((d == d_t) & (tie_keys[start : t - 1] <= key_t))
        open_mass = float(weights[start : t - 1][ahead].sum())

        used = self._closed_mass_ahead(-d_t, key_t) + min(open_mass, self.cap)
        window_room = max(0.0, self.cap - open_mass)
        amount = min(w_t, window_room, max(0.0, budget - used))
        return amount / w_t


def tentative_indicators(sol: FractionalSolution, t: int) -> Tuple[bool, bool]:
    x_t = sol.fraction(t)
    return x_t > FRACTION_TOL, x_t >= 1.0 - FRACTION_TOL
