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
from concurrent.futures import ProcessPoolExecutor as PoolExecutor
from concurrent.futures import as_completed
from typing import Any, Callable, Dict, Optional

from gymnasium.vector.utils import CloudpickleWrapper
from tqdm.rich import tqdm

from openbaro.arena.games.base_game import BaseGame


class BaseArena(ABC):
    """
    Plays ``total_trials`` games with seeds seed, seed + 1, ... either in a process
    pool or serially. Subclasses collect results in ``_deal_result`` and must not
    depend on completion order.
    """

    def __init__(self, spec_fn: Callable, use_tqdm: bool = True):
        self.spec_fn = spec_fn
        self.pbar = None
        self.total_trials = None
        self.max_trials_onetime = None
        self.game: Optional[BaseGame] = None
        self.seed = None
        self.use_tqdm = use_tqdm

    def reset(self, total_trials: int, max_trials_onetime: int = 5, seed: int = 0):
        assert total_trials >= 1, "at least one trial is required"
        self.seed = seed
        if self.pbar:
            self.pbar.refresh()
            self.pbar.close()
        if self.use_tqdm:
            self.pbar = tqdm(total=total_trials, desc="Trials")
        self.total_trials = total_trials
        self.max_trials_onetime = max_trials_onetime
        assert isinstance(self.game, BaseGame)

    def close(self):
        if self.pbar:
            self.pbar.refresh()
            self.pbar.close()
            self.pbar = None

    def _run_parallel(self):
        with PoolExecutor(
            max_workers=min(self.max_trials_onetime, self.total_trials)
        ) as executor:
            futures = [
                executor.submit(
                    self.game.run,
                    self.seed + trial_index,
                    CloudpickleWrapper(self.spec_fn),
                )
                for trial_index in range(self.total_trials)
            ]
            for future in as_completed(futures):
                self._deal_result(future.result())
                if self.pbar:
                    self.pbar.update(1)

    def _run_serial(self):
        for trial_index in range(self.total_trials):
            result = self.game.run(self.seed + trial_index, self.spec_fn)
            self._deal_result(result)
            if self.pbar:
                self.pbar.update(1)

    def run(self, parallel: bool = True) -> Dict[str, Any]:
        assert self.seed is not None, "Please call reset() to set seed first."
        if parallel and self.max_trials_onetime > 1 and self.total_trials > 1:
            self._run_parallel()
        else:
            self._run_serial()
        return self._get_final_result()

    @abstractmethod
    def _deal_result(self, result: Any):
        pass

    @abstractmethod
    def _get_final_result(self) -> Dict[str, Any]:
        raise NotImplementedError
