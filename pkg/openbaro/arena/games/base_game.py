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
from typing import Any, Callable, Dict, Optional

import numpy as np
from gymnasium.utils import seeding


class BaseGame(ABC):
    _np_random: Optional[np.random.Generator] = None

    def __init__(self):
        self.seed = None

    def reset(self, seed: int):
        self.seed = seed
        self._np_random, seed = seeding.np_random(seed)

    def run(self, seed: int, spec_fn: Callable) -> Dict[str, Any]:
        self.reset(seed=seed)
        return self._run(spec_fn)

    @abstractmethod
    def _run(self, spec_fn: Callable) -> Dict[str, Any]:
        raise NotImplementedError
