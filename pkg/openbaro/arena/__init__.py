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
from typing import Callable, Optional

from openbaro.arena.base_arena import BaseArena
from openbaro.arena.games.trial_game import TrialSpec
from openbaro.arena.trial_arena import TrialArena


def make_arena(
    spec: Optional[TrialSpec] = None,
    spec_fn: Optional[Callable[[], TrialSpec]] = None,
    use_tqdm: bool = True,
) -> TrialArena:
    """Arena over a fixed trial spec, or over a factory building it in each worker."""
    if spec_fn is None:
        assert spec is not None, "either spec or spec_fn must be provided"

        def spec_fn():
            return spec

    return TrialArena(spec_fn, use_tqdm=use_tqdm)


__all__ = ["BaseArena", "TrialArena", "TrialSpec", "make_arena"]
