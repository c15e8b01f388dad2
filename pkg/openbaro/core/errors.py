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


class InvalidParameterError(ValueError):
    """Raised when a model, algorithm or checker parameter is out of range."""


class SizeLimitError(ValueError):
    """Raised when an exact reference computation is asked to handle too many entries."""


class ScheduleError(ValueError):
    """Raised when a schedule cannot be realized from a pool and an adversary strategy."""


class RegimeError(ValueError):
    """Raised in strict mode when parameters fall outside the analysed regime."""


class HypothesisUnmetError(ValueError):
    """Raised when an inequality checker is called outside the inequality's hypotheses."""


class QuadratureError(ValueError):
    """Raised when a numeric integral fails to reach the requested tolerance."""
