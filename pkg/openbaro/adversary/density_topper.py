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
from openbaro.adversary.base_adversary import AdversaryView, BaseAdversary
from openbaro.core.errors import InvalidParameterError
from openbaro.core.items import Item


class DensityTopperAdversary(BaseAdversary):
    """
    At every adversarial time emit a unit-weight item slightly denser than the
    densest random-order item that has arrived so far. Before any random-order
    arrival the emitted value is eta.
    """

    adaptive = True

    def __init__(self, eta: float = 0.05, history_only: bool = False):
        super().__init__(history_only=history_only)
        if not eta > 0:
            raise InvalidParameterError(f"eta must be positive, got {eta}")
        self.eta = eta

    def emit(self, view: AdversaryView) -> Item:
        if view.ro_max_density <= 0:
            return Item(value=self.eta, weight=1.0)
        return Item(value=(1.0 + self.eta) * view.ro_max_density, weight=1.0)
