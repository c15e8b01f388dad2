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
from typing import Dict, List, Type

from openbaro.algorithms.base_algorithm import (
    TRACE_COLUMNS,
    AlgoState,
    BaseOnlineAlgorithm,
    StepRecord,
    Trace,
    trace_rows,
    verify_trace,
)
from openbaro.algorithms.baro import (
    BaroAlgorithm,
    PrimalAlgorithm,
    run,
    run_baseline_primal,
    step,
)
from openbaro.algorithms.topk_filter import TopKFilterAlgorithm, run_baseline_topk_filter

algorithm_dict: Dict[str, Type[BaseOnlineAlgorithm]] = {
    "baro": BaroAlgorithm,
    "primal": PrimalAlgorithm,
    "topk": TopKFilterAlgorithm,
}


class AlgorithmFactory:
    def __init__(self):
        pass

    @staticmethod
    def register_algorithm(name: str, algorithm: Type[BaseOnlineAlgorithm]):
        algorithm_dict[name] = algorithm

    @staticmethod
    def get_algorithm(name: str) -> Type[BaseOnlineAlgorithm]:
        if name not in algorithm_dict:
            raise ValueError(f"algorithm {name} not found")
        return algorithm_dict[name]

    @staticmethod
    def algorithms() -> List[str]:
        return list(algorithm_dict)


__all__ = [
    "AlgoState",
    "StepRecord",
    "Trace",
    "TRACE_COLUMNS",
    "trace_rows",
    "verify_trace",
    "BaseOnlineAlgorithm",
    "BaroAlgorithm",
    "PrimalAlgorithm",
    "TopKFilterAlgorithm",
    "AlgorithmFactory",
    "step",
    "run",
    "run_baseline_primal",
    "run_baseline_topk_filter",
]
