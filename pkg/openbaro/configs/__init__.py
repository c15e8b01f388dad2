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
from openbaro.configs.config import (
    ExperimentConfig,
    create_config_parser,
    load_experiment_config,
    parse_gamma,
)
from openbaro.configs.utils import (
    ConfigError,
    ProcessConfigAction,
    load_config_file,
    validate_data,
)

__all__ = [
    "ExperimentConfig",
    "create_config_parser",
    "load_experiment_config",
    "parse_gamma",
    "ConfigError",
    "ProcessConfigAction",
    "load_config_file",
    "validate_data",
]
