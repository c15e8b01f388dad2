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
import logging
from typing import Dict, List, Optional, Tuple

from openbaro.cli.run_experiment import EXIT_ACCEPTANCE, EXIT_OK, EXIT_USAGE
from openbaro.diagnostics import OracleHistory, SuiteFactory

logger = logging.getLogger(__name__)

# cases per suite when --cases is not given
DEFAULT_CASES = {
    "lp-equivalence": 1000,
    "lemma-sat": 10000,
    "lemma-lbpick": 10000,
    "inequalities": 100000,
}
FALLBACK_CASES = 1000


def run_suites(
    suite: str, seed: Optional[int] = None, cases: Optional[int] = None
) -> Dict[str, OracleHistory]:
    """Run one named suite, or every registered suite for "all"."""
    names: List[str] = SuiteFactory.suites() if suite == "all" else [suite]
    suites = [(name, SuiteFactory.get_suite(name)) for name in names]
    histories = {}
    for name, suite_fn in suites:
        num_cases = cases if cases is not None else DEFAULT_CASES.get(name, FALLBACK_CASES)
        logger.info(f"running {name} with {num_cases} cases")
        histories[name] = suite_fn(num_cases, seed=seed)
    return histories


def cmd_verify(
    suite: str, seed: Optional[int] = None, cases: Optional[int] = None
) -> Tuple[int, Dict[str, Dict[str, int]]]:
    if cases is not None and cases < 1:
        logger.error(f"--cases must be at least 1, got {cases}")
        return EXIT_USAGE, {}
    try:
        histories = run_suites(suite, seed=seed, cases=cases)
    except ValueError as e:
        logger.error(str(e))
        return EXIT_USAGE, {}
    infos = {name: history.get_info() for name, history in histories.items()}
    for name, history in histories.items():
        for case in history.failures[:5]:
            logger.error(f"{name} failed on {case}")
    code = EXIT_OK if all(h.ok for h in histories.values()) else EXIT_ACCEPTANCE
    return code, infos
