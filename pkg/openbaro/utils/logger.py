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
import os
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np
from rich.logging import RichHandler


class Logger:
    """
    Sets up the run directory <log_path>/<project>/<scenario>/<exp_name>/runN and
    routes the root logger to the terminal (rich) and to run_dir/log.txt.
    """

    def __init__(
        self,
        project_name: str,
        scenario_name: str,
        exp_name: str,
        log_path: Optional[str] = None,
        use_rich_handler: bool = True,
        log_level: int = logging.INFO,
        log_to_terminal: bool = True,
    ) -> None:
        self.project_name = project_name
        self.scenario_name = scenario_name
        self.exp_name = exp_name
        self.log_path = log_path
        self.use_rich_handler = use_rich_handler
        self.log_level = log_level
        self.log_to_terminal = log_to_terminal
        self._file_handler: Optional[logging.FileHandler] = None
        self._init()

    @staticmethod
    def _next_run(run_dir: Path) -> Path:
        existing = [
            int(folder.name[len("run") :])
            for folder in run_dir.iterdir()
            if folder.name.startswith("run") and folder.name[len("run") :].isdigit()
        ]
        return run_dir / ("run%i" % (max(existing, default=0) + 1))

    def _init(self) -> None:
        if self.log_path is None:
            run_dir = None
        else:
            run_dir = Path(self.log_path) / self.project_name / self.scenario_name / self.exp_name
            run_dir.mkdir(parents=True, exist_ok=True)
            run_dir = self._next_run(run_dir)
            run_dir.mkdir(parents=True, exist_ok=True)

        handlers = []
        if self.use_rich_handler and self.log_to_terminal:
            handlers.append(RichHandler())
        if run_dir is not None:
            self._file_handler = logging.FileHandler(os.path.join(run_dir, "log.txt"))
            handlers.append(self._file_handler)

        for handler in logging.root.handlers[:]:
            logging.root.removeHandler(handler)

        logging.basicConfig(
            level=self.log_level,
            format="%(asctime)s [%(levelname)s] %(message)s",
            handlers=handlers or None,
        )
        self.run_dir = run_dir

    def close(self) -> None:
        if self._file_handler is not None:
            logging.root.removeHandler(self._file_handler)
            self._file_handler.close()
            self._file_handler = None

    def info(self, msg: str) -> None:
        logging.info(msg)

    def log_info(self, infos: Dict[str, Any], step: Optional[int] = None) -> None:
        logging_info_str = "\n" if step is None else f"step {step}\n"
        for k, v in infos.items():
            if v is None:
                continue
            if not isinstance(v, (int, float, str)):
                v = np.mean(v)
            logging_info_str += f"\t{k}: {v}\n"
        logging.info(logging_info_str)
