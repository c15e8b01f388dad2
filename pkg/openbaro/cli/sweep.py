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
import itertools
import logging
from dataclasses import replace
from typing import Any, List, Optional, Tuple

from openbaro.cli.run_experiment import (
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    load_config,
    run_trials,
)
from openbaro.configs import ExperimentConfig, parse_gamma
from openbaro.diagnostics import competitive_ratio, headline_curve
from openbaro.utils.file_tool import write_csv
from openbaro.utils.logger import Logger

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = (
    "k",
    "gamma",
    "pattern",
    "algorithm",
    "ratio_mean",
    "ratio_ci95",
    "trials",
    "seed",
)
GRID_KEYS = ("k", "gamma", "pattern", "algorithm")


def grid_points(config: ExperimentConfig) -> List[ExperimentConfig]:
    """
    Cross product of the grid in the order k, gamma, pattern, algorithm. Keys
    missing from the grid keep the value of the base config.
    """
    grid = config.grid or {}
    unknown = sorted(set(grid) - set(GRID_KEYS))
    if unknown:
        raise ValueError(f"unknown grid keys {unknown}, expected a subset of {list(GRID_KEYS)}")
    if not grid:
        return []
    axes = []
    for key in GRID_KEYS:
        values = grid.get(key, [getattr(config, key)])
        if not isinstance(values, list):
            values = [values]
        axes.append(values)

    points = []
    for k, gamma, pattern, algorithm in itertools.product(*axes):
        k = float(k)
        point = replace(
            config,
            k=k,
            gamma=parse_gamma(gamma, k),
            pattern=pattern,
            algorithm=algorithm,
            grid=None,
        )
        if "gamma" in grid:
            point = replace(point, cover_windows=None)
        points.append(point)
    return points


def sweep_row(point: ExperimentConfig, use_tqdm: bool = False) -> Tuple[Any, ...]:
    result = run_trials(point, use_tqdm=use_tqdm)
    report = competitive_ratio(result.traces, result.pool, result.params.k)
    logger.info(
        f"k={point.k} gamma={point.gamma} pattern={point.pattern} "
        f"algorithm={point.algorithm}: ratio {report.ratio_mean} "
        f"(headline {headline_curve(result.params):.4f})"
    )
    return (
        point.k,
        point.gamma,
        point.pattern,
        point.algorithm,
        report.ratio_mean,
        report.ratio_ci95,
        report.trials,
        point.base_seed,
    )


def cmd_sweep(
    config_path: str,
    out: Optional[str] = None,
    threads: Optional[int] = None,
    profile: Optional[str] = None,
    seed: Optional[int] = None,
    use_tqdm: bool = False,
) -> int:
    config, code = load_config(
        config_path, out=out, threads=threads, profile=profile, base_seed=seed
    )
    if config is None:
        return code
    try:
        points = grid_points(config)
    except ValueError as e:
        logger.error(f"invalid grid: {e}")
        return EXIT_USAGE
    if not points:
        logger.error("the sweep grid is empty")
        return EXIT_USAGE
    try:
        run_logger = Logger(
            project_name=config.project,
            scenario_name="sweep",
            exp_name=config.exp_name,
            log_path=config.out,
        )
    except OSError as e:
        logger.error(f"cannot create the run directory under {config.out}: {e}")
        return EXIT_IO
    try:
        rows: List[Tuple[Any, ...]] = []
        for point in points:
            try:
                rows.append(sweep_row(point, use_tqdm=use_tqdm))
            except ValueError as e:
                logger.error(f"cannot run grid point k={point.k} gamma={point.gamma}: {e}")
                return EXIT_USAGE
        try:
            path = write_csv(run_logger.run_dir / "sweep.csv", SWEEP_COLUMNS, rows)
        except OSError as e:
            logger.error(f"cannot write the sweep report: {e}")
            return EXIT_IO
        logger.info(f"{len(rows)} grid points written to {path}")
        return EXIT_OK
    finally:
        run_logger.close()
