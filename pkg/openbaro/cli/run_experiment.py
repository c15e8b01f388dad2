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
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from gymnasium.utils import seeding

from openbaro.adversary import AdversaryFactory, BaseAdversary
from openbaro.algorithms import TRACE_COLUMNS, Trace, trace_rows, verify_trace
from openbaro.arena import TrialSpec, make_arena
from openbaro.configs import ConfigError, ExperimentConfig, load_experiment_config, validate_data
from openbaro.core import (
    AlgoConstants,
    Item,
    ModelParams,
    check_regime,
    opt_ro,
    sort_pool,
    weighted_ranks,
)
from openbaro.diagnostics import (
    competitive_ratio,
    headline_curve,
    occupation_profile,
    rank_profile,
)
from openbaro.utils.file_tool import write_csv, write_json
from openbaro.utils.logger import Logger
from openbaro.utils.util import to_builtin

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ACCEPTANCE = 1
EXIT_USAGE = 2
EXIT_IO = 3

TRIAL_COLUMNS = (
    "trial",
    "seed",
    "ro_value",
    "ratio",
    "total_occupation",
    "picks",
    "ro_picks",
    "blocked_main",
    "blocked_outer",
)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    params: ModelParams
    constants: AlgoConstants
    pool: Tuple[Item, ...]
    seeds: List[int]
    traces: List[Trace]
    regime_warnings: List[str]

    @property
    def opt_ro(self) -> float:
        return opt_ro(self.pool, self.params.k).total_value


def prepare_experiment(
    config: ExperimentConfig,
) -> Tuple[ModelParams, AlgoConstants, List[Item], BaseAdversary, List[str]]:
    """
    Model, constants, pool and adversary of an experiment. The pool and any random
    adversarial items are drawn once from base_seed.
    """
    params = config.model_params()
    regime_warnings = check_regime(params, strict=config.strict)
    np_random, _ = seeding.np_random(config.base_seed)
    builder = AdversaryFactory.get_pattern(config.pattern)
    pool, strategy = builder(params, np_random, **config.pattern_kwargs())
    return params, config.constants(), pool, strategy, regime_warnings


def run_trials(config: ExperimentConfig, use_tqdm: bool = True) -> ExperimentResult:
    params, constants, pool, strategy, regime_warnings = prepare_experiment(config)
    spec = TrialSpec(
        pool=tuple(pool),
        params=params,
        strategy=strategy,
        algorithm=config.algorithm,
        constants=constants,
        verify=False,
    )
    arena = make_arena(spec, use_tqdm=use_tqdm)
    arena.reset(
        total_trials=config.trials,
        max_trials_onetime=config.threads,
        seed=config.base_seed,
    )
    try:
        outcome = arena.run(parallel=config.threads > 1)
    finally:
        arena.close()
    return ExperimentResult(
        config=config,
        params=params,
        constants=constants,
        pool=tuple(pool),
        seeds=outcome["seeds"],
        traces=outcome["traces"],
        regime_warnings=regime_warnings,
    )


def check_invariants(traces: Sequence[Trace]) -> bool:
    ok = True
    for trace in traces:
        try:
            verify_trace(trace)
        except AssertionError as e:
            logger.error(f"trace with seed {trace.seed} violates an invariant: {e}")
            ok = False
    return ok


def trial_rows(result: ExperimentResult) -> List[Tuple[Any, ...]]:
    opt = result.opt_ro
    rows = []
    for index, (seed, trace) in enumerate(zip(result.seeds, result.traces)):
        records = trace.records
        rows.append(
            (
                index,
                seed,
                trace.ro_value,
                trace.ro_value / opt if opt > 0 else None,
                trace.total_occupation,
                sum(r.picked for r in records),
                sum(r.picked and r.is_ro for r in records),
                sum(r.blocked_main for r in records),
                sum(r.blocked_outer for r in records),
            )
        )
    return rows


def summarize(result: ExperimentResult, invariants_ok: bool) -> Dict[str, Any]:
    params = result.params
    sorted_pool, _ = sort_pool(result.pool)
    summary = {
        "config": result.config.to_dict(),
        "trials": len(result.traces),
        "seeds": result.seeds,
        "invariants_ok": invariants_ok,
        "regime_warnings": result.regime_warnings,
        "headline": headline_curve(params),
        "ratio": competitive_ratio(result.traces, result.pool, params.k).to_dict(),
        "rank_profile": rank_profile(result.traces, weighted_ranks(sorted_pool, params.k)).to_dict(),
        "occupation": occupation_profile(result.traces).to_dict(),
    }
    summary = to_builtin(summary)
    validate_data(summary, "summary")
    return summary


def write_reports(
    result: ExperimentResult, summary: Dict[str, Any], run_dir: Path
) -> None:
    write_csv(run_dir / "trials.csv", TRIAL_COLUMNS, trial_rows(result))
    if result.config.write_traces:
        for index, trace in enumerate(result.traces):
            write_csv(
                run_dir / "traces" / f"trial_{index:04d}.csv",
                TRACE_COLUMNS,
                trace_rows(trace),
            )
    write_json(run_dir / "summary.json", summary)
    write_json(run_dir / "config.json", result.config.to_dict())


def load_config(
    config_path: Optional[str], **overrides
) -> Tuple[Optional[ExperimentConfig], int]:
    try:
        config = load_experiment_config(config_path)
        return config.override(**overrides), EXIT_OK
    except OSError as e:
        logger.error(f"cannot read config {config_path}: {e}")
        return None, EXIT_IO
    except ValueError as e:
        logger.error(f"invalid config {config_path}:\n{e}")
        return None, EXIT_USAGE


def cmd_run(
    config_path: str,
    out: Optional[str] = None,
    threads: Optional[int] = None,
    profile: Optional[str] = None,
    seed: Optional[int] = None,
    use_tqdm: bool = True,
) -> int:
    config, code = load_config(
        config_path, out=out, threads=threads, profile=profile, base_seed=seed
    )
    if config is None:
        return code
    try:
        run_logger = Logger(
            project_name=config.project,
            scenario_name=config.pattern,
            exp_name=config.exp_name,
            log_path=config.out,
        )
    except OSError as e:
        logger.error(f"cannot create the run directory under {config.out}: {e}")
        return EXIT_IO
    try:
        try:
            result = run_trials(config, use_tqdm=use_tqdm)
        except (ConfigError, ValueError) as e:
            logger.error(f"cannot run the experiment: {e}")
            return EXIT_USAGE
        invariants_ok = check_invariants(result.traces)
        summary = summarize(result, invariants_ok)
        run_logger.log_info(summary["ratio"])
        try:
            write_reports(result, summary, run_logger.run_dir)
        except OSError as e:
            logger.error(f"cannot write reports to {run_logger.run_dir}: {e}")
            return EXIT_IO
        logger.info(f"reports written to {run_logger.run_dir}")
        return EXIT_OK if invariants_ok else EXIT_ACCEPTANCE
    finally:
        run_logger.close()
