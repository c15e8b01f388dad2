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
import math
import re
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Dict, List, Optional, Union

from jsonargparse import ArgumentParser, Namespace

from openbaro.configs.utils import ProcessConfigAction, load_config_file
from openbaro.core.errors import InvalidParameterError
from openbaro.core.params import AlgoConstants, ModelParams, cover_front, cover_scattered

PATTERN_KWARGS = {
    "random": ("value_low", "value_high", "weight_low"),
    "too_many": (),
    "too_few": ("eps",),
    "kleinberg_killer": ("hi", "lo_max"),
    "density_topper": ("eta", "history_only", "value_low", "value_high", "weight_low"),
}


def create_config_parser():
    """
    The configuration parser.
    """
    parser = ArgumentParser(description="openbaro")
    parser.add_argument("--config", action=ProcessConfigAction)
    # model
    parser.add_argument("--n", type=int, default=2000, help="Horizon.")
    parser.add_argument("--k", type=float, default=80.0, help="Knapsack size.")
    parser.add_argument(
        "--ell", type=Optional[int], default=None, help="Window size, ceil(n ln k / k) if unset."
    )
    parser.add_argument("--gamma", type=int, default=0, help="Number of adversarial windows.")
    parser.add_argument(
        "--cover",
        type=str,
        default="front",
        choices=["front", "scattered"],
        help="Placement of the adversarial windows.",
    )
    parser.add_argument(
        "--cover_windows",
        type=Optional[List[int]],
        default=None,
        help="Explicit adversarial window indices, overrides --cover.",
    )
    # adversary
    parser.add_argument("--pattern", type=str, default="random", help="Adversary pattern.")
    parser.add_argument("--eps", type=float, default=0.01)
    parser.add_argument("--hi", type=float, default=100.0)
    parser.add_argument("--lo_max", type=float, default=1.0)
    parser.add_argument("--eta", type=float, default=0.05)
    parser.add_argument("--history_only", type=bool, default=False)
    parser.add_argument("--value_low", type=float, default=0.0)
    parser.add_argument("--value_high", type=float, default=1.0)
    parser.add_argument("--weight_low", type=float, default=0.0)
    # algorithm
    parser.add_argument(
        "--algorithm", type=str, default="baro", choices=["baro", "primal", "topk"]
    )
    parser.add_argument(
        "--profile", type=str, default="practical", choices=["paper", "practical"]
    )
    parser.add_argument("--a1", type=Optional[float], default=None)
    parser.add_argument("--a4", type=Optional[float], default=None)
    parser.add_argument("--scale_budget", type=bool, default=True)
    parser.add_argument(
        "--strict", type=bool, default=False, help="Fail outside the analysed regime."
    )
    # execution
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--base_seed", type=int, default=0)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--out", type=str, default="results")
    parser.add_argument("--project", type=str, default="openbaro")
    parser.add_argument("--exp_name", type=str, default="experiment")
    parser.add_argument("--write_traces", type=bool, default=True)
    parser.add_argument("--grid", type=Optional[dict], default=None, help="Sweep grid.")
    return parser


def parse_gamma(value: Union[int, str], k: float) -> int:
    """Grid entries for gamma: an integer, "sqrt_k" or a multiple like "2*sqrt_k"."""
    if isinstance(value, int):
        return value
    match = re.fullmatch(r"(?:([0-9]*\.?[0-9]+)\*?)?sqrt_k", str(value).strip())
    if match is None:
        raise InvalidParameterError(f"cannot read gamma from {value!r}")
    factor = float(match.group(1)) if match.group(1) else 1.0
    return int(math.ceil(factor * math.sqrt(k)))


@dataclass(frozen=True)
class ExperimentConfig:
    n: int = 2000
    k: float = 80.0
    ell: Optional[int] = None
    gamma: int = 0
    cover: str = "front"
    cover_windows: Optional[List[int]] = None
    pattern: str = "random"
    eps: float = 0.01
    hi: float = 100.0
    lo_max: float = 1.0
    eta: float = 0.05
    history_only: bool = False
    value_low: float = 0.0
    value_high: float = 1.0
    weight_low: float = 0.0
    algorithm: str = "baro"
    profile: str = "practical"
    a1: Optional[float] = None
    a4: Optional[float] = None
    scale_budget: bool = True
    strict: bool = False
    trials: int = 10
    base_seed: int = 0
    threads: int = 1
    out: str = "results"
    project: str = "openbaro"
    exp_name: str = "experiment"
    write_traces: bool = True
    grid: Optional[Dict[str, Any]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidParameterError(f"trials must be at least 1, got {self.trials}")
        if self.pattern not in PATTERN_KWARGS:
            raise InvalidParameterError(f"adversary pattern {self.pattern} not found")

    @classmethod
    def from_namespace(cls, cfg: Namespace) -> "ExperimentConfig":
        values = cfg.as_dict() if hasattr(cfg, "as_dict") else dict(vars(cfg))
        names = set(cls.__dataclass_fields__)
        return cls(**{key: value for key, value in values.items() if key in names})

    def override(self, **kwargs) -> "ExperimentConfig":
        return replace(self, **{key: value for key, value in kwargs.items() if value is not None})

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def model_params(self) -> ModelParams:
        ell = ModelParams(n=self.n, k=self.k, ell=self.ell).ell
        if self.cover_windows is not None:
            cover = frozenset(self.cover_windows)
        elif self.cover == "scattered":
            cover = cover_scattered(self.n, ell, self.gamma)
        else:
            cover = cover_front(self.n, ell, self.gamma)
        return ModelParams(n=self.n, k=self.k, ell=ell, gamma=self.gamma, adv_cover=cover)

    def constants(self) -> AlgoConstants:
        base = AlgoConstants.from_profile(self.profile, scale_budget=self.scale_budget)
        a1 = base.a1 if self.a1 is None else self.a1
        a4 = base.a4 if self.a4 is None else self.a4
        return AlgoConstants(a1=a1, a4=a4, scale_budget=self.scale_budget)

    def pattern_kwargs(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in PATTERN_KWARGS[self.pattern]}


def load_experiment_config(path: Optional[str] = None, args: Optional[List[str]] = None) -> ExperimentConfig:
    """Parse a config file (and optional extra flags) into an ExperimentConfig."""
    if path is not None:
        # schema problems surface here with their line numbers
        load_config_file(path)
    parser = create_config_parser()
    argv = [] if path is None else ["--config", str(path)]
    cfg = parser.parse_args(argv + list(args or []))
    return ExperimentConfig.from_namespace(cfg)
