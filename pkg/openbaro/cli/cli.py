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
from typing import Optional

import click
from click.core import Context, Option
from termcolor import colored

from openbaro import __AUTHOR__, __EMAIL__, __TITLE__, __VERSION__
from openbaro.utils.util import get_system_info


def red(text: str):
    return colored(text, "red")


def print_version(
    ctx: Context,
    param: Option,
    value: bool,
) -> None:
    if not value or ctx.resilient_parsing:
        return
    click.secho(f"{__TITLE__.upper()} version: {red(__VERSION__)}")
    click.secho(f"Developed by {__AUTHOR__}, Email: {red(__EMAIL__)}")
    ctx.exit()


def print_system_info(
    ctx: Context,
    param: Option,
    value: bool,
) -> None:
    if not value or ctx.resilient_parsing:
        return
    info_dict = get_system_info()
    for key, value in info_dict.items():
        click.secho(f"- {key}: {red(value)}")
    ctx.exit()


CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"])

out_option = click.option("--out", type=str, default=None, help="Output directory.")
threads_option = click.option(
    "--threads", type=click.IntRange(min=1), default=None, help="Worker processes."
)
profile_option = click.option(
    "--profile",
    type=click.Choice(["paper", "practical"]),
    default=None,
    help="Constants profile of the algorithm.",
)
seed_option = click.option("--seed", type=int, default=None, help="Base seed.")


@click.group(context_settings=CONTEXT_SETTINGS)
@click.option(
    "--version",
    is_flag=True,
    callback=print_version,
    expose_value=False,
    is_eager=True,
    help="Show package's version information.",
)
@click.option(
    "--system_info",
    is_flag=True,
    callback=print_system_info,
    expose_value=False,
    is_eager=True,
    help="Show system information.",
)
def run():
    """Simulate online knapsack under bursty adversaries."""


@run.command("run", context_settings=CONTEXT_SETTINGS)
@click.argument("config", type=str)
@out_option
@threads_option
@profile_option
@seed_option
@click.option("--no_progress", is_flag=True, default=False, help="Hide the progress bar.")
@click.pass_context
def run_command(
    ctx: Context,
    config: str,
    out: Optional[str],
    threads: Optional[int],
    profile: Optional[str],
    seed: Optional[int],
    no_progress: bool,
):
    """Run the trials of an experiment config and write its reports."""
    from openbaro.cli.run_experiment import cmd_run

    ctx.exit(
        cmd_run(
            config,
            out=out,
            threads=threads,
            profile=profile,
            seed=seed,
            use_tqdm=not no_progress,
        )
    )


@run.command("verify", context_settings=CONTEXT_SETTINGS)
@click.argument("suite", type=str)
@seed_option
@click.option("--cases", type=int, default=None, help="Number of cases per suite.")
@click.pass_context
def verify_command(ctx: Context, suite: str, seed: Optional[int], cases: Optional[int]):
    """Run a verification suite, or "all" of them."""
    from openbaro.cli.verify import cmd_verify

    code, infos = cmd_verify(suite, seed=seed, cases=cases)
    for name, info in infos.items():
        fail = red(str(info["fail"])) if info["fail"] else str(info["fail"])
        click.secho(
            f"{name}: {info['cases']} cases, {info['pass']} pass "
            f"({info['vacuous']} vacuous), {info['flag']} flag, {fail} fail"
        )
    ctx.exit(code)


@run.command("sweep", context_settings=CONTEXT_SETTINGS)
@click.argument("config", type=str)
@out_option
@threads_option
@profile_option
@seed_option
@click.pass_context
def sweep_command(
    ctx: Context,
    config: str,
    out: Optional[str],
    threads: Optional[int],
    profile: Optional[str],
    seed: Optional[int],
):
    """Run every point of the config's grid and write sweep.csv."""
    from openbaro.cli.sweep import cmd_sweep

    ctx.exit(cmd_sweep(config, out=out, threads=threads, profile=profile, seed=seed))
