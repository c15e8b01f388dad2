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
import json
import re
import tempfile
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

import jsonschema
import yaml
from jinja2 import Environment, meta
from jsonargparse import ActionConfigFile

SCHEMA_DIR = Path(__file__).parent / "schema"
_GLOBALS_RE = r"^globals:\n((?:  [^\n]*\n)*)"


class ConfigError(ValueError):
    """Invalid configuration file; the message names the offending line."""


def load_schema(name: str) -> Dict[str, Any]:
    with open(SCHEMA_DIR / f"{name}.schema.json", "r", encoding="utf8") as file:
        return json.load(file)


def render_yaml(content: str) -> str:
    """Render the Jinja2 variables of a YAML config from its ``globals:`` section."""
    global_variables = {}
    globals_match = re.search(_GLOBALS_RE, content, re.MULTILINE)
    if globals_match:
        global_variables = yaml.safe_load("globals:\n" + globals_match.group(1)).get(
            "globals", {}
        )

    env = Environment()
    all_variables = meta.find_undeclared_variables(env.parse(content))
    undefined_variables = all_variables - set(global_variables.keys())
    if undefined_variables:
        error_messages = []
        for variable in sorted(undefined_variables):
            line_number = next(
                (
                    i + 1
                    for i, line in enumerate(content.splitlines())
                    if "{{ " + variable + " }}" in line
                ),
                "Unknown",
            )
            error_messages.append(
                f"line {line_number}: undefined global variable '{variable}'"
            )
        raise ConfigError("\n".join(error_messages))

    content_without_globals = re.sub(_GLOBALS_RE, "", content, flags=re.MULTILINE)
    return env.from_string(content_without_globals).render(global_variables)


def _locate(content: str, key: str) -> Optional[int]:
    patterns = [rf'"{re.escape(key)}"\s*:', rf"^\s*{re.escape(key)}\s*:"]
    for i, line in enumerate(content.splitlines()):
        if any(re.search(pattern, line) for pattern in patterns):
            return i + 1
    return None


def _error_key(error: jsonschema.ValidationError) -> Optional[str]:
    keys = [part for part in error.absolute_path if isinstance(part, str)]
    if keys:
        return keys[-1]
    match = re.search(r"'([^']+)' (?:was unexpected|is a required property)", error.message)
    return match.group(1) if match else None


def validate_data(data: Any, schema_name: str, content: str = "") -> None:
    """Validate against a bundled schema, raising ConfigError anchored at a line."""
    validator = jsonschema.Draft7Validator(load_schema(schema_name))
    errors = sorted(validator.iter_errors(data), key=lambda e: list(map(str, e.absolute_path)))
    if not errors:
        return
    messages = []
    for error in errors:
        key = _error_key(error)
        line = _locate(content, key) if key is not None else None
        where = f"line {line}" if line is not None else "line ?"
        field = f" ({key})" if key is not None else ""
        messages.append(f"{where}{field}: {error.message}")
    raise ConfigError("\n".join(messages))


def parse_config_text(content: str, suffix: str) -> Tuple[Dict[str, Any], str]:
    """Parse JSON or YAML text; returns the data and the text the lines refer to."""
    if suffix in (".yaml", ".yml"):
        content = render_yaml(content)
        try:
            data = yaml.safe_load(content)
        except yaml.YAMLError as e:
            mark = getattr(e, "problem_mark", None)
            line = mark.line + 1 if mark is not None else "?"
            raise ConfigError(f"line {line}: {e}")
    elif suffix == ".json":
        try:
            data = json.loads(content)
        except json.JSONDecodeError as e:
            raise ConfigError(f"line {e.lineno}: {e.msg}")
    else:
        raise ConfigError(f"unsupported config format '{suffix}', use .json or .yaml")
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("line 1: the config must be a mapping")
    return data, content


def load_config_file(
    path: Union[str, Path], schema_name: str = "experiment"
) -> Dict[str, Any]:
    """Read, render and validate a config file. OSError propagates."""
    path = Path(path)
    content = path.read_text(encoding="utf8")
    data, rendered = parse_config_text(content, path.suffix.lower())
    validate_data(data, schema_name, rendered)
    return data


class ProcessConfigAction(ActionConfigFile):
    def __call__(self, parser, cfg, values, option_string=None):
        assert isinstance(values, (str, Path)), "config must be given as a file path"
        data = load_config_file(values)
        with tempfile.NamedTemporaryFile("w", delete=True, suffix=".yaml") as temp_file:
            yaml.dump(data, temp_file)
            temp_file.seek(0)
            super().__call__(parser, cfg, temp_file.name, option_string)
