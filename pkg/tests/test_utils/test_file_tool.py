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
import os
import sys

import numpy as np
import pytest

from openbaro.utils.file_tool import write_csv, write_json
from openbaro.utils.logger import Logger
from openbaro.utils.util import format_number, get_system_info, to_builtin


@pytest.mark.unittest
@pytest.mark.parametrize(
    "value, text",
    [
        (None, ""),
        (True, "1"),
        (np.bool_(False), "0"),
        (3, "3"),
        (np.int64(7), "7"),
        (0.1, "0.1"),
        (np.float64(1 / 3), repr(1 / 3)),
        (2.0, "2.0"),
        ("baro", "baro"),
    ],
)
def test_format_number(value, text):
    assert format_number(value) == text


@pytest.mark.unittest
def test_to_builtin():
    data = {"a": np.arange(3), "b": (np.float32(0.5), np.inf), 1: np.bool_(True)}
    assert to_builtin(data) == {"a": [0, 1, 2], "b": [0.5, None], "1": True}


@pytest.mark.unittest
def test_write_csv(tmp_path):
    path = write_csv(tmp_path / "nested" / "rows.csv", ("t", "picked", "rank"), [(1, True, None), (2, False, 0.25)])
    assert path.read_text() == "t,picked,rank\n1,1,\n2,0,0.25\n"
    with pytest.raises(AssertionError):
        write_csv(tmp_path / "bad.csv", ("t",), [(1, 2)])


@pytest.mark.unittest
def test_write_json_is_sorted_and_strict(tmp_path):
    path = write_json(tmp_path / "summary.json", {"b": np.float64(1.5), "a": [np.nan]})
    assert json.loads(path.read_text()) == {"a": [None], "b": 1.5}
    assert path.read_text().index('"a"') < path.read_text().index('"b"')


@pytest.mark.unittest
def test_logger_numbers_runs(tmp_path):
    first = Logger("proj", "random", "exp", log_path=str(tmp_path), log_to_terminal=False)
    first.info("first run")
    first.close()
    second = Logger("proj", "random", "exp", log_path=str(tmp_path), log_to_terminal=False)
    second.close()
    assert first.run_dir == tmp_path / "proj" / "random" / "exp" / "run1"
    assert second.run_dir.name == "run2"
    assert "first run" in (first.run_dir / "log.txt").read_text()


@pytest.mark.unittest
def test_logger_without_path():
    logger = Logger("proj", "random", "exp", log_path=None, log_to_terminal=False)
    assert logger.run_dir is None
    logger.log_info({"ratio_mean": 0.9, "ratio_ci95": None, "seeds": [1, 2]})
    logger.close()


@pytest.mark.unittest
def test_system_info():
    info = get_system_info()
    assert {"OS", "Python", "OpenBARO", "Numpy", "Scipy", "Gymnasium"} <= set(info)


if __name__ == "__main__":
    sys.exit(pytest.main(["-sv", os.path.basename(__file__)]))
