#!/usr/bin/env python
# -*- coding: utf-8 -*-

""" Tests report formatting """

# Standard imports
import json
import logging
import os

# Third party imports
import numpy as np

# Application imports
from equidist.cli.output import (CSV_COLUMNS, REPORT_FORMAT, Row, format_csv,
                                 format_float, format_json, write_report)

logger = logging.getLogger(__name__)


def test_format_float():
    assert format_float(None) == ""
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(np.float64(2.0)) == "2"
    assert float(format_float(1.0 / 3.0)) == 1.0 / 3.0

# end test_format_float()


def test_format_csv():
    rows = [Row(kind="lattice", n_points=4, t=0.5, method="spectral", value=1.25,
                excess=0.25, error_bound=1e-12, wall_time_ns=7),
            Row(kind="lattice", n_points=4, t=None, method="arc", value=0.25)]
    lines = format_csv(rows).splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "lattice,4,0.5,spectral,1.25,0.25,9.9999999999999998e-13,7"
    assert lines[2] == "lattice,4,,arc,0.25,0,0,0"

# end test_format_csv()


def test_format_json():
    """ Keys are sorted and numpy values converted """

    text = format_json({"b": np.float64(1.5), "a": [np.int64(2), float("inf")],
                        "nested": {"z": True, "y": None}})
    document = json.loads(text)
    assert document == {"a": [2, "inf"], "b": 1.5, "format": REPORT_FORMAT,
                        "nested": {"y": None, "z": True}}
    assert list(document) == sorted(document)
    assert text.endswith("\n")

# end test_format_json()


def test_write_report(tmp_path):
    directory = str(tmp_path / "reports")
    csv_path, json_path = write_report(directory, "energy",
                                       [Row("k", 1, 0.1, "direct", 1.0)],
                                       {"results": []})
    assert os.path.basename(csv_path) == "energy.csv"
    assert os.path.basename(json_path) == "energy.json"
    assert sorted(os.listdir(directory)) == ["energy.csv", "energy.json"]

# end test_write_report()
