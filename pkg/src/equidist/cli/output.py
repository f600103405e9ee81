#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Report files.

Every command writes ``<command>.csv`` with one row per evaluation and
``<command>.json`` with a summary. Floats carry 17 significant digits and
JSON keys are sorted, so identical runs give identical bytes (apart from
``wall_time_ns`` when wall times are recorded).
"""

# Standard imports
import csv
import io
import json
import logging
import math
import os
from typing import List, Optional

# Third party imports
import attr

# Application imports
from ..sequences.fileio import atomic_write

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("kind", "N", "t", "method", "value", "excess", "error_bound",
               "wall_time_ns")

REPORT_FORMAT = "equidist-report v1"


@attr.s(frozen=True)
class Row:
    """ One CSV row """

    kind = attr.ib(type=str)
    n_points = attr.ib(type=int)
    t = attr.ib(type=Optional[float])
    method = attr.ib(type=str)
    value = attr.ib(type=float)
    excess = attr.ib(type=float, default=0.0)
    error_bound = attr.ib(type=float, default=0.0)
    wall_time_ns = attr.ib(type=int, default=0)

# end class Row


def format_float(value: Optional[float]) -> str:
    """ Decimal with 17 significant digits; empty for ``None`` """

    if value is None:
        return ""
    return f"{float(value):.17g}"


# end format_float()


def format_csv(rows: List[Row]) -> str:
    """ CSV text with the fixed header """

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([row.kind, row.n_points, format_float(row.t), row.method,
                         format_float(row.value), format_float(row.excess),
                         format_float(row.error_bound), row.wall_time_ns])
    return buffer.getvalue()


# end format_csv()


def _jsonable(value):
    """ Converts numpy scalars and non-finite floats for JSON """

    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


# end _jsonable()


def format_json(summary: dict) -> str:
    """ Sorted, indented JSON with a trailing newline """

    document = dict(summary)
    document.setdefault("format", REPORT_FORMAT)
    return json.dumps(_jsonable(document), sort_keys=True, indent=2) + "\n"


# end format_json()


def write_report(directory: str, command: str, rows: List[Row], summary: dict):
    """ Writes ``<command>.csv`` and ``<command>.json`` atomically """

    csv_path = os.path.join(directory, f"{command}.csv")
    json_path = os.path.join(directory, f"{command}.json")
    atomic_write(csv_path, format_csv(rows))
    atomic_write(json_path, format_json(summary))
    logger.info("Wrote %d rows to %s and summary to %s", len(rows), csv_path, json_path)
    return csv_path, json_path


# end write_report()
