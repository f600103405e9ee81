#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Plain-text point-set files.

Layout::

    # equidist-pointset v1 space=circle d=1 n=3 rng=PCG64
    0.61803398874989479
    0.23606797749978958
    0.85410196624968438

One point per line, coordinates separated by blanks, 17 significant
digits. The ``rng`` entry names the bit generator of the random kinds so
stored runs stay reproducible.
"""

# Standard imports
import logging
import os
import tempfile

# Third party imports
import numpy as np

# Application imports
from ..exception import InputError
from ..pointset import PointSet
from .generator import RNG_NAME

logger = logging.getLogger(__name__)

FORMAT_TAG = "equidist-pointset"
FORMAT_VERSION = "v1"


def atomic_write(path: str, text: str):
    """ Writes ``text`` to a temporary file next to ``path`` and renames it """

    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    handle, temp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="\n") as stream:
            stream.write(text)
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise


# end atomic_write()


def format_pointset(pts: PointSet) -> str:
    """ Serializes a point set to the text layout """

    header = (f"# {FORMAT_TAG} {FORMAT_VERSION} space={pts.space} "
              f"d={pts.dim} n={pts.n} rng={RNG_NAME}")
    rows = pts.values if pts.values.ndim == 2 else pts.values[:, None]
    lines = [header]
    lines.extend(" ".join(f"{value:.17g}" for value in row) for row in rows)
    return "\n".join(lines) + "\n"


# end format_pointset()


def write_pointset(pts: PointSet, path: str):
    """ Writes a point set atomically """

    atomic_write(path, format_pointset(pts))
    logger.info("Wrote %d %s points to %s", pts.n, pts.space, path)


# end write_pointset()


def _parse_header(line: str) -> dict:
    """ Returns the key=value fields of a header line """

    parts = line.lstrip("#").split()
    if len(parts) < 2 or parts[0] != FORMAT_TAG or parts[1] != FORMAT_VERSION:
        raise InputError(f"Not a {FORMAT_TAG} {FORMAT_VERSION} file")
    fields = {}
    for part in parts[2:]:
        key, sep, value = part.partition("=")
        if not sep:
            raise InputError(f"Malformed header entry {part!r}")
        fields[key] = value
    for key in ("space", "d", "n"):
        if key not in fields:
            raise InputError(f"Header misses {key!r}")
    return fields


# end _parse_header()


def read_pointset(path: str, label: str = "") -> PointSet:
    """ Reads a point set file.

    Args:
        path (str): File path.
        label (str): Label for the point set; defaults to the file name.

    Returns:
        The ``PointSet``.

    Raises:
        ``InputError`` when the file is unreadable or malformed.
    """

    try:
        with open(path, "r", encoding="utf-8") as stream:
            lines = [line.strip() for line in stream]
    except OSError as exc:
        raise InputError(f"Cannot read point set {path}: {exc}") from exc

    lines = [line for line in lines if line]
    if not lines:
        raise InputError(f"Empty point set file {path}")
    fields = _parse_header(lines[0])
    try:
        dim = int(fields["d"])
        count = int(fields["n"])
        rows = [[float(token) for token in line.split()] for line in lines[1:]]
    except ValueError as exc:
        raise InputError(f"Malformed number in {path}: {exc}") from exc

    if len(rows) != count:
        raise InputError(f"{path} announces {count} points but holds {len(rows)}")
    if any(len(row) != dim for row in rows):
        raise InputError(f"{path} has rows without {dim} coordinates")

    values = np.array(rows, dtype=float).reshape(count, dim)
    label = label or os.path.basename(path)
    space = fields["space"]
    try:
        if space == "circle":
            return PointSet(space="circle", values=values[:, 0], label=label)
        return PointSet(space=space, values=values, label=label)
    except ValueError as exc:
        raise InputError(f"Invalid points in {path}: {exc}") from exc


# end read_pointset()
