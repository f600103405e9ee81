#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .generator import GeneratorSpec, generate, KINDS, GOLDEN  # noqa: F401
from .fileio import read_pointset, write_pointset, atomic_write, FORMAT_TAG  # noqa: F401
