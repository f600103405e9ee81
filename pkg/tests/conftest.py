#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    conftest.py for equidist.

    Fixtures shared across test modules go here; the module-level ones
    live next to their tests.
"""

# import pytest
