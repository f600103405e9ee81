#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Setup file for equidist.
    Use setup.cfg to configure your project.
"""
from setuptools import setup


if __name__ == "__main__":
    setup()
