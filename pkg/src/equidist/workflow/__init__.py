#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .workflow import Workflow, WorkflowState, register  # noqa: F401
from .task import Task, TaskStatus  # noqa: F401
from .blueprint import BluePrint  # noqa: F401
from .exception import WorkflowError  # noqa: F401
