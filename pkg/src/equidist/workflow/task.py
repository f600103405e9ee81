#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Task module.
"""

# Standard imports
from enum import Enum
import logging
import inspect
from typing import Callable

# Third party imports

# Application imports
from .util import get_callable_type, get_inner_func

logger = logging.getLogger(__name__)


class TaskStatus(Enum):
    """ Outcome of a task within one workflow run """

    PENDING = "pending"
    COMPLETED = "completed"
    FAILED = "failed"

# end class TaskStatus


class Task:
    """ Class that represents a task.

    It is a thin wrapper on top of an object that is Callable.
    Each workflow class has an instance of the ``BluePrint``, which
    defines all the stages and tasks and their order of execution.

    Tasks registered inside a class body are stored unbound. When a
    workflow runs, each task is bound to the running instance (or its
    class for classmethods) through ``bind``, which leaves the blueprint
    task untouched so other instances are not affected.
    """

    def __init__(self,
                 func: Callable,
                 name: str,
                 parent: object = None,
                 params: dict = None,
                 return_value: str = None,
                 can_fail: bool = False):
        """ Constructor """

        self._parent = parent
        self._func = func
        self._name = name
        self._params = params or {}
        self._return_value = return_value

        # Flag to indicate if this Task is allowed to fail
        self.can_fail = can_fail

    # end __init__()

    @property
    def name(self) -> str:
        return self._name

    @property
    def output_key(self) -> str:
        """ Context key receiving the return value """
        return self._return_value or self._name

    def bind(self, instance: object) -> "Task":
        """ Returns a copy bound to a workflow instance """

        kind = get_callable_type(self._func)
        if kind == "classmethod":
            parent = type(instance)
        elif kind == "method":
            parent = instance
        else:
            parent = None
        func = self._func if kind == "boundmethod" else get_inner_func(self._func)
        return Task(func, name=self._name, parent=parent, params=self._params,
                    return_value=self._return_value, can_fail=self.can_fail)

    # end bind()

    def run_task(self, context: dict = None):
        """ Runs the underlying function using the context """

        if context is None:
            context = {}
        result = self._run_func(func=self._func,
                                parent=self._parent,
                                params=self._params,
                                context=context)
        context[self.output_key] = result
        return result

    # end run_task()

    @staticmethod
    def _run_func(func: Callable,
                  parent: object = None,
                  params: dict = None,
                  context: dict = None):
        """ Runs the underlying function.

        It maps the params, a dictionary of parameter names to context
        keys, and gets the contents from the context before passing them
        into the function. Parameters that are not mapped are looked up
        under their own name.

        If the parent is not None, it is passed as the first argument, so
        whether the function is a method is decided by the caller.
        """

        # Set default values
        params = params or {}
        context = context or {}

        # Gets the arg list
        kwargs = {}
        signature = inspect.signature(func)
        func_arg_list = list(signature.parameters.keys())

        # To handle unbounded methods
        start_index = 0
        if parent is not None and func_arg_list:
            first_arg = func_arg_list[0]
            kwargs[first_arg] = parent
            start_index = 1

        # Handles the rest of the arguments
        for arg in func_arg_list[start_index:]:
            arg_in_context = params.get(arg, arg)
            if arg_in_context in context:
                kwargs[arg] = context[arg_in_context]
            elif signature.parameters[arg].default is inspect.Parameter.empty:
                kwargs[arg] = None

        # Calls the function
        logger.debug('Running task with parameters %s', sorted(kwargs))
        result = func(**kwargs)

        return result

    # end _run_func()

    def __repr__(self):
        return f"Task(name={self._name!r}, can_fail={self.can_fail})"

# end class Task
