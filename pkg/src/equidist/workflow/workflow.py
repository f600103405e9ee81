#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Workflow module.

A workflow is a set of tasks that needs to be carried out.
It controls the order in which the tasks are to be executed.

Tasks are laid out in a linear series of stages. All the tasks within a
stage complete before any task of the next stage starts. Tasks flagged
``can_fail`` may fail without stopping the workflow; the failure is
logged and recorded in the task status.

The tasks and stages are stored in a ``BluePrint`` and each Workflow
class has an instance of the BluePrint.

Defining a workflow
===================

Extend ``Workflow``, declare ``stages`` and register methods with the
``register`` decorator::

    class Diagnostics(Workflow):

        stages = ["prepare", "evaluate"]

        @register(stage="prepare", return_value="points")
        def load(self, path):
            ...

Functions defined elsewhere can be attached with
``register(stage=..., workflow_cls=Diagnostics)``.

Passing parameters
==================

Each task reads its arguments from the shared context dictionary. The
``params`` mapping of a task renames arguments to context keys; the
return value is stored under ``return_value`` (or the task name). The
instance or class reference of methods is passed automatically.
"""

# Standard imports
from collections import defaultdict
from enum import Enum
import logging
import inspect
import uuid
import copy

# Third party imports

# Application imports
from .task import Task, TaskStatus
from .blueprint import BluePrint
from .exception import WorkflowError
from .util import (
    get_callable_name,
    get_callable_parent,
    get_inner_func,
    is_ordered_sublist,
)

logger = logging.getLogger(__name__)


def register(
    stage: str,
    name: str = None,
    params: dict = None,
    return_value: str = None,
    can_fail: bool = False,
    workflow_cls: "Workflow" = None,
):
    """ Decorator to register a function as a task into the workflow.

    This decorator can be used within the workflow class definition
    itself. It detects the class within which the function is defined
    and registers the function into the blueprint of the class.

    It does this in a deferred way by storing the blueprint into a
    module variable ``_blueprint_cache``, since the Workflow subclass does
    not exist yet. ``WorkflowMeta`` picks the cached blueprint up when it
    creates the class.

    If it is called outside the context of a Workflow class definition,
    then the parent workflow class needs to be provided.

    Args:
        stage (str): The stage to associate this task with.
        name (str): The name of this task. Uses the function name if not given.
        params: (dict): The input mapping to get values from context.
        return_value: (str): Location within context to store the return value.
        can_fail (bool): Whether the workflow continues if this task raises.
        workflow_cls (Workflow): The reference to the workflow class.

    Raises:
        ``WorkflowError`` if the target is not a workflow or the task name
        is taken.
    """

    def _inner_decorator(func):
        """ Inner decorator that takes in the function itself """

        taskname = name or get_callable_name(func)
        logger.debug("Registering %s in stage %s", taskname, stage)

        if workflow_cls:
            if hasattr(workflow_cls, "blueprint") and isinstance(
                workflow_cls.blueprint, BluePrint
            ):
                blueprint = workflow_cls.blueprint
            else:
                raise WorkflowError(
                    f"Trying to register to a non "
                    f"Workflow class ({workflow_cls})"
                )
        else:
            workflow_name, _ = get_callable_parent(func)
            if workflow_name:
                mod = inspect.getmodule(get_inner_func(func))
                cache = getattr(mod,
                                "_blueprint_cache",
                                defaultdict(BluePrint))
                mod._blueprint_cache = cache
                blueprint = cache[workflow_name]
            else:
                raise WorkflowError(f"Fail to register function {func}")

        if taskname in blueprint.tasknames:
            raise WorkflowError(f"Task {taskname} is already registered")

        # Creates the task and adds it into the blueprint
        task = Task(func,
                    name=taskname,
                    params=params,
                    return_value=return_value,
                    can_fail=can_fail)
        blueprint.add_task(stage=stage, taskname=taskname, task=task)

        return func

    return _inner_decorator

# end register()


class WorkflowState(Enum):
    """ The various states for a workflow """

    NEW = 1
    RUNNING = 2
    COMPLETED = 3
    FAILED = 4

# end class WorkflowState


class WorkflowMeta(type):
    """ Meta class for the Worflow """

    def __new__(cls, name, bases, attr):
        """ Constructor """

        workflow_class = type.__new__(cls, name, bases, attr)

        # Gets the stages either from attr or from the bases
        stages = attr.get("stages", None)
        if stages is None:
            for base in bases:
                stages = getattr(base, "stages", None)
                if stages is not None:
                    break

        # Gets blueprint from module blueprint cache
        # or creates a new one
        mod = inspect.getmodule(workflow_class)
        qualname = workflow_class.__qualname__
        blueprint = None
        if hasattr(mod, "_blueprint_cache"):
            cache = mod._blueprint_cache
            blueprint = cache.get(qualname, None)

        if blueprint is None:
            blueprint = BluePrint(stages=list(stages or []))

        # Stages declared on the class restrict the blueprint: the
        # blueprint stages must appear in the same order in the class
        # stages and none may be missing from them.
        if stages:
            blueprint_stages = blueprint.stages
            if not is_ordered_sublist(blueprint_stages, stages):
                raise WorkflowError(
                    f"Cached blueprint ({blueprint_stages}) does not "
                    f"have compatible stages as {name} ({stages})"
                )
            # Override blueprint stages with class version
            blueprint.stages = list(stages)
        else:
            stages = copy.copy(blueprint.stages)
            workflow_class.stages = stages
        workflow_class.blueprint = blueprint

        return workflow_class

    # end __new__()

# end class WorkflowMeta


class Workflow(metaclass=WorkflowMeta):
    """ Base class for a Workflow
    """

    # Will be overriden. Each workflow class
    # should have its own blueprint.
    blueprint = BluePrint()

    # Override this to declare the stages
    stages = []

    def __init__(self):
        """ Constructor """

        # The unique ID associated with each workflow
        self._id = str(uuid.uuid4())

        # State of the workflow
        self._state = WorkflowState.NEW

        # All the variables associated with the
        # workflow and can be accessible by all the Tasks.
        self._context = None

        # Task name to TaskStatus for the latest run
        self._status = {}

        # Instantiate a copy of the stages
        self.stages = copy.copy(self.stages)

    # end __init__()

    @property
    def state(self) -> WorkflowState:
        return self._state

    @property
    def context(self) -> dict:
        return self._context

    @property
    def status(self) -> dict:
        return dict(self._status)

    def run(self, context: dict = None) -> dict:
        """ Runs the stages in order.

        Args:
            context (dict): Initial context; updated in place with the
                return values of the tasks.

        Returns:
            The context.

        Raises:
            The exception of the first failing task not flagged ``can_fail``.
        """

        self._context = context if context is not None else {}
        self._status = {}
        self._state = WorkflowState.RUNNING
        logger.debug("Workflow %s (%s) starting", type(self).__name__, self._id)

        for stage in self.stages:
            for task in self.blueprint.tasks_in(stage):
                bound = task.bind(self)
                try:
                    bound.run_task(self._context)
                except Exception:
                    self._status[task.name] = TaskStatus.FAILED
                    if task.can_fail:
                        logger.warning("Task %s in stage %s failed, continuing",
                                       task.name, stage, exc_info=True)
                        continue
                    self._state = WorkflowState.FAILED
                    logger.error("Task %s in stage %s failed", task.name, stage)
                    raise
                self._status[task.name] = TaskStatus.COMPLETED

        self._state = WorkflowState.COMPLETED
        return self._context

    # end run()

# end class Workflow
