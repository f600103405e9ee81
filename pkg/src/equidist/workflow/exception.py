#!/usr/bin/env python
# -*- coding: utf-8 -*-


class WorkflowError(Exception):
    """ Invalid workflow definition or a failed mandatory task """
    pass
