#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Default actions available to the kantele CLI.
"""

from __future__ import annotations
from kantele.utils.typing import Callable, Any, Dict
from kantele.utils.packages import get_modules_from_package

### build __all__ from other .py files in this package
import sys
modules = get_modules_from_package(
    sys.modules[__name__],
    names = False,
)
__all__ = ['actions', 'get_subactions', 'action_name', 'entry']

### Build the actions dictionary from the public function of each module
### that carries the module's own name (e.g. `train_vocab.train_vocab`).
from inspect import getmembers, isfunction
actions = {}
for module in modules:
    actions.update({
        name: func
        for name, func in getmembers(module)
            if isfunction(func)
                and name == module.__name__.split('.')[-1]
                and not name.startswith('_')
    })


def action_name(name: str) -> str:
    """
    >>> action_name('train-vocab')
    'train_vocab'
    """
    return str(name).replace('-', '_')


def get_subactions(action: str) -> Dict[str, Callable[[Any], Any]]:
    """
    Return a dictionary of an action's sub-action functions.

    Examples
    --------
    >>> sorted(get_subactions('show'))
    ['actions', 'config', 'grid', 'records', 'version']
    """
    import importlib, inspect
    subactions = {}
    try:
        action_module = importlib.import_module(f"kantele.actions.{action_name(action)}")
    except ImportError:
        return subactions
    prefix = '_' + action_name(action) + '_'
    for name, f in inspect.getmembers(action_module):
        if inspect.isfunction(f) and name.startswith(prefix):
            subactions[name[len(prefix):]] = f
    return subactions


from kantele.actions._entry import _entry as entry
