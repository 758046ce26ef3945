#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
This module contains functions for printing elements.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def show(
        action: Optional[List[str]] = None,
        **kw: Any
    ) -> SuccessTuple:
    """
    Show elements of a certain type.

    Command:
        `show {option}`

    Example:
        `show config pretrain`
    """
    from kantele.utils.misc import choose_subaction
    show_options = {
        'actions': _show_actions,
        'config': _show_config,
        'grid': _show_grid,
        'records': _show_records,
        'version': _show_version,
    }
    return choose_subaction(action, show_options, **kw)


def _show_actions(**kw: Any) -> SuccessTuple:
    """
    Show available actions.
    """
    from kantele.actions import actions
    for name in sorted(actions):
        print('  - ' + name.replace('_', '-'))
    return True, "Success"


def _show_config(
        action: Optional[List[str]] = None,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Show the configuration dictionary (the run's resolved one with `--run`).
    Sub-actions are recursive indices into the dictionary.

    Example:
        `show config pretrain` -> cf['pretrain']
    """
    from kantele.config import get_config
    from kantele.utils.yaml import yaml
    if kw.get('run'):
        from kantele.actions._workspace import get_workspace
        cf = get_workspace(**kw).run_config.to_dict()
    else:
        cf = get_config()
    for key in (action or []):
        if not isinstance(cf, dict) or key not in cf:
            return False, f"Invalid keys in config: {action}"
        cf = cf[key]
    if nopretty or not isinstance(cf, (dict, list)):
        print(cf)
    else:
        print(yaml.dump(cf))
    return True, "Success"


def _show_grid(nopretty: bool = False, **kw: Any) -> SuccessTuple:
    """
    List the grid cells of a run and how many records each has.
    """
    from kantele.actions._workspace import get_workspace
    from kantele.core.Record import read_records
    from kantele.utils.formatting import print_table
    workspace = get_workspace(**kw)
    path = workspace.path('records')
    records = read_records(path) if path.exists() else []
    rows = []
    for steps, vocab_size, alpha in workspace.run_config.cells():
        rows.append({
            'lapt_steps': steps,
            'vocab_size': vocab_size,
            'alpha': alpha,
            'records': sum(
                1 for r in records
                    if (r.lapt_steps, r.vocab_size, round(r.alpha, 6)) == (steps, vocab_size, round(alpha, 6))
            ),
        })
    print_table(rows, title=f"Grid of '{workspace.run_config.name}'", nopretty=nopretty)
    return True, "Success"


def _show_records(
        records: Optional[str] = None,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Print mean and sd over seeds per (language, task, setting, configuration).
    """
    from kantele.core.Record import read_records
    from kantele.tasks import aggregate_records
    from kantele.actions.regress import _records_path
    from kantele.actions._workspace import print_frame
    path, _ = _records_path(records, kw)
    print_frame(aggregate_records(read_records(path)), nopretty=nopretty)
    return True, "Success"


def _show_version(nopretty: bool = False, **kw: Any) -> SuccessTuple:
    """
    Show the kantele version.
    """
    from kantele.config import __version__
    print(__version__ if nopretty else f"kantele v{__version__}")
    return True, "Success"
