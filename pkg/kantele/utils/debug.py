#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Functions to handle debug statements
"""

from __future__ import annotations
from kantele.utils.typing import Optional


def dprint(
        msg: str,
        leader: bool = True,
        package: bool = True,
        nopretty: bool = False,
        _progress: Optional['rich.progress.Progress'] = None,
        **kw
    ) -> None:
    """
    Print a debug message, prefixed with the calling module and line number.

    Parameters
    ----------
    msg: str
        The message to print.

    leader: bool, default True
        If `True`, prepend the debug icon.

    package: bool, default True
        If `True`, prepend `module:lineno` of the caller.

    _progress: Optional[rich.progress.Progress], default None
        If provided, log through the progress bar's console so the bar isn't broken.
    """
    import inspect
    parent_frame = inspect.stack()[1][0]
    parent_info = inspect.getframeinfo(parent_frame)
    parent_package = parent_frame.f_globals.get('__name__', '')
    premsg = ''
    if package:
        premsg = parent_package + ':' + str(parent_info.lineno) + '\n'
    if not nopretty:
        try:
            from kantele.utils.formatting import ANSI, colored
            from kantele.utils.warnings import _style
            icon, style = _style('debug')
            if leader:
                premsg = ' ' + icon + ' ' + premsg
            if ANSI and style:
                premsg = colored(premsg, style=style)
        except Exception:
            pass
    _print = _progress.console.log if _progress is not None else print
    _print(premsg + str(msg))


def _checkpoint(
        _progress: Optional['rich.progress.Progress'] = None,
        _task: Optional[int] = None,
        _total: Optional[int] = None,
        **kw
    ) -> None:
    """
    If the `_progress` and `_task` objects are provided, increment the task by one step.
    If `_total` is provided, update the total instead.
    """
    if _progress is not None and _task is not None:
        _kw = {'total': _total} if _total is not None else {'advance': 1}
        _progress.update(_task, **_kw)
