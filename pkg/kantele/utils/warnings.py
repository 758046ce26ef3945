#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Handle all things warnings and errors here
"""

from __future__ import annotations
from kantele.utils.typing import Any, Optional

import sys
import warnings

warnings.filterwarnings(
    "always",
    category = UserWarning
)
warnings.filterwarnings(
    "ignore",
    category = DeprecationWarning
)


def _style(kind: str):
    """Return the (icon, rich style) pair for a message kind."""
    from kantele.utils.formatting import CHARSET
    from kantele.config import get_config
    cf = get_config('formatting', kind, warn=False) or {}
    icon = cf.get(CHARSET, {}).get('icon', '')
    style = cf.get('ansi', {}).get('rich', {}).get('style', None)
    return icon, style


def warn(*args, stacklevel: int = 2, stack: bool = True, color: bool = True, **kw) -> None:
    """
    Raise a `UserWarning` with the configured warning icon.

    Parameters
    ----------
    stacklevel: int, default 2
        Passed to `warnings.warn`. If `None`, omit the stack.

    stack: bool, default True
        If `False`, only print the message (no file and line).

    color: bool, default True
        If `True`, decorate the message with the warning icon and style.
    """
    if stacklevel is None:
        stacklevel = 1
        stack = False
    _old_sw = warnings.showwarning

    a = list(args)
    if color:
        try:
            from kantele.utils.formatting import ANSI, colored
            icon, style = _style('warnings')
            a[0] = ' ' + icon + ' ' + str(a[0])
            if ANSI and style:
                a[0] = colored(a[0], style=style)
        except Exception:
            a[0] = str(a[0])

    ### Optionally omit the warning location.
    def _no_stack_sw(message, category, filename, lineno, file=None, line=None):
        sys.stderr.write(str(message) + '\n')

    if not stack:
        warnings.showwarning = _no_stack_sw
    warnings.warn(*a, stacklevel=stacklevel, **kw)
    if not stack:
        warnings.showwarning = _old_sw


def error(
        message: str,
        exception_class = Exception,
        nopretty: bool = False,
        stack: bool = False,
        **kw: Any
    ):
    """
    Raise an exception of type `exception_class`.
    If `stack` is `True`, print the styled message to the console first.
    Extra keyword arguments are forwarded to the exception constructor.
    """
    exception = exception_class(message, **kw) if kw else exception_class(message)
    if stack and not nopretty:
        from kantele.utils.formatting import get_console
        icon, style = _style('errors')
        console = get_console()
        if console is not None:
            console.print(' ' + icon + ' ' + str(exception), style=style)
    raise exception


def info(message: str, icon: bool = True, **kw):
    """Print an informative message."""
    from kantele.utils.formatting import ANSI, colored
    _icon, style = _style('info')
    if icon:
        message = ' ' + _icon + ' ' + message
    if ANSI and style:
        lines = message.split('\n')
        message = (
            colored(lines[0], style=style)
            + ('\n' + '\n'.join(lines[1:]) if len(lines) > 1 else '')
        )
    print(message, flush=True)
