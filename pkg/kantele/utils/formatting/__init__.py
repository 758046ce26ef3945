#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Utilities for formatting output text
"""

from __future__ import annotations
from kantele.utils.typing import Optional, Any, List, Dict

_attrs = {
    'ANSI': None,
    'UNICODE': None,
    'CHARSET': None,
}
__all__ = sorted([
    'ANSI', 'CHARSET', 'UNICODE',
    'colored',
    'get_console',
    'print_tuple',
    'print_table',
])

import os
if 'PYTHONIOENCODING' not in os.environ:
    os.environ['PYTHONIOENCODING'] = 'utf-8'


def colored(text: str, style: Optional[str] = None, **kw) -> str:
    """
    Apply a rich style to a string and return the ANSI-escaped result.
    Falls back to the plain text if rich is unavailable.
    """
    if not style:
        return text
    console = get_console()
    if console is None:
        return text
    from kantele.utils.packages import attempt_import
    rich_text = attempt_import('rich.text', warn=False)
    if rich_text is None:
        return text
    with console.capture() as cap:
        console.print(rich_text.Text(text, style=style), end='')
    return cap.get()


console = None
def get_console():
    """Return the shared `rich.console.Console` (or `None` without rich)."""
    global console
    if console is not None:
        return console
    from kantele.utils.packages import attempt_import
    rich_console = attempt_import('rich.console', warn=False)
    if rich_console is None:
        return None
    try:
        console = rich_console.Console(
            force_terminal = bool(_attrs['ANSI']) if _attrs['ANSI'] is not None else None,
        )
    except Exception:
        console = None
    return console


def print_tuple(
        tup: tuple,
        skip_common: bool = True,
        upper_padding: int = 0,
        lower_padding: int = 0,
        _progress: Optional['rich.progress.Progress'] = None,
    ) -> None:
    """Print a `SuccessTuple`."""
    from kantele.config.static import _static_config
    from kantele.utils.warnings import _style
    try:
        status = 'success' if tup[0] else 'failure'
    except TypeError:
        status = 'failure'
        tup = None, None

    omit_messages = _static_config()['system']['success']['ignore']
    if skip_common and tup[1] in omit_messages:
        return

    icon, style = _style(status)
    msg = ' ' + icon + ' ' + str(tup[1])
    if __getattr__('ANSI') and style:
        msg = colored(msg, style=style)
    msg = ('\n' * upper_padding) + msg + ('\n' * lower_padding)
    _print = _progress.console.print if _progress is not None else print
    _print(msg)


def print_table(
        rows: List[Dict[str, Any]],
        title: Optional[str] = None,
        nopretty: bool = False,
    ) -> None:
    """
    Print a list of dictionaries as a table.
    Uses `rich.table` when available and `nopretty` is `False`, else tab-separated text.
    """
    if not rows:
        return
    columns = list(rows[0].keys())
    console = get_console() if not nopretty else None
    if console is None:
        print('\t'.join(columns))
        for row in rows:
            print('\t'.join(str(row.get(c, '')) for c in columns))
        return
    from kantele.utils.packages import attempt_import
    rich_table = attempt_import('rich.table')
    table = rich_table.Table(title=title)
    for c in columns:
        table.add_column(str(c))
    for row in rows:
        table.add_row(*[_format_cell(row.get(c, '')) for c in columns])
    console.print(table)


def _format_cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.4g}"
    return str(value)


def _init() -> None:
    from kantele.config import get_config
    ansi = get_config('formatting', 'ansi', warn=False)
    unicode = get_config('formatting', 'unicode', warn=False)
    if os.environ.get('NO_COLOR'):
        ansi = False
    _attrs['ANSI'] = bool(ansi)
    _attrs['UNICODE'] = bool(unicode)
    _attrs['CHARSET'] = 'unicode' if unicode else 'ascii'


def __getattr__(name: str) -> Any:
    """
    Lazily load module-level variables.
    """
    if name.startswith('__') and name.endswith('__'):
        raise AttributeError("Cannot import dunders from this module.")
    if name in _attrs:
        if _attrs[name] is None:
            _init()
        return _attrs[name]
    raise AttributeError(f"Could not find '{name}'.")
