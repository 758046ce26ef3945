#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
The entry point for launching kantele actions.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, List, Optional, Union


def _entry(sysargs: Optional[Union[List[str], str]] = None) -> SuccessTuple:
    """
    Parse arguments and launch an action.
    Every exception becomes a failed `SuccessTuple` prefixed with its category.

    Examples
    --------
    >>> _entry(['cost', '--dims', 'xlmr-base', '--vocab', '16384'])
    (True, 'Success')
    """
    from kantele.actions.arguments import parse_arguments
    if sysargs is None:
        sysargs = []
    if not isinstance(sysargs, list):
        import shlex
        sysargs = shlex.split(sysargs)
    try:
        args = parse_arguments(sysargs)
    except Exception as e:
        return _failure(e, 'parse the arguments', debug=('--debug' in sysargs))
    return _entry_with_args(**args)


def _entry_with_args(**kw) -> SuccessTuple:
    """
    Execute an action with keyword arguments.
    Use `_entry()` for parsing sysargs before executing.
    """
    from kantele.actions import actions
    if len(kw.get('action', [])) == 0:
        return actions['show'](['actions'], **{k: v for k, v in kw.items() if k != 'action'})

    main_action = kw['action'][0]
    if main_action not in actions:
        from kantele.utils.misc import items_str
        return False, (
            f"[validation] Unknown action '{main_action}'. "
            + f"Choose from {items_str(sorted(a.replace('_', '-') for a in actions))}."
        )
    del kw['action'][0]

    ### A `--config` patch lasts for this action only.
    import copy
    from kantele.config import _config, set_config, patch_config
    _backup = copy.deepcopy(_config())
    if kw.get('config', None):
        patch_config(kw['config'])

    try:
        result = actions[main_action](**kw)
    except Exception as e:
        command = ' '.join([main_action.replace('_', '-')] + kw['action'])
        result = _failure(e, f"execute '{command}'", debug=kw.get('debug', False))
    finally:
        set_config(_backup)
    return result


def _category(e: BaseException) -> str:
    """
    >>> _category(FileNotFoundError('x'))
    'io'
    """
    from kantele.utils.exceptions import KanteleError
    if isinstance(e, KanteleError):
        return e.category
    if isinstance(e, OSError):
        return 'io'
    if isinstance(e, (ArithmeticError, FloatingPointError)):
        return 'numeric'
    if isinstance(e, (ValueError, TypeError, KeyError)):
        return 'validation'
    return 'internal'


def _failure(e: BaseException, what: str, debug: bool = False) -> SuccessTuple:
    if debug:
        import traceback
        traceback.print_exception(type(e), e, e.__traceback__)
    return False, (
        f"[{_category(e)}] Failed to {what}:\n\n{e}"
        + ("\n\nRun again with '--debug' to see a full stacktrace." if not debug else '')
    )
