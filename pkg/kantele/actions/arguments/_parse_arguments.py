#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
This module contains functions for parsing arguments
"""

from __future__ import annotations
from kantele.utils.typing import List, Dict, Any

from kantele.actions.arguments._parser import parser


def parse_arguments(sysargs: List[str]) -> Dict[str, Any]:
    """
    Parse a list of arguments into standard kantele arguments.
    Returns a dictionary of argument_name -> argument_value.

    Raises
    ------
    `ValidationError` if an option cannot be parsed.

    Examples
    --------
    >>> parse_arguments(['cost', '--vocab', '16k,32k'])['vocab']
    [16384, 32768]
    """
    import argparse
    from kantele.utils.exceptions import ValidationError
    try:
        args, unknown = parser.parse_known_args(sysargs, exit_on_error=False)
    except (argparse.ArgumentError, ValueError, TypeError) as e:
        raise ValidationError(f"Invalid arguments: {e}")
    args_dict = vars(args)
    if unknown:
        raise ValidationError(f"Unrecognized arguments: {' '.join(unknown)}")

    ### remove None (but not False) args
    args_dict = {a: v for a, v in args_dict.items() if v is not None}
    args_dict['sysargs'] = list(sysargs)
    return parse_synonyms(args_dict)


def parse_synonyms(args_dict: Dict[str, Any]) -> Dict[str, Any]:
    """Normalize action names (`train-vocab` -> `train_vocab`)."""
    if args_dict.get('action'):
        args_dict['action'] = [args_dict['action'][0].replace('-', '_')] + args_dict['action'][1:]
    return args_dict
