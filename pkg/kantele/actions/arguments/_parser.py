#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
This module creates the argparse Parser.
"""

from __future__ import annotations
import argparse
from kantele.utils.typing import Union, Dict, List, Any
from kantele.utils.misc import string_to_dict, parse_int_list

_original_argparse_parse_known_args = argparse.ArgumentParser.parse_known_args


def _new_argparse_error(self, message):
    raise argparse.ArgumentError(None, message)


class ArgumentParser(argparse.ArgumentParser):
    """Override the built-in `argparse` error handling."""

    def parse_known_args(self, *args, exit_on_error: bool = False, **kw):
        _error_bkp = self.error
        if not exit_on_error:
            self.error = _new_argparse_error.__get__(self)
        try:
            return _original_argparse_parse_known_args(self, *args, **kw)
        finally:
            self.error = _error_bkp


def parse_float_list(value: str) -> List[float]:
    """
    >>> parse_float_list('0.1,0.3')
    [0.1, 0.3]
    """
    return [float(v) for v in str(value).split(',') if v.strip()]


def parse_help(sysargs: Union[List[str], Dict[str, Any]]) -> None:
    """Print the docstring of the requested action (or the parser help)."""
    import textwrap
    from kantele.actions.arguments._parse_arguments import parse_arguments
    from kantele.actions import actions, get_subactions, action_name
    args = parse_arguments(sysargs) if isinstance(sysargs, list) else sysargs
    if len(args['action']) == 0:
        return print(parser.format_help())
    name = action_name(args['action'][0])
    if name not in actions:
        return print(parser.format_help())
    if len(args['action']) > 1:
        subaction = get_subactions(name).get(args['action'][1], None)
        if subaction is not None and subaction.__doc__:
            return print(textwrap.dedent(subaction.__doc__))
    doc = actions[name].__doc__ or f"No help available for '{name}'."
    return print(textwrap.dedent(doc))


def parse_version(sysargs: List[str]):
    """Print the kantele version."""
    from kantele.config import __version__ as version
    from kantele.config import __doc__ as doc
    if '--nopretty' in sysargs:
        return print(version)
    return print(doc)


parser = ArgumentParser(
    prog = 'kantele',
    description = "Adapt a multilingual encoder to a family of low-resource languages.",
    usage = "kantele [action with optional arguments] {options}",
    add_help = False,
)

groups = {}
groups['actions'] = parser.add_argument_group(title='Actions options')
groups['run'] = parser.add_argument_group(title='Run options')
groups['grid'] = parser.add_argument_group(title='Grid options')
groups['files'] = parser.add_argument_group(title='File options')
groups['analysis'] = parser.add_argument_group(title='Analysis options')
groups['debug'] = parser.add_argument_group(title='Debugging options')
groups['misc'] = parser.add_argument_group(title='Miscellaneous options')

### Actions options
groups['actions'].add_argument(
    'action', nargs='*', help="Action to execute. E.g. `train-vocab` or `show config`"
)
groups['actions'].add_argument(
    '-h', '--help', action='store_true', help="Print a help message for an action."
)

### Run options
groups['run'].add_argument(
    '-r', '--run', type=str, help="Path to the YAML run configuration."
)
groups['run'].add_argument(
    '--run-dir', type=str,
    help="Use this artifact directory instead of a new run-stamped one.",
)
groups['run'].add_argument(
    '--resume', action='store_true', default=None,
    help = (
        "Reuse the most recent run directory of the run's name "
        + "(the default for every action except `clean` and `run-grid`)."
    ),
)
groups['run'].add_argument(
    '-w', '--workers', type=int,
    help="How many parallel workers to use (negative values count back from the CPU count).",
)

### Grid options
groups['grid'].add_argument(
    '--steps', type=parse_int_list, help="Adaptation steps, e.g. `100000,200000`."
)
groups['grid'].add_argument(
    '--vocab', type=parse_int_list, help="Vocabulary sizes, e.g. `16384,32k`."
)
groups['grid'].add_argument(
    '--alpha', type=parse_float_list, help="Sampling alphas, e.g. `0.1,0.2`."
)
groups['grid'].add_argument(
    '--setting', '--settings', nargs='+', dest='settings',
    help="Evaluation settings (few_shot, full_finetune, zero_shot).",
)
groups['grid'].add_argument(
    '-t', '--task', '--tasks', nargs='+', dest='tasks', help="Tasks (pos, uas).",
)
groups['grid'].add_argument(
    '--seed', '--seeds', type=parse_int_list, dest='seeds', help="Fine-tuning seeds, e.g. `1,2`.",
)
groups['grid'].add_argument(
    '-l', '--language', '--languages', nargs='+', dest='languages',
    help="Restrict to these language codes.",
)

### File options
groups['files'].add_argument(
    '-i', '--input', nargs='+', help="Input files (text lines, subword models, ...).",
)
groups['files'].add_argument(
    '-o', '--output', type=str, help="Output file or directory.",
)
groups['files'].add_argument(
    '--gold', type=str, help="Gold CoNLL-U file.",
)
groups['files'].add_argument(
    '--pred', type=str, help="Predicted CoNLL-U file.",
)
groups['files'].add_argument(
    '--records', type=str, help="A records file (defaults to the run's records file).",
)

### Analysis options
groups['analysis'].add_argument(
    '--dims', type=str, help="Named encoder dimensions for cost modeling (e.g. `xlmr-base`).",
)
groups['analysis'].add_argument(
    '--lengths', type=parse_float_list,
    help="Mean sequence lengths matching `--vocab`, e.g. `44.3,48.4`.",
)
groups['analysis'].add_argument(
    '--formula', type=str, help="Fixed-effect formula for `regress`.",
)
groups['analysis'].add_argument(
    '--parameter', '--parameters', nargs='+', dest='parameters',
    help="Grid parameters to marginalize over in `report`.",
)

### Debugging Arguments
groups['debug'].add_argument(
    '--debug', action="store_true", help="Print debug statements and full tracebacks."
)

### Miscellaneous arguments
groups['misc'].add_argument(
    '-V', '--version', action="store_true", help="Print the kantele version and exit."
)
groups['misc'].add_argument(
    '--nopretty', action="store_true", help="Print elements without 'pretty' formatting."
)
groups['misc'].add_argument(
    '--config', type=string_to_dict, help=(
        "Temporarily update configuration for a single command. "
        + "JSON or simple format, e.g. `--config pretrain:total_steps:500`."
    )
)
groups['misc'].add_argument(
    '--root-dir', help="Use an alternate output root (default '~/.kantele/')."
)
