#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Functions for patching the configuration dictionary
"""

from __future__ import annotations
from kantele.utils.typing import Dict, Any


def apply_patch_to_config(
        config: Dict[str, Any],
        patch: Dict[str, Any],
    ) -> Dict[str, Any]:
    """
    Patch the config dict with a new dict (cascade patching).
    Nested dictionaries are merged key by key; any other value in `patch` replaces
    the value in `config`. Neither input is modified.

    Examples
    --------
    >>> apply_patch_to_config({'a': {'b': 1, 'c': 2}}, {'a': {'c': 3}})
    {'a': {'b': 1, 'c': 3}}
    """
    import copy
    base = copy.deepcopy(config)
    for key, value in (patch or {}).items():
        if isinstance(value, dict) and isinstance(base.get(key, None), dict):
            base[key] = apply_patch_to_config(base[key], value)
        else:
            base[key] = copy.deepcopy(value)
    return base
