#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Define file paths
"""

from __future__ import annotations

from pathlib import Path
from kantele.utils.typing import Union

paths = {
    'ROOT_DIR_PATH' : Path.home() / '.kantele',
}

def set_root(root: Union[Path, str]):
    """Modify the value of `ROOT_DIR_PATH` (the default output root)."""
    global paths
    paths['ROOT_DIR_PATH'] = Path(root)


def __getattr__(name: str) -> Path:
    if name not in paths:
        raise AttributeError(f"Could not import '{name}'.")
    return Path(paths[name])
