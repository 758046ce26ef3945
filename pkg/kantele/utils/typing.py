#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Type aliases shared across the package.
"""

from __future__ import annotations
from typing import (
    Tuple,
    Optional,
    Dict,
    List,
    Mapping,
    Sequence,
    Callable,
    Union,
    Any,
    Iterable,
    Iterator,
    Set,
)

SuccessTuple = Tuple[bool, str]
PathLike = Union[str, 'pathlib.Path']
SizesDict = Dict[str, float]
IdSequence = List[int]
ParamsDict = Dict[str, 'numpy.ndarray']
