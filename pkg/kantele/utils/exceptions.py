#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Exception classes raised by the pipeline.
Actions translate these into categorized `SuccessTuple` failures.
"""

from __future__ import annotations
from kantele.utils.typing import List, Optional, Any, Dict


class KanteleError(Exception):
    """Base class for all pipeline errors."""
    category: str = 'internal'


class ValidationError(KanteleError, ValueError):
    """An argument or configuration value is outside its valid range."""
    category = 'validation'


class ConfigError(ValidationError):
    """One or more problems were found while validating a run configuration."""
    category = 'config'

    def __init__(self, problems: List[str]):
        self.problems = list(problems)
        msg = f"{len(self.problems)} problem(s) in the run configuration:\n" + '\n'.join(
            f"  - {p}" for p in self.problems
        )
        super().__init__(msg)


class ConllParseError(KanteleError, ValueError):
    """A CoNLL-U file does not follow the 10-column layout."""
    category = 'io'

    def __init__(self, message: str, path: Optional[str] = None, lineno: Optional[int] = None):
        self.path = path
        self.lineno = lineno
        where = (f"{path}:" if path else 'line ') + (str(lineno) if lineno is not None else '?')
        super().__init__(f"{where}: {message}")


class TransplantError(KanteleError):
    """The embedding transplant is undefined (e.g. no overlapping tokens)."""
    category = 'validation'


class NonFiniteLossError(KanteleError, FloatingPointError):
    """A loss evaluated to NaN or infinity."""
    category = 'numeric'

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        self.context = dict(context or {})
        if self.context:
            message += ' (' + ', '.join(f"{k}={v}" for k, v in self.context.items()) + ')'
        super().__init__(message)


class DivergenceError(NonFiniteLossError):
    """Training diverged and no finite checkpoint exists."""


class RankDeficiencyError(KanteleError, ValueError):
    """A design matrix is not of full column rank."""
    category = 'numeric'

    def __init__(self, columns: List[str]):
        self.columns = list(columns)
        super().__init__(
            "Design matrix is rank deficient; collinear column(s): " + ', '.join(self.columns)
        )


class ConvergenceError(KanteleError, ArithmeticError):
    """An optimizer failed to converge."""
    category = 'numeric'

    def __init__(self, message: str, bracket: Optional[tuple] = None):
        self.bracket = bracket
        if bracket is not None:
            message += f" (final bracket: {bracket})"
        super().__init__(message)


class CorpusReadError(KanteleError, OSError):
    """An input file could not be read."""
    category = 'io'

    def __init__(self, path: str, reason: Any = None):
        self.path = str(path)
        super().__init__(f"Cannot read '{path}'" + (f": {reason}" if reason is not None else '.'))


class SchemaDriftError(KanteleError, ValueError):
    """A records file was written with a different column schema."""
    category = 'io'
