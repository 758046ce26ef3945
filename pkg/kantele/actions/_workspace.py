#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Shared helpers for actions that operate on a run.
"""

from __future__ import annotations
import itertools
from kantele.utils.typing import Any, Dict, List, Optional, Tuple


def get_workspace(
        run: Optional[str] = None,
        run_dir: Optional[str] = None,
        resume: Optional[bool] = None,
        config: Optional[Dict[str, Any]] = None,
        fresh: bool = False,
        debug: bool = False,
        **kw: Any
    ) -> 'kantele.core.Workspace':
    """
    Open the `Workspace` of the `--run` file.
    Without `--resume` or `--run-dir`, reuse the latest run directory unless `fresh`.
    """
    from kantele.core import Workspace
    from kantele.utils.exceptions import ConfigError
    if not run:
        raise ConfigError(["This action needs a run configuration (`--run path/to/run.yaml`)."])
    if resume is None:
        resume = not fresh
    workspace = Workspace.from_file(run, patch=config, run_dir=run_dir, resume=resume)
    if debug:
        from kantele.utils.debug import dprint
        dprint(f"Using {workspace}.")
    return workspace


def grid_cells(
        workspace: 'kantele.core.Workspace',
        steps: Optional[List[int]] = None,
        vocab: Optional[List[int]] = None,
        alpha: Optional[List[float]] = None,
        **kw: Any
    ) -> List[Tuple[int, int, float]]:
    """The (steps, vocab size, alpha) cells selected on the command line, defaulting to the grid."""
    grid = workspace.run_config.grid
    return list(itertools.product(
        steps or grid['lapt_steps'],
        vocab or grid['vocab_size'],
        alpha or grid['alpha'],
    ))


def print_frame(df: 'pd.DataFrame', title: Optional[str] = None, nopretty: bool = False, **kw) -> None:
    from kantele.utils.formatting import print_table
    print_table(df.to_dict(orient='records'), title=title, nopretty=nopretty)
