#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Execute the full hyperparameter grid of a run.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def run_grid(
        action: Optional[List[str]] = None,
        workers: Optional[int] = None,
        debug: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Adapt, fine-tune and evaluate every (steps, vocabulary size, alpha) cell.

    Completed cells found in the records file are skipped, so an interrupted grid
    resumes with `--resume` (or `--run-dir`). Failed cells are listed in
    `failed_cells.tsv` and the grid moves on.

    Command:
        `run-grid --run {run.yaml} [--resume] [--workers 4]`
    """
    from kantele.actions._workspace import get_workspace
    workspace = get_workspace(fresh=True, debug=debug, **kw)
    written, skipped, failed = workspace.run_grid(workers=workers, debug=debug)
    msg = (
        f"Wrote {written} record(s) to '{workspace.path('records')}' "
        + f"({skipped} cell(s) already complete, {failed} failed)."
    )
    return failed == 0, msg
