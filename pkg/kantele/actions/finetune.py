#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Fine-tune and evaluate adapted encoders on the downstream tasks.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def finetune(
        action: Optional[List[str]] = None,
        settings: Optional[List[str]] = None,
        tasks: Optional[List[str]] = None,
        seeds: Optional[List[int]] = None,
        workers: Optional[int] = None,
        debug: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Run the evaluation protocols for the selected cells and append the records.
    Records already in the records file are skipped.

    Command:
        `finetune --run {run.yaml} --setting few_shot --task pos --seed 1,2`
    """
    from kantele.actions._workspace import get_workspace, grid_cells
    from kantele.core.Record import append_records, completed_keys
    workspace = get_workspace(debug=debug, **kw)
    records_path = workspace.path('records')
    done = completed_keys(records_path)
    written = 0
    for cell in grid_cells(workspace, **kw):
        records = workspace.evaluate_cell(
            *cell, settings=settings, tasks=tasks, seeds=seeds, skip=done,
            workers=workers, debug=debug,
        )
        written += append_records(records_path, records)
        done |= {r.cell_key for r in records}
    return True, f"Appended {written} record(s) to '{records_path}'."
