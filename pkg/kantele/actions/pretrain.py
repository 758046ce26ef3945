#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Run language-adaptive pretraining for grid cells.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def pretrain(
        action: Optional[List[str]] = None,
        debug: bool = False,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Adapt the transplanted encoder with masked language modeling.
    Cells default to the full grid; restrict with `--steps`, `--vocab` and `--alpha`.

    Command:
        `pretrain --run {run.yaml} --steps 1000 --vocab 512 --alpha 0.1`
    """
    from kantele.actions._workspace import get_workspace, grid_cells
    from kantele.utils.formatting import print_table
    from kantele.utils.packages import attempt_import
    workspace = get_workspace(debug=debug, **kw)
    cells = grid_cells(workspace, **kw)
    rich_progress = attempt_import('rich.progress', warn=False)
    rows = []
    with rich_progress.Progress(transient=True, disable=not debug) as progress:
        for steps, vocab_size, alpha in cells:
            checkpoint = workspace.pretrain_cell(
                steps, vocab_size, alpha, debug=debug, _progress=progress,
            )
            rows.append({
                'lapt_steps': steps, 'vocab_size': vocab_size, 'alpha': alpha,
                'best_step': checkpoint.step, 'dev_loss': checkpoint.dev_loss,
            })
    print_table(rows, title='Adapted encoders', nopretty=nopretty)
    return True, f"Adapted {len(rows)} encoder(s)."
