#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Evaluate grid cells and drive the resumable grid.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import Any, Dict, List, Optional, Sequence, Set, Tuple


def _expected_keys(
        self,
        cell: Tuple[int, int, float],
        settings: Sequence[str],
        tasks: Sequence[str],
        seeds: Sequence[int],
    ) -> Dict[Tuple[str, str, int], Set[Tuple[Any, ...]]]:
    """(setting, task, seed) -> the record keys it produces for this cell."""
    from kantele.core.Record import cell_key
    steps, vocab_size, alpha = cell
    treebanks = self.treebanks()
    out = {}
    for setting in settings:
        if setting == 'zero_shot':
            codes = [c for c, tb in treebanks.items() if tb.test_only]
        else:
            codes = [c for c, tb in treebanks.items() if tb.has_train and tb.has_test]
        for task in tasks:
            for seed in seeds:
                out[(setting, task, seed)] = {
                    cell_key(c, task, setting, steps, vocab_size, alpha, seed) for c in codes
                }
    return out


def evaluate_cell(
        self,
        lapt_steps: int,
        vocab_size: int,
        alpha: float,
        settings: Optional[Sequence[str]] = None,
        tasks: Optional[Sequence[str]] = None,
        seeds: Optional[Sequence[int]] = None,
        skip: Optional[Set[Tuple[Any, ...]]] = None,
        workers: Optional[int] = None,
        debug: bool = False,
        _progress: Optional['rich.progress.Progress'] = None,
    ) -> List['ResultRecord']:
    """
    Adapt the encoder of one (steps, vocabulary size, alpha) cell and run every
    evaluation protocol. Record keys in `skip` are neither recomputed nor returned.
    """
    from kantele.tasks import FinetuneConfig, run_setting
    grid = self.run_config.grid
    settings = list(settings or grid['settings'])
    tasks = list(tasks or grid['tasks'])
    seeds = list(seeds or self.run_config.seeds)
    skip = skip or set()
    cell = (int(lapt_steps), int(vocab_size), float(alpha))

    pending = {
        k: keys for k, keys in _expected_keys(self, cell, settings, tasks, seeds).items()
            if keys - skip
    }
    if not pending:
        return []

    checkpoint = self.pretrain_cell(*cell, debug=debug, _progress=_progress)
    tokenizer = self.train_vocab(vocab_size, debug=debug)
    config = FinetuneConfig.from_config(self.section('finetune'))
    records = []
    for setting in settings:
        for task in tasks:
            todo = [s for s in seeds if (setting, task, s) in pending]
            if not todo:
                continue
            records += run_setting(
                setting, checkpoint, self.treebanks(), config, tokenizer,
                cell = {'lapt_steps': cell[0], 'vocab_size': cell[1], 'alpha': cell[2]},
                tasks = [task],
                seeds = todo,
                workers = workers,
                debug = debug,
            )
    return [r for r in records if r.cell_key not in skip]


def _write_failure(path: pathlib.Path, cell: Tuple[int, int, float], error: BaseException) -> None:
    import pandas as pd
    category = getattr(error, 'category', 'internal')
    row = pd.DataFrame([{
        'lapt_steps': cell[0],
        'vocab_size': cell[1],
        'alpha': cell[2],
        'category': category,
        'error': ' '.join(str(error).split()),
    }])
    row.to_csv(path, sep='\t', index=False, mode='a', header=not path.exists())


def run_grid(
        self,
        workers: Optional[int] = None,
        debug: bool = False,
    ) -> Tuple[int, int, int]:
    """
    Run every cell of the Cartesian (lapt_steps, vocab_size, alpha) grid.

    Cells whose records are all present in the records file are skipped; partial
    cells only run their missing (setting, task, seed) combinations. A cell that
    raises is logged to the failed-cells file and the grid continues.
    Records are appended by this process alone, in cell order.

    Returns
    -------
    A tuple of (records written, cells skipped, cells failed).
    """
    from kantele.core.Record import append_records, completed_keys
    from kantele.utils.warnings import warn, info
    from kantele.utils.pool import get_workers
    records_path = self.path('records')
    done = completed_keys(records_path)
    written = skipped = failed = 0

    from kantele.utils.packages import attempt_import
    rich_progress = attempt_import('rich.progress', warn=False)
    cells = self.run_config.cells()
    progress = rich_progress.Progress(transient=True) if debug and rich_progress else None
    task = progress.add_task('grid', total=len(cells)) if progress is not None else None
    if progress is not None:
        progress.start()
    try:
        for cell in cells:
            try:
                records = self.evaluate_cell(
                    *cell, skip=done, workers=get_workers(workers), debug=debug,
                )
            except Exception as e:
                failed += 1
                _write_failure(self.path('failed'), cell, e)
                warn(f"Grid cell {cell} failed: {e}", stack=False)
                continue
            finally:
                if progress is not None:
                    progress.update(task, advance=1)
            if not records:
                skipped += 1
                continue
            written += append_records(records_path, records)
            done |= {r.cell_key for r in records}
            if debug:
                info(f"Cell {cell}: {len(records)} record(s).")
    finally:
        if progress is not None:
            progress.stop()
    return written, skipped, failed
