#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Emit score tables and marginal means from a records file.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def report(
        action: Optional[List[str]] = None,
        records: Optional[str] = None,
        output: Optional[str] = None,
        parameters: Optional[List[str]] = None,
        debug: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Write per-setting, per-task "mean ± sd" tables (TSV and markdown) and the
    per-language marginal means of each grid parameter.

    Command:
        `report --run {run.yaml}`
        `report --records {records.tsv} --output {dir} --parameter alpha`
    """
    from kantele.core.Record import read_records
    from kantele.analysis import emit_report, write_marginals
    from kantele.actions.regress import _records_path
    path, _ = _records_path(records, dict(kw, debug=debug))
    out_dir = pathlib.Path(output) if output else path.parent / 'analysis'
    rows = read_records(path)
    written = emit_report(rows, out_dir, debug=debug)
    written += write_marginals(rows, parameters or ['lapt_steps', 'vocab_size', 'alpha'], out_dir)
    return True, f"Wrote {len(written)} file(s) to '{out_dir}'."
