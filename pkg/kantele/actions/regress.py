#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Fit the random-intercept regression over a records file.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import SuccessTuple, Any, Optional, List, Tuple


def _records_path(records: Optional[str], kw) -> Tuple[pathlib.Path, Optional['kantele.core.Workspace']]:
    """The `--records` file, else the records file of the `--run` workspace."""
    workspace = None
    if kw.get('run'):
        from kantele.actions._workspace import get_workspace
        workspace = get_workspace(**kw)
    if records:
        return pathlib.Path(records), workspace
    if workspace is None:
        from kantele.utils.exceptions import ValidationError
        raise ValidationError("Pass `--records` or `--run`.")
    return workspace.path('records'), workspace


def regress(
        action: Optional[List[str]] = None,
        records: Optional[str] = None,
        formula: Optional[str] = None,
        output: Optional[str] = None,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Estimate fixed effects with a random intercept per language.
    Significance flags use |t| >= `analysis:significance_t` and are approximate.

    Command:
        `regress --run {run.yaml} [--formula "score ~ vocab_size + task"]`
        `regress --records {records.tsv}`
    """
    from kantele.core.Record import read_records
    from kantele.analysis import fit_lmm, lmm_summary_table
    from kantele.actions._workspace import print_frame
    from kantele.config import get_config
    path, workspace = _records_path(records, kw)
    resources = None
    if workspace is not None:
        resources = workspace.run_config.resources
        formula = formula or workspace.section('analysis')['formula']
    fit = fit_lmm(read_records(path), formula=formula, resources=resources)
    table = lmm_summary_table(fit, threshold=get_config('analysis', 'significance_t'))
    print_frame(table, title=fit.formula, nopretty=nopretty)
    print(
        f"sigma2_group = {fit.sigma2_group:.4g}, sigma2_resid = {fit.sigma2_resid:.4g}, "
        + f"log-likelihood = {fit.log_likelihood:.4f} ({fit.n_obs} obs, {fit.n_groups} groups)"
    )
    from kantele.config.static import _static_config
    out = (
        pathlib.Path(output) if output
        else path.parent / 'analysis' / _static_config()['filenames']['lmm_summary']
    )
    out.parent.mkdir(parents=True, exist_ok=True)
    table.to_csv(out, sep='\t', index=False)
    return True, f"Wrote '{out}'."
