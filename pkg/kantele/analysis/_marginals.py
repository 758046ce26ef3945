#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Marginal means: average scores per (language, parameter level) across every
other setting.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import Any, Optional, PathLike


def _as_frame(records: Any) -> 'pd.DataFrame':
    import pandas as pd
    from kantele.core.Record import records_to_frame
    if isinstance(records, pd.DataFrame):
        return records
    return records_to_frame(records)


def marginalize(
        records: Any,
        parameter: str,
        by: str = 'language',
    ) -> 'pd.DataFrame':
    """
    Mean score per (`by`, level of `parameter`) with the standard deviation
    and number of records averaged.
    """
    import pandas as pd
    from kantele.utils.exceptions import ValidationError
    frame = _as_frame(records)
    if parameter not in frame.columns:
        raise ValidationError(f"No column '{parameter}' in the records.")
    if frame.empty:
        return pd.DataFrame(columns=[by, 'level', 'mean', 'sd', 'count'])
    grouped = frame.groupby([by, parameter], sort=True)['score']
    out = grouped.agg(['mean', 'std', 'count']).reset_index()
    out = out.rename(columns={parameter: 'level', 'std': 'sd'})
    out['sd'] = out['sd'].fillna(0.0)
    out['count'] = out['count'].astype(int)
    return out[[by, 'level', 'mean', 'sd', 'count']]


def write_marginals(
        records: Any,
        parameters: Any,
        out_dir: PathLike,
    ) -> list:
    """Write `marginals_<parameter>.tsv` for each parameter. Returns the paths."""
    from kantele.config.static import _static_config
    template = _static_config()['filenames']['marginals']
    out_dir = pathlib.Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for parameter in parameters:
        path = out_dir / template.format(parameter=parameter)
        marginalize(records, parameter).to_csv(path, sep='\t', index=False)
        paths.append(path)
    return paths
