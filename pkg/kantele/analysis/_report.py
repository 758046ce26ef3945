#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Per-setting, per-task score tables: one row per configuration, one column per
language holding "mean ± sd" over seeds, and a row average.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import Any, Dict, List, Optional, PathLike, Tuple

CONFIG_COLUMNS = ['lapt_steps', 'vocab_size', 'alpha', 'finetuning_lines']


def format_mean_sd(mean: float, sd: float, precision: int = 1) -> str:
    """
    >>> format_mean_sd(2.5, 1.2909944)
    '2.5 ± 1.3'
    """
    return f"{mean:.{precision}f} ± {sd:.{precision}f}"


def seed_statistics(records: Any) -> 'pd.DataFrame':
    """
    Mean and sample standard deviation of the score over seeds for every
    (setting, task, configuration, language). A single seed has sd 0.
    """
    import pandas as pd
    from kantele.analysis._marginals import _as_frame
    frame = _as_frame(records)
    keys = ['setting', 'task'] + CONFIG_COLUMNS + ['language']
    stats = frame.groupby(keys, sort=True)['score'].agg(['mean', 'std', 'count']).reset_index()
    stats = stats.rename(columns={'std': 'sd', 'count': 'seeds'})
    stats['sd'] = stats['sd'].fillna(0.0)
    return stats


def report_tables(records: Any, precision: int = 1) -> Dict[Tuple[str, str], 'pd.DataFrame']:
    """
    Build one wide table per (setting, task).
    The `avg` column is the arithmetic mean of the language means.
    """
    import pandas as pd
    from kantele.utils.exceptions import ValidationError
    stats = seed_statistics(records)
    if stats.empty:
        raise ValidationError("Cannot build a report without records.")
    tables = {}
    for (setting, task), part in stats.groupby(['setting', 'task'], sort=True):
        means = part.pivot_table(index=CONFIG_COLUMNS, columns='language', values='mean')
        sds = part.pivot_table(index=CONFIG_COLUMNS, columns='language', values='sd')
        table = pd.DataFrame(index=means.index)
        for language in means.columns:
            table[language] = [
                (format_mean_sd(m, s, precision) if pd.notna(m) else '')
                for m, s in zip(means[language], sds[language])
            ]
        table['avg'] = [f"{v:.{precision}f}" for v in means.mean(axis=1)]
        tables[(setting, task)] = table.reset_index()
    return tables


def _markdown(table: 'pd.DataFrame') -> str:
    columns = [str(c) for c in table.columns]
    lines = [
        '| ' + ' | '.join(columns) + ' |',
        '| ' + ' | '.join('---' for _ in columns) + ' |',
    ]
    for row in table.itertuples(index=False):
        lines.append('| ' + ' | '.join(str(v) for v in row) + ' |')
    return '\n'.join(lines) + '\n'


def emit_report(
        records: Any,
        out_dir: PathLike,
        precision: int = 1,
        debug: bool = False,
    ) -> List[pathlib.Path]:
    """
    Write `report_<setting>_<task>.tsv` and a combined `report.md`.

    Returns
    -------
    The paths written.
    """
    from kantele.utils.debug import dprint
    from kantele.config.static import _static_config
    filenames = _static_config()['filenames']
    out_dir = pathlib.Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    tables = report_tables(records, precision=precision)
    paths, sections = [], []
    for (setting, task), table in tables.items():
        path = out_dir / filenames['report_tsv'].format(setting=setting, task=task)
        table.to_csv(path, sep='\t', index=False)
        paths.append(path)
        sections.append(f"## {setting} / {task}\n\n" + _markdown(table))
        if debug:
            dprint(f"Wrote {len(table)} row(s) to '{path}'.")
    md_path = out_dir / filenames['report_md']
    md_path.write_text('\n'.join(sections), encoding='utf-8')
    paths.append(md_path)
    return paths
