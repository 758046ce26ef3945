#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Read and write split files and cleaning reports.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import Dict, PathLike, Optional


def write_splits(
        corpus: 'kantele.core.Corpus.LanguageCorpus',
        directory: PathLike,
    ) -> Dict[str, pathlib.Path]:
    """
    Write `<language>.<split>.txt` for every split into `directory`.
    Returns a dictionary of split -> path.
    """
    from kantele.config.static import _static_config
    directory = pathlib.Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = {}
    for split in _static_config()['splits']:
        path = directory / f"{corpus.language}.{split}.txt"
        lines = corpus.split_lines(split)
        with open(path, 'w', encoding='utf-8') as f:
            for line in lines:
                f.write(line + '\n')
        paths[split] = path
    return paths


def read_splits(directory: PathLike, language: str) -> 'kantele.core.Corpus.LanguageCorpus':
    """Read the split files written by `write_splits` back into a `LanguageCorpus`."""
    from kantele.core.Corpus import LanguageCorpus
    from kantele.config.static import _static_config
    from kantele.utils.exceptions import CorpusReadError
    directory = pathlib.Path(directory)
    lines, splits = [], []
    found = False
    for split in _static_config()['splits']:
        path = directory / f"{language}.{split}.txt"
        if not path.exists():
            continue
        found = True
        with open(path, 'r', encoding='utf-8') as f:
            for line in f.read().splitlines():
                lines.append(line)
                splits.append(split)
    if not found:
        raise CorpusReadError(directory / f"{language}.train.txt", "no split files found")
    return LanguageCorpus(language, lines, splits)


def write_filter_stats(
        stats: Dict[str, 'kantele.core.Corpus.FilterStats'],
        path: PathLike,
        split_counts: Optional[Dict[str, Dict[str, int]]] = None,
    ) -> pathlib.Path:
    """
    Write one tab-separated row of cleaning statistics per language.
    If `split_counts` is provided, the per-split line counts are appended as columns.
    """
    import pandas as pd
    rows = []
    for language, s in stats.items():
        row = {'language': language}
        row.update(s.to_dict())
        if split_counts and language in split_counts:
            row.update({f"{k}_lines": v for k, v in split_counts[language].items()})
        rows.append(row)
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(rows).to_csv(path, sep='\t', index=False)
    return path
