#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Tabulate sampling distributions for several values of alpha.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import Sequence, PathLike


def sampling_table(
        spec: 'kantele.sampling.SamplingSpec',
        alphas: Sequence[float] = (0.0, 0.1, 0.2, 0.3, 0.4, 1.0),
    ) -> 'pd.DataFrame':
    """
    One row per unit: raw size, capped size, and q at each alpha (`q_0.1`, ...).
    Group rows sum their members' sizes.
    """
    import pandas as pd
    from kantele.sampling._weights import group_languages
    raw = group_languages(spec.raw_sizes(), spec.groups)
    capped = spec.unit_sizes()
    df = pd.DataFrame({
        'unit': list(capped),
        'raw_size': [raw[u] for u in capped],
        'capped_size': [capped[u] for u in capped],
    })
    for alpha in alphas:
        df[f"q_{alpha:g}"] = [w.q for w in spec.weights(alpha)]
    return df


def write_sampling_table(df: 'pd.DataFrame', path: PathLike) -> pathlib.Path:
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, sep='\t', index=False)
    return path
