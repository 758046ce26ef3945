#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
word2vec-style text files: a `rows dims` header, then one `token v1 v2 ...` line per row.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import PathLike


def write_word2vec(matrix: 'kantele.transplant.EmbeddingMatrix', path: PathLike) -> pathlib.Path:
    """Write `matrix` with round-trip exact float formatting."""
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(f"{matrix.vocab_size} {matrix.dim}\n")
        for token, row in zip(matrix.vocab, matrix.matrix):
            f.write(token + ' ' + ' '.join('{:.17g}'.format(float(x)) for x in row) + '\n')
    return path


def read_word2vec(path: PathLike, dtype: str = 'float64') -> 'kantele.transplant.EmbeddingMatrix':
    """
    Read a word2vec text file.

    Raises
    ------
    `ValidationError` on a malformed header or row, with the offending line number.
    """
    import numpy as np
    from kantele.transplant import EmbeddingMatrix
    from kantele.utils.exceptions import ValidationError, CorpusReadError
    path = pathlib.Path(path)
    try:
        f = open(path, 'r', encoding='utf-8', newline='\n')
    except OSError as e:
        raise CorpusReadError(path, e)

    with f:
        header = f.readline().split()
        try:
            rows, dims = int(header[0]), int(header[1])
        except (IndexError, ValueError):
            raise ValidationError(f"{path}:1: expected a 'rows dims' header.")
        vocab, matrix = [], np.empty((rows, dims), dtype=dtype)
        for lineno, line in enumerate(f, start=2):
            line = line.rstrip('\n')
            if not line:
                continue
            parts = line.rstrip(' ').split(' ')
            if len(parts) != dims + 1:
                raise ValidationError(
                    f"{path}:{lineno}: expected {dims} values, found {len(parts) - 1}."
                )
            if len(vocab) >= rows:
                raise ValidationError(f"{path}:{lineno}: more rows than the header declares.")
            try:
                matrix[len(vocab)] = [float(x) for x in parts[1:]]
            except ValueError as e:
                raise ValidationError(f"{path}:{lineno}: {e}")
            vocab.append(parts[0])

    if len(vocab) != rows:
        raise ValidationError(f"{path}: header declares {rows} rows, found {len(vocab)}.")
    return EmbeddingMatrix(vocab=vocab, matrix=matrix)
