#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Deterministic, order-independent train/dev/test assignment.
"""

from __future__ import annotations
import hashlib
import math


def _line_key(line: str, seed: int) -> bytes:
    h = hashlib.blake2b(digest_size=16, key=str(int(seed)).encode('utf-8'))
    h.update(line.encode('utf-8'))
    return h.digest()


def split_corpus(
        corpus: 'kantele.core.Corpus.LanguageCorpus',
        dev_frac: float = 0.05,
        test_frac: float = 0.05,
        seed: int = 0,
    ) -> 'kantele.core.Corpus.LanguageCorpus':
    """
    Label every line `train`, `dev` or `test`.

    Lines are ranked by a keyed hash of their content; the first
    `floor(n * test_frac)` go to test, the next `floor(n * dev_frac)` to dev,
    and train absorbs the remainder. The assignment of a line therefore depends
    only on the line, the seed, and the corpus size, never on the line order.

    Examples
    --------
    >>> c = split_corpus(LanguageCorpus('fi', [f'line {i}' for i in range(100)]), 0.05, 0.05, 7)
    >>> c.split_counts()
    {'train': 90, 'dev': 5, 'test': 5}
    """
    from kantele.core.Corpus import LanguageCorpus
    from kantele.utils.exceptions import ValidationError
    if dev_frac < 0 or test_frac < 0 or dev_frac + test_frac >= 1:
        raise ValidationError(
            f"Split fractions must be nonnegative and sum below 1 (got {dev_frac} + {test_frac})."
        )
    n = len(corpus.lines)
    ### Guard against 100 * 0.05 = 5.000000000000001 style representation error.
    n_test = math.floor(n * test_frac + 1e-9)
    n_dev = math.floor(n * dev_frac + 1e-9)
    order = sorted(range(n), key=lambda i: (_line_key(corpus.lines[i], seed), corpus.lines[i]))
    splits = ['train'] * n
    for rank, i in enumerate(order):
        if rank < n_test:
            splits[i] = 'test'
        elif rank < n_test + n_dev:
            splits[i] = 'dev'
    return LanguageCorpus(corpus.language, list(corpus.lines), splits)


def split(self, dev_frac: float = 0.05, test_frac: float = 0.05, seed: int = 0):
    """Return a split copy of this corpus. See `split_corpus`."""
    return split_corpus(self, dev_frac, test_frac, seed)
