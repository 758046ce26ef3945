#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Greedy pair-merge vocabulary training.
"""

from __future__ import annotations
import collections
import heapq
import itertools
from kantele.utils.typing import Iterable, Dict, Optional, List, Tuple


def _merge_symbols(symbols: List[str], pair: Tuple[str, str]) -> List[str]:
    """Replace every non-overlapping occurrence of `pair`, left to right."""
    out, i, n = [], 0, len(symbols)
    first, second = pair
    while i < n:
        if i < n - 1 and symbols[i] == first and symbols[i + 1] == second:
            out.append(first + second)
            i += 2
        else:
            out.append(symbols[i])
            i += 1
    return out


def train_subword(
        lines: Iterable[str],
        vocab_size: int,
        specials: Optional[Dict[str, str]] = None,
        marker: str = '▁',
        max_lines: Optional[int] = 5_000_000,
        normalization: Optional[str] = 'NFC',
        debug: bool = False,
    ) -> 'kantele.core.SubwordModel.SubwordModel':
    """
    Train a vocabulary of exactly `vocab_size` tokens.

    The base alphabet holds each observed character twice, with and without the
    boundary marker, so any word over the alphabet encodes without unknown tokens.

    The highest-frequency adjacent pair is merged until the budget is reached;
    ties go to the lexicographically smallest pair. Training is a pure function
    of the input lines and their order.

    Parameters
    ----------
    lines: Iterable[str]
        Training text. Only the first `max_lines` lines are read.

    vocab_size: int
        The exact vocabulary size, special tokens included.

    specials: Optional[Dict[str, str]], default None
        Role -> surface string of the special tokens.

    marker: str, default '▁'
        The word-boundary marker.

    Returns
    -------
    A trained `SubwordModel`.

    Examples
    --------
    >>> train_subword(['abab ab'] * 1000, vocab_size=11).merges
    [('▁a', 'b'), ('a', 'b')]
    """
    from kantele.core.SubwordModel import SubwordModel, DEFAULT_SPECIALS
    from kantele.config.static import _static_config
    from kantele.utils.exceptions import ValidationError
    specials = dict(specials or DEFAULT_SPECIALS)
    roles = _static_config()['subword']['specials']
    scaffold = SubwordModel(
        [specials.get(r, '') for r in roles], [], specials=specials,
        marker=marker, normalization=normalization,
    )

    word_counts = collections.Counter()
    for line in (itertools.islice(lines, max_lines) if max_lines else lines):
        word_counts.update(scaffold.normalize(line).split())

    words = [scaffold.word_symbols(w) for w in word_counts]
    freqs = [word_counts[w] for w in word_counts]
    ### Every observed character in both its word-initial and word-internal form.
    characters = {c for w in word_counts for c in w}
    alphabet = sorted(
        (characters | {marker + c for c in characters}) - set(specials.values())
    )
    base = len(specials) + len(alphabet)
    if vocab_size < base:
        raise ValidationError(
            f"vocab_size {vocab_size} is smaller than the {len(alphabet)}-symbol alphabet "
            + f"({len(characters)} characters, word-initial and word-internal) "
            + f"plus {len(specials)} special tokens."
        )

    vocab = [specials[r] for r in roles] + alphabet
    in_vocab = set(vocab)
    merges = []

    pair_counts = collections.defaultdict(int)
    where = collections.defaultdict(set)
    for wi, syms in enumerate(words):
        for pair in zip(syms, syms[1:]):
            pair_counts[pair] += freqs[wi]
            where[pair].add(wi)
    heap = [(-c, pair) for pair, c in pair_counts.items()]
    heapq.heapify(heap)

    while len(vocab) < vocab_size:
        if not heap:
            raise ValidationError(
                f"The training text supports at most {len(vocab)} tokens "
                + f"(requested {vocab_size})."
            )
        negc, pair = heapq.heappop(heap)
        count = pair_counts.get(pair, 0)
        if count <= 0 or -negc != count:
            continue

        merges.append(pair)
        new_token = pair[0] + pair[1]
        if new_token not in in_vocab:
            vocab.append(new_token)
            in_vocab.add(new_token)

        touched = set()
        for wi in sorted(where.pop(pair, ())):
            syms, f = words[wi], freqs[wi]
            merged = _merge_symbols(syms, pair)
            if len(merged) == len(syms):
                continue
            for p in zip(syms, syms[1:]):
                pair_counts[p] -= f
                touched.add(p)
            for p in zip(merged, merged[1:]):
                pair_counts[p] += f
                where[p].add(wi)
                touched.add(p)
            words[wi] = merged
        pair_counts.pop(pair, None)
        touched.discard(pair)
        for p in touched:
            c = pair_counts.get(p, 0)
            if c > 0:
                heapq.heappush(heap, (-c, p))
            else:
                pair_counts.pop(p, None)

    if debug:
        from kantele.utils.debug import dprint
        dprint(
            f"Trained {len(vocab)} tokens ({len(alphabet)} symbols, {len(merges)} merges) "
            + f"from {len(word_counts)} word types."
        )
    return SubwordModel(
        vocab, merges, specials=specials, marker=marker, normalization=normalization,
    )
