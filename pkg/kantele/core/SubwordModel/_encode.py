#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Apply a trained merge table to text.
"""

from __future__ import annotations
import unicodedata
from kantele.utils.typing import List, Optional, Tuple


def normalize(self, text: str) -> str:
    """Apply the model's Unicode normal form and collapse whitespace."""
    if self.normalization:
        text = unicodedata.normalize(self.normalization, text)
    return ' '.join(text.split())


def word_symbols(self, word: str) -> List[str]:
    """Split a word into characters, marking the first one as word-initial."""
    if not word:
        return []
    return [self.marker + word[0]] + list(word[1:])


def encode_word(self, word: str) -> Tuple[str, ...]:
    """
    Merge a single word's symbols, lowest-ranked pair first.
    Symbols outside the vocabulary become the unknown token.
    """
    cached = self._cache.get(word, None)
    if cached is not None:
        return cached

    symbols = self.word_symbols(word)
    while len(symbols) > 1:
        best_rank, best_pair = None, None
        for pair in zip(symbols, symbols[1:]):
            rank = self.ranks.get(pair, None)
            if rank is not None and (best_rank is None or rank < best_rank):
                best_rank, best_pair = rank, pair
        if best_pair is None:
            break
        first, second = best_pair
        merged, i = [], 0
        while i < len(symbols):
            if i < len(symbols) - 1 and symbols[i] == first and symbols[i + 1] == second:
                merged.append(first + second)
                i += 2
            else:
                merged.append(symbols[i])
                i += 1
        symbols = merged

    unk = self.specials['unknown']
    pieces = tuple(s if s in self.token_to_id else unk for s in symbols)
    if len(self._cache) < 500_000:
        self._cache[word] = pieces
    return pieces


def tokenize(self, text: str) -> List[str]:
    """Return the token strings for `text` (no begin/end tokens)."""
    tokens = []
    for word in self.normalize(text).split():
        tokens.extend(self.encode_word(word))
    return tokens


def encode(self, text: str, add_special_tokens: bool = False) -> List[int]:
    """
    Encode `text` into token ids.

    Parameters
    ----------
    text: str
        The text to encode.

    add_special_tokens: bool, default False
        If `True`, wrap the ids in the begin and end tokens.

    Returns
    -------
    A list of token ids.
    """
    ids = [self.token_to_id[t] for t in self.tokenize(text)]
    if add_special_tokens:
        ids = [self.begin_id] + ids + [self.end_id]
    return ids


def encode_words(
        self,
        words: List[str],
        max_length: Optional[int] = None,
    ) -> Tuple[List[int], List[int]]:
    """
    Encode a pre-split sentence, wrapped in begin and end tokens.

    Returns the ids and, per word, the position of its first piece.
    When the sentence does not fit in `max_length`, words are first cut down to
    their first piece and then trailing words are dropped, so the positions list
    may be shorter than `words`.
    """
    pieces = [
        [self.token_to_id[t] for t in self.encode_word(self.normalize(w).replace(' ', '') or w)]
        for w in words
    ]
    pieces = [p or [self.unk_id] for p in pieces]
    total = sum(len(p) for p in pieces) + 2
    if max_length is not None and total > max_length:
        pieces = [p[:1] for p in pieces]
        pieces = pieces[:max(max_length - 2, 0)]

    ids, starts = [self.begin_id], []
    for p in pieces:
        starts.append(len(ids))
        ids.extend(p)
    ids.append(self.end_id)
    return ids, starts


def decode(self, ids: List[int]) -> str:
    """Render ids as text, dropping pad, begin, end and mask tokens."""
    skip = {self.pad_id, self.begin_id, self.end_id, self.mask_id}
    text = ''.join(self.vocab[i] for i in ids if i not in skip)
    return text.replace(self.marker, ' ').strip()
