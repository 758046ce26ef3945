#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Match tokens across vocabularies with different boundary-marker conventions.
"""

from __future__ import annotations
from kantele.utils.typing import Any, Dict, List, Optional, Tuple

CONTINUATION_MARKERS = ('##', '@@')


def canonical_form(token: str, marker: str = '▁') -> Tuple[bool, str]:
    """
    Map a token to `(word_initial, body)`.

    Markers in `CONTINUATION_MARKERS` flag word-internal pieces (`'##ing'`);
    any other marker flags word-initial pieces (`'▁foo'`).

    >>> canonical_form('▁foo')
    (True, 'foo')
    >>> canonical_form('foo', marker='##')
    (True, 'foo')
    >>> canonical_form('##oo', marker='##')
    (False, 'oo')
    """
    if marker in CONTINUATION_MARKERS:
        if token.startswith(marker) and len(token) > len(marker):
            return False, token[len(marker):]
        return True, token
    if token.startswith(marker) and len(token) > len(marker):
        return True, token[len(marker):]
    return False, token


def _vocab_info(
        vocab: Any,
        marker: Optional[str],
        specials: Optional[Dict[str, str]],
    ) -> Tuple[List[str], str, Dict[str, str]]:
    if hasattr(vocab, 'token_to_id'):
        return list(vocab.vocab), (marker or vocab.marker), dict(specials or vocab.specials)
    tokens = list(getattr(vocab, 'vocab', vocab))
    return tokens, (marker or '▁'), dict(specials or {})


def compute_overlap(
        old_vocab: Any,
        new_vocab: Any,
        old_marker: Optional[str] = None,
        new_marker: Optional[str] = None,
        old_specials: Optional[Dict[str, str]] = None,
        new_specials: Optional[Dict[str, str]] = None,
    ) -> 'kantele.transplant.OverlapMap':
    """
    Pair every new token with the old token of identical normalized surface form.

    Special tokens are paired by role. When several old tokens share a canonical
    form, the lowest old id wins, so the map stays injective in new ids.

    Parameters
    ----------
    old_vocab: Any
        A `SubwordModel`, an `EmbeddingMatrix`, or a list of token strings.

    new_vocab: Any
        Same as `old_vocab`.

    old_marker: Optional[str], default None
        The boundary marker of the old vocabulary. Defaults to the model's marker or `'▁'`.

    new_marker: Optional[str], default None
        The boundary marker of the new vocabulary.

    old_specials: Optional[Dict[str, str]], default None
        Role -> surface string of the old special tokens.

    new_specials: Optional[Dict[str, str]], default None
        Role -> surface string of the new special tokens.

    Returns
    -------
    An `OverlapMap`.
    """
    from kantele.transplant import OverlapMap
    old_tokens, old_marker, old_specials = _vocab_info(old_vocab, old_marker, old_specials)
    new_tokens, new_marker, new_specials = _vocab_info(new_vocab, new_marker, new_specials)

    old_index = {t: i for i, t in enumerate(old_tokens)}
    new_index = {t: i for i, t in enumerate(new_tokens)}
    pairs, special_new_ids = {}, []
    for role, surface in new_specials.items():
        if surface not in new_index:
            continue
        special_new_ids.append(new_index[surface])
        old_surface = old_specials.get(role, None)
        if old_surface is not None and old_surface in old_index:
            pairs[new_index[surface]] = old_index[old_surface]

    old_special_surfaces = set(old_specials.values())
    canonical_old = {}
    for i, token in enumerate(old_tokens):
        if token in old_special_surfaces:
            continue
        canonical_old.setdefault(canonical_form(token, old_marker), i)

    new_special_surfaces = set(new_specials.values())
    for i, token in enumerate(new_tokens):
        if token in new_special_surfaces:
            continue
        old_id = canonical_old.get(canonical_form(token, new_marker), None)
        if old_id is not None:
            pairs[i] = old_id

    return OverlapMap(pairs=pairs, special_ids=tuple(sorted(special_new_ids)))
