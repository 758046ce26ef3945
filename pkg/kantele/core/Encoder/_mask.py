#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Masked-language-model corruption.
"""

from __future__ import annotations
import numpy as np
from kantele.utils.typing import Any, Iterable, Tuple, Union

IGNORE_INDEX = -100


def mlm_mask(
        batch: np.ndarray,
        mask_prob: float,
        seed: Union[int, Any, np.random.Generator],
        mask_id: int,
        special_ids: Iterable[int],
        vocab_size: int,
    ) -> Tuple[np.ndarray, np.ndarray]:
    """
    Corrupt a batch of token ids for masked-language modelling.

    Each non-special position is selected with probability `mask_prob`. Selected
    positions become the mask token 80% of the time, a uniformly random content
    token 10% of the time, and stay unchanged otherwise.

    Parameters
    ----------
    batch: np.ndarray
        Integer ids of any shape. Padding must be one of `special_ids`.

    mask_prob: float
        Selection probability.

    seed: Union[int, Sequence[int], np.random.Generator]
        Seed (or generator) for the selection and replacement draws.

    mask_id: int
        The mask token id.

    special_ids: Iterable[int]
        Ids never selected. They occupy the lowest ids of the vocabulary.

    vocab_size: int
        Random replacements are drawn from the ids above the specials.

    Returns
    -------
    The corrupted batch and the labels (original ids at selected positions, -100 elsewhere).
    """
    batch = np.asarray(batch, dtype=np.int64)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    special_ids = np.asarray(sorted(set(special_ids)), dtype=np.int64)
    eligible = ~np.isin(batch, special_ids)
    selected = (rng.random(batch.shape) < mask_prob) & eligible
    choice = rng.random(batch.shape)
    low = int(special_ids.max()) + 1 if special_ids.size else 0
    random_tokens = rng.integers(low, max(vocab_size, low + 1), size=batch.shape)

    corrupted = batch.copy()
    to_mask = selected & (choice < 0.8)
    to_random = selected & (choice >= 0.8) & (choice < 0.9)
    corrupted[to_mask] = mask_id
    corrupted[to_random] = random_tokens[to_random]
    labels = np.where(selected, batch, IGNORE_INDEX)
    return corrupted, labels
