#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Initialize a new embedding matrix from an old one.
"""

from __future__ import annotations
from kantele.utils.typing import Any, Dict, List, Optional, Union


def sparsemax(scores: 'np.ndarray') -> 'np.ndarray':
    """
    Project `scores` onto the probability simplex.

    >>> sparsemax([1.0, 0.0, 0.0])
    array([1., 0., 0.])
    >>> sparsemax([0.5, 0.3, 0.2])
    array([0.5, 0.3, 0.2])
    """
    import numpy as np
    from kantele.utils.exceptions import ValidationError
    z = np.asarray(scores, dtype=np.float64)
    if z.ndim != 1 or z.size == 0:
        raise ValidationError("sparsemax requires a nonempty vector.")
    if not np.all(np.isfinite(z)):
        raise ValidationError("sparsemax requires finite scores.")

    z_sorted = np.sort(z)[::-1]
    cumulative = np.cumsum(z_sorted)
    ks = np.arange(1, z.size + 1)
    support = ks[1.0 + ks * z_sorted > cumulative]
    k = support[-1]
    tau = (cumulative[k - 1] - 1.0) / k
    return np.maximum(z - tau, 0.0)


def _as_array(old_emb: Any) -> 'np.ndarray':
    import numpy as np
    return np.asarray(getattr(old_emb, 'matrix', old_emb))


def focus_initialize(
        old_emb: Any,
        overlap: 'kantele.transplant.OverlapMap',
        new_vocab: Any,
        aux: 'kantele.transplant.AuxiliaryEmbeddings',
        k: int = 10,
        noise_scale: float = 0.01,
        seed: int = 0,
        chunk_size: int = 1024,
        debug: bool = False,
    ) -> 'kantele.transplant.EmbeddingMatrix':
    """
    Build the embedding matrix of `new_vocab`.

    Overlapping rows are copied from `old_emb`. Each other row is the sparsemax-weighted
    sum of the old rows of its `k` most cosine-similar overlapping tokens in `aux`.
    Tokens whose auxiliary vector is zero get the mean overlapping row plus seeded
    Gaussian noise whose norm is at most `noise_scale` times the mean row norm.

    Parameters
    ----------
    old_emb: Union[EmbeddingMatrix, np.ndarray]
        The source matrix, indexed by old ids.

    overlap: OverlapMap
        New id -> old id pairs.

    new_vocab: Union[SubwordModel, List[str]]
        The new vocabulary.

    aux: AuxiliaryEmbeddings
        Auxiliary vectors indexed by new ids.

    k: int, default 10
        Number of neighbours combined per novel token.

    Returns
    -------
    An `EmbeddingMatrix` whose `provenance` records how each row was built.
    """
    import numpy as np
    from more_itertools import chunked
    from kantele.transplant import EmbeddingMatrix
    from kantele.utils.exceptions import TransplantError, ValidationError
    tokens = list(getattr(new_vocab, 'vocab', new_vocab))
    old = _as_array(old_emb)
    if len(overlap) == 0:
        raise TransplantError("The vocabularies share no tokens; the transplant is undefined.")
    if k < 1:
        raise ValidationError(f"k must be at least 1 (got {k}).")
    if aux.vectors.shape[0] != len(tokens):
        raise ValidationError(
            f"Auxiliary embeddings cover {aux.vectors.shape[0]} tokens, "
            + f"the new vocabulary has {len(tokens)}."
        )

    new = np.zeros((len(tokens), old.shape[1]), dtype=old.dtype)
    provenance = ['copy'] * len(tokens)
    new_ids = np.asarray(overlap.new_ids, dtype=np.int64)
    old_ids = np.asarray(overlap.old_ids, dtype=np.int64)
    new[new_ids] = old[old_ids]

    specials = set(overlap.special_ids)
    vectors = np.asarray(aux.vectors, dtype=np.float64)
    norms = np.linalg.norm(vectors, axis=1)
    pool_mask = np.array([
        (norms[i] > 0 and i not in specials) for i in new_ids
    ], dtype=bool)
    pool_new = new_ids[pool_mask]
    pool_old = old_ids[pool_mask]
    pool_unit = vectors[pool_new] / norms[pool_new][:, None]

    novel = [i for i in range(len(tokens)) if i not in overlap]
    combine = [i for i in novel if norms[i] > 0 and i not in specials and len(pool_new) > 0]
    combine_set = set(combine)
    fallback = [i for i in novel if i not in combine_set]

    kk = min(k, len(pool_new))
    for chunk in chunked(combine, chunk_size):
        chunk = np.asarray(chunk, dtype=np.int64)
        sims = (vectors[chunk] / norms[chunk][:, None]) @ pool_unit.T
        order = np.argsort(-sims, axis=1, kind='stable')[:, :kk]
        for row, token_id in enumerate(chunk):
            neighbours = order[row]
            weights = sparsemax(sims[row, neighbours])
            new[token_id] = weights @ old[pool_old[neighbours]].astype(np.float64)
            provenance[token_id] = 'combine'

    if fallback:
        copied = old[old_ids].astype(np.float64)
        mean_row = copied.mean(axis=0)
        bound = noise_scale * float(np.linalg.norm(copied, axis=1).mean())
        rng = np.random.default_rng(seed)
        noise = rng.normal(0.0, bound / np.sqrt(old.shape[1]), size=(len(fallback), old.shape[1]))
        noise_norms = np.linalg.norm(noise, axis=1, keepdims=True)
        noise = noise * np.minimum(1.0, bound / np.maximum(noise_norms, 1e-300))
        new[fallback] = mean_row[None, :] + noise
        for i in fallback:
            provenance[i] = 'fallback'

    if debug:
        from kantele.utils.debug import dprint
        dprint(
            f"Transplant: {len(new_ids)} copied, {len(combine)} combined, "
            + f"{len(fallback)} fallback rows."
        )
    return EmbeddingMatrix(vocab=tokens, matrix=new, provenance=provenance)


def random_embeddings(
        vocab: Any,
        dim: int,
        seed: int = 0,
        std: float = 0.02,
    ) -> 'kantele.transplant.EmbeddingMatrix':
    """Seeded Gaussian embeddings standing in for a pretrained source model."""
    import numpy as np
    from kantele.transplant import EmbeddingMatrix
    tokens = list(getattr(vocab, 'vocab', vocab))
    rng = np.random.default_rng(seed)
    return EmbeddingMatrix(vocab=tokens, matrix=rng.normal(0.0, std, size=(len(tokens), dim)))


def transplant_report(
        overlap: 'kantele.transplant.OverlapMap',
        matrix: 'kantele.transplant.EmbeddingMatrix',
    ) -> Dict[str, Union[int, float]]:
    """Summarize how the rows of a transplanted matrix were produced."""
    provenance = matrix.provenance or []
    counts = {kind: provenance.count(kind) for kind in ('copy', 'combine', 'fallback')}
    return {
        'vocab_size': matrix.vocab_size,
        'overlap': len(overlap),
        'overlap_specials': sum(1 for i in overlap.special_ids if i in overlap),
        'copied': counts['copy'],
        'combined': counts['combine'],
        'fallback': counts['fallback'],
        'overlap_fraction': len(overlap) / matrix.vocab_size if matrix.vocab_size else 0.0,
    }
