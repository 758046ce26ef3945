#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Auxiliary token vectors from co-occurrence statistics.
"""

from __future__ import annotations
from kantele.utils.typing import Iterable, Optional

DENSE_SVD_MAX = 4096


def _cooccurrence(lines: Iterable[str], model, window: int, chunk_lines: int = 20_000):
    """Symmetric window co-occurrence counts as a CSR matrix."""
    import numpy as np
    from scipy import sparse
    from more_itertools import chunked
    V = model.vocab_size
    total = sparse.csr_matrix((V, V), dtype=np.float64)
    num_tokens = 0
    for chunk in chunked(lines, chunk_lines):
        rows, cols = [], []
        for line in chunk:
            ids = np.asarray(model.encode(line), dtype=np.int64)
            num_tokens += len(ids)
            for offset in range(1, window + 1):
                if len(ids) <= offset:
                    break
                rows.append(ids[:-offset])
                cols.append(ids[offset:])
        if not rows:
            continue
        r, c = np.concatenate(rows), np.concatenate(cols)
        data = np.ones(len(r) * 2, dtype=np.float64)
        total = total + sparse.coo_matrix(
            (data, (np.concatenate([r, c]), np.concatenate([c, r]))), shape=(V, V),
        ).tocsr()
    return total, num_tokens


def _ppmi(counts):
    """Positive pointwise mutual information of a sparse count matrix."""
    import numpy as np
    coo = counts.tocoo()
    total = coo.data.sum()
    marginals = np.asarray(counts.sum(axis=1)).ravel()
    pmi = np.log(coo.data * total / (marginals[coo.row] * marginals[coo.col]))
    keep = pmi > 0
    from scipy import sparse
    return sparse.coo_matrix(
        (pmi[keep], (coo.row[keep], coo.col[keep])), shape=counts.shape,
    ).tocsr()


def _svd(matrix, k: int):
    """Leading `k` singular triplets, largest first."""
    import numpy as np
    n = matrix.shape[0]
    if n <= DENSE_SVD_MAX or k >= n - 1:
        U, s, Vt = np.linalg.svd(matrix.toarray())
        return U[:, :k], s[:k], Vt[:k].T
    from scipy.sparse.linalg import svds
    v0 = np.full(n, 1.0 / np.sqrt(n))
    U, s, Vt = svds(matrix, k=k, v0=v0)
    order = np.argsort(-s, kind='stable')
    return U[:, order], s[order], Vt[order].T


def train_auxiliary_embeddings(
        lines: Iterable[str],
        model: 'kantele.core.SubwordModel.SubwordModel',
        aux_dim: int = 100,
        window: int = 5,
        debug: bool = False,
    ) -> 'kantele.transplant.AuxiliaryEmbeddings':
    """
    Factor the PPMI matrix of windowed token co-occurrences.

    Each token's vector is `(u + v) * sqrt(s)` over the kept singular triplets,
    with every component's sign fixed so its largest-magnitude entry is positive.

    Parameters
    ----------
    lines: Iterable[str]
        Target-language text.

    model: SubwordModel
        The new vocabulary. Rows follow its id order.

    aux_dim: int, default 100
        Number of dimensions. Reduced (with a warning) to the PPMI matrix rank.

    window: int, default 5
        Maximum distance between co-occurring tokens.

    Returns
    -------
    An `AuxiliaryEmbeddings` of shape (vocab_size x dims).
    """
    import numpy as np
    from kantele.transplant import AuxiliaryEmbeddings
    from kantele.utils.exceptions import ValidationError
    from kantele.utils.warnings import warn
    if aux_dim < 1 or aux_dim > model.vocab_size:
        raise ValidationError(
            f"aux_dim must be between 1 and the vocabulary size {model.vocab_size} (got {aux_dim})."
        )
    if window < 1:
        raise ValidationError(f"window must be at least 1 (got {window}).")

    counts, num_tokens = _cooccurrence(lines, model, window)
    if num_tokens == 0:
        raise ValidationError("Cannot train auxiliary embeddings on empty text.")
    ppmi = _ppmi(counts)
    if ppmi.nnz == 0:
        raise ValidationError("No token pair has positive association; the text is too small.")

    U, s, V = _svd(ppmi, aux_dim)
    tol = s.max() * max(ppmi.shape) * np.finfo(np.float64).eps
    rank = int(np.sum(s > tol))
    if rank < aux_dim:
        warn(
            f"aux_dim {aux_dim} exceeds the rank {rank} of the co-occurrence matrix; "
            + f"using {rank} dimensions.",
            stack = False,
        )
    U, s, V = U[:, :rank], s[:rank], V[:, :rank]

    vectors = (U + V) * np.sqrt(s)[None, :]
    pivots = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[pivots, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    vectors = vectors * signs[None, :]

    seen = ppmi.getnnz(axis=1) > 0
    vectors[~seen] = 0.0
    if debug:
        from kantele.utils.debug import dprint
        dprint(
            f"Auxiliary embeddings: {int(seen.sum())} of {model.vocab_size} tokens seen, "
            + f"{num_tokens} tokens, {rank} dimensions."
        )
    return AuxiliaryEmbeddings(vocab=list(model.vocab), vectors=vectors)
