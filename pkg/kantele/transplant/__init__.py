#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Move a pretrained embedding matrix onto a new vocabulary.

Rows of tokens shared by both vocabularies are copied. Every other row is a
sparse convex combination of the copied rows, weighted by how similar the
tokens are in a small auxiliary embedding space trained on target-language text.

```
>>> from kantele.transplant import compute_overlap, train_auxiliary_embeddings, focus_initialize
>>> overlap = compute_overlap(source_model, target_model)
>>> aux = train_auxiliary_embeddings(lines, target_model, aux_dim=100)
>>> matrix = focus_initialize(source_matrix, overlap, target_model, aux, k=10)
```
"""

from kantele.transplant._types import EmbeddingMatrix, AuxiliaryEmbeddings, OverlapMap
from kantele.transplant._auxiliary import train_auxiliary_embeddings
from kantele.transplant._overlap import compute_overlap, canonical_form
from kantele.transplant._focus import sparsemax, focus_initialize, random_embeddings, transplant_report
from kantele.transplant._io import write_word2vec, read_word2vec

__all__ = (
    'EmbeddingMatrix', 'AuxiliaryEmbeddings', 'OverlapMap', 'train_auxiliary_embeddings',
    'compute_overlap', 'canonical_form', 'sparsemax', 'focus_initialize', 'random_embeddings',
    'transplant_report', 'write_word2vec', 'read_word2vec',
)
