#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Value types for embedding transplants.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from kantele.utils.typing import List, Dict, Optional, Iterator, Tuple


@dataclass
class EmbeddingMatrix:
    """
    A dense (vocab_size x dim) matrix with the token string of every row.

    `provenance`, when set, records how each row was produced
    (`'copy'`, `'combine'` or `'fallback'`).
    """
    vocab: List[str]
    matrix: 'np.ndarray'
    provenance: Optional[List[str]] = None

    def __post_init__(self):
        import numpy as np
        from kantele.utils.exceptions import ValidationError
        self.matrix = np.asarray(self.matrix)
        if self.matrix.ndim != 2:
            raise ValidationError(f"Embedding matrix must be 2-D (got shape {self.matrix.shape}).")
        if self.matrix.shape[0] != len(self.vocab):
            raise ValidationError(
                f"Embedding matrix has {self.matrix.shape[0]} rows "
                + f"for a vocabulary of {len(self.vocab)} tokens."
            )
        if not np.all(np.isfinite(self.matrix)):
            raise ValidationError("Embedding matrix contains non-finite values.")
        if self.provenance is not None and len(self.provenance) != len(self.vocab):
            raise ValidationError("Provenance must have one entry per row.")

    @property
    def vocab_size(self) -> int:
        return self.matrix.shape[0]

    @property
    def dim(self) -> int:
        return self.matrix.shape[1]

    def __len__(self) -> int:
        return self.vocab_size


@dataclass
class AuxiliaryEmbeddings:
    """Per-token vectors in the new vocabulary's id order. Unseen tokens have zero rows."""
    vocab: List[str]
    vectors: 'np.ndarray'

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def seen(self) -> 'np.ndarray':
        """Boolean mask of rows with a nonzero vector."""
        import numpy as np
        return np.any(self.vectors != 0, axis=1)


@dataclass
class OverlapMap:
    """Pairs (new id, old id) of tokens shared by two vocabularies."""
    pairs: Dict[int, int] = field(default_factory=dict)
    special_ids: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, new_id: int) -> bool:
        return new_id in self.pairs

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self.pairs.items()))

    def __getitem__(self, new_id: int) -> int:
        return self.pairs[new_id]

    @property
    def new_ids(self) -> List[int]:
        return sorted(self.pairs)

    @property
    def old_ids(self) -> List[int]:
        return [self.pairs[i] for i in self.new_ids]
