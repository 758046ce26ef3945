#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
The forward pass, the MLM head and freezing.
"""

from __future__ import annotations
import numpy as np
from kantele.utils.typing import List, Optional, Sequence, Tuple

FROZEN_PREFIXES = ('blocks.', 'embeddings.position')
_NEG_INF = -1e9


def frozen_names(self) -> List[str]:
    """Parameters frozen during the initial pretraining window."""
    return [name for name in self.params if name.startswith(FROZEN_PREFIXES)]


def set_frozen(self, frozen: bool) -> None:
    """Freeze (or unfreeze) the transformer blocks and positional embeddings."""
    for name in self.frozen_names():
        self.params[name].requires_grad = not frozen


def pad_batch(self, sequences: Sequence[Sequence[int]], pad_id: int = 0) -> Tuple[np.ndarray, np.ndarray]:
    """Right-pad id sequences into an int array and a boolean attention mask."""
    from kantele.utils.exceptions import ValidationError
    length = max(len(s) for s in sequences)
    if length > self.config.max_positions:
        raise ValidationError(
            f"Sequence of length {length} exceeds max_positions {self.config.max_positions}."
        )
    ids = np.full((len(sequences), length), pad_id, dtype=np.int64)
    mask = np.zeros((len(sequences), length), dtype=bool)
    for i, s in enumerate(sequences):
        ids[i, :len(s)] = s
        mask[i, :len(s)] = True
    return ids, mask


def forward(self, ids: np.ndarray, mask: Optional[np.ndarray] = None) -> 'kantele.autograd.Tensor':
    """
    Contextual vectors for a (batch, length) id array.

    Parameters
    ----------
    ids: np.ndarray
        Token ids of shape (batch, length).

    mask: Optional[np.ndarray], default None
        `True` at real tokens, `False` at padding.

    Returns
    -------
    A `Tensor` of shape (batch, length, model_dim).
    """
    from kantele.autograd import embedding, layer_norm, linear, softmax, gelu, matmul
    p, c = self.params, self.config
    ids = np.asarray(ids, dtype=np.int64)
    B, T = ids.shape
    H, dh = c.heads, c.head_dim
    if mask is None:
        mask = np.ones((B, T), dtype=bool)
    bias = np.where(mask, 0.0, _NEG_INF).astype(self.dtype)[:, None, None, :]

    h = embedding(p['embeddings.word'], ids) + p['embeddings.position'][:T]
    h = layer_norm(h, p['embeddings.norm.weight'], p['embeddings.norm.bias'])

    def heads(x):
        return x.reshape(B, T, H, dh).transpose((0, 2, 1, 3))

    for i in range(c.layers):
        b = f'blocks.{i}.'
        q = heads(linear(h, p[b + 'attn.q.weight'], p[b + 'attn.q.bias']))
        k = heads(linear(h, p[b + 'attn.k.weight'], p[b + 'attn.k.bias']))
        v = heads(linear(h, p[b + 'attn.v.weight'], p[b + 'attn.v.bias']))
        scores = matmul(q, k.swapaxes(-1, -2)) * (1.0 / np.sqrt(dh)) + bias
        context = matmul(softmax(scores, axis=-1), v).transpose((0, 2, 1, 3)).reshape(B, T, c.model_dim)
        attended = linear(context, p[b + 'attn.o.weight'], p[b + 'attn.o.bias'])
        h = layer_norm(h + attended, p[b + 'norm1.weight'], p[b + 'norm1.bias'])
        hidden = gelu(linear(h, p[b + 'ffn.in.weight'], p[b + 'ffn.in.bias']))
        out = linear(hidden, p[b + 'ffn.out.weight'], p[b + 'ffn.out.bias'])
        h = layer_norm(h + out, p[b + 'norm2.weight'], p[b + 'norm2.bias'])
    return h


def encode_batch(
        self,
        sequences: Sequence[Sequence[int]],
        pad_id: int = 0,
    ) -> Tuple['kantele.autograd.Tensor', np.ndarray]:
    """Pad `sequences` and run the encoder. Returns the vectors and the attention mask."""
    ids, mask = self.pad_batch(sequences, pad_id=pad_id)
    return self.forward(ids, mask), mask


def mlm_logits(self, hidden: 'kantele.autograd.Tensor') -> 'kantele.autograd.Tensor':
    """Vocabulary logits through the head tied to the word embeddings."""
    from kantele.autograd import linear, gelu, layer_norm, matmul
    p = self.params
    x = gelu(linear(hidden, p['mlm.dense.weight'], p['mlm.dense.bias']))
    x = layer_norm(x, p['mlm.norm.weight'], p['mlm.norm.bias'])
    return matmul(x, p['embeddings.word'].T) + p['mlm.bias']


def mlm_loss(
        self,
        ids: np.ndarray,
        labels: np.ndarray,
        mask: Optional[np.ndarray] = None,
    ) -> 'kantele.autograd.Tensor':
    """Mean cross-entropy at labelled positions (label -100 elsewhere)."""
    from kantele.autograd import cross_entropy
    labels = np.asarray(labels)
    rows = np.nonzero(labels != -100)
    hidden = self.forward(ids, mask)
    selected = hidden[rows]
    return cross_entropy(self.mlm_logits(selected), labels[rows])
