#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Biaffine arc scoring.

For word vectors r_1..r_n and a learned root vector r_0:

    h_i^head = FFN_head(r_i),  h_j^dep = FFN_dep(r_j)
    score(i -> j) = h_j^dep . U . h_i^head + W . h_i^head + b

giving an (n + 1) x n matrix whose column j is a distribution over heads of word j
after a softmax.
"""

from __future__ import annotations
import numpy as np
from kantele.utils.typing import Dict, Optional, Union


class BiaffineHead:
    """
    The parameters of a biaffine arc scorer.

    Parameters
    ----------
    input_dim: int
        The encoder's model dimension d.

    arc_dim: int
        The FFN output size d_a.

    seed: int, default 0
        Initialization seed.
    """

    def __init__(self, input_dim: int, arc_dim: int, seed: int = 0, dtype: str = 'float64'):
        from kantele.autograd import Tensor
        from kantele.utils.exceptions import ValidationError
        if arc_dim < 1:
            raise ValidationError(f"arc_dim must be positive (got {arc_dim}).")
        self.input_dim = input_dim
        self.arc_dim = arc_dim
        rng = np.random.default_rng(seed)
        d, a = input_dim, arc_dim
        shapes = {
            'head_ffn.in.weight': (d, a), 'head_ffn.in.bias': (a,),
            'head_ffn.out.weight': (a, a), 'head_ffn.out.bias': (a,),
            'dep_ffn.in.weight': (d, a), 'dep_ffn.in.bias': (a,),
            'dep_ffn.out.weight': (a, a), 'dep_ffn.out.bias': (a,),
            'U': (a, a), 'W': (a,), 'b': (1,), 'root': (d,),
        }
        self.params: Dict[str, Tensor] = {}
        for name, shape in shapes.items():
            if name.endswith('bias') or name == 'b':
                data = np.zeros(shape)
            elif name == 'root':
                data = rng.normal(0.0, 0.02, size=shape)
            else:
                data = rng.normal(0.0, 1.0 / np.sqrt(shape[0]), size=shape)
            self.params[name] = Tensor(data.astype(dtype), requires_grad=True, name=name)

    def _ffn(self, prefix: str, x):
        from kantele.autograd import linear, relu
        p = self.params
        hidden = relu(linear(x, p[prefix + '.in.weight'], p[prefix + '.in.bias']))
        return linear(hidden, p[prefix + '.out.weight'], p[prefix + '.out.bias'])

    def scores(self, vectors) -> 'kantele.autograd.Tensor':
        """
        Batched scores.

        Parameters
        ----------
        vectors: Tensor
            Word vectors of shape (batch, n, d), without the root.

        Returns
        -------
        A `Tensor` of shape (batch, n + 1, n). Row 0 scores the root as head.
        """
        from kantele.autograd import as_tensor, concat, matmul
        p = self.params
        vectors = as_tensor(vectors)
        B, n, d = vectors.shape
        root = p['root'].reshape(1, 1, d) + np.zeros((B, 1, d), dtype=vectors.dtype)
        with_root = concat([root, vectors], axis=1)
        h_head = self._ffn('head_ffn', with_root)
        h_dep = self._ffn('dep_ffn', vectors)
        bilinear = matmul(matmul(h_head, p['U'].T), h_dep.swapaxes(-1, -2))
        linear_term = matmul(h_head, p['W'].reshape(self.arc_dim, 1))
        return bilinear + linear_term + p['b']


def biaffine_scores(vectors, head: BiaffineHead) -> 'kantele.autograd.Tensor':
    """
    The (n + 1) x n score matrix of one sentence.

    >>> head = BiaffineHead(input_dim=4, arc_dim=2)
    >>> biaffine_scores(np.ones((3, 4)), head).shape
    (4, 3)
    """
    from kantele.autograd import as_tensor
    vectors = as_tensor(vectors)
    n, d = vectors.shape
    return head.scores(vectors.reshape(1, n, d)).reshape(n + 1, n)
