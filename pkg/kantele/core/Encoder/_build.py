#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Parameter initialization.
"""

from __future__ import annotations
from kantele.utils.typing import Any, Optional, List, Tuple


def parameter_shapes(config: 'EncoderConfig') -> List[Tuple[str, Tuple[int, ...], str]]:
    """`(name, shape, init)` for every parameter, in a fixed order. `init` is `normal`, `zeros` or `ones`."""
    d, f, v = config.model_dim, config.ffn_dim, config.vocab_size
    shapes = [
        ('embeddings.word', (v, d), 'normal'),
        ('embeddings.position', (config.max_positions, d), 'normal'),
        ('embeddings.norm.weight', (d,), 'ones'),
        ('embeddings.norm.bias', (d,), 'zeros'),
    ]
    for i in range(config.layers):
        prefix = f'blocks.{i}.'
        for proj in ('q', 'k', 'v', 'o'):
            shapes += [
                (prefix + f'attn.{proj}.weight', (d, d), 'normal'),
                (prefix + f'attn.{proj}.bias', (d,), 'zeros'),
            ]
        shapes += [
            (prefix + 'norm1.weight', (d,), 'ones'),
            (prefix + 'norm1.bias', (d,), 'zeros'),
            (prefix + 'ffn.in.weight', (d, f), 'normal'),
            (prefix + 'ffn.in.bias', (f,), 'zeros'),
            (prefix + 'ffn.out.weight', (f, d), 'normal'),
            (prefix + 'ffn.out.bias', (d,), 'zeros'),
            (prefix + 'norm2.weight', (d,), 'ones'),
            (prefix + 'norm2.bias', (d,), 'zeros'),
        ]
    shapes += [
        ('mlm.dense.weight', (d, d), 'normal'),
        ('mlm.dense.bias', (d,), 'zeros'),
        ('mlm.norm.weight', (d,), 'ones'),
        ('mlm.norm.bias', (d,), 'zeros'),
        ('mlm.bias', (v,), 'zeros'),
    ]
    return shapes


def build_encoder(
        config: 'EncoderConfig',
        embedding: Optional[Any] = None,
        seed: int = 0,
        dtype: str = 'float64',
    ) -> 'Encoder':
    """
    Build an encoder with seeded Gaussian weights.

    Parameters
    ----------
    config: EncoderConfig
        The architecture.

    embedding: Optional[Union[EmbeddingMatrix, np.ndarray]], default None
        If provided, the word embedding table is set to exactly this matrix.

    seed: int, default 0
        Seed for the Gaussian initialization.

    dtype: str, default 'float64'
        Parameter dtype. Use 'float32' for training runs.

    Returns
    -------
    An `Encoder`.
    """
    import numpy as np
    from kantele.core.Encoder import Encoder
    from kantele.autograd import Tensor
    from kantele.utils.exceptions import ValidationError

    table = None
    if embedding is not None:
        table = np.asarray(getattr(embedding, 'matrix', embedding))
        expected = (config.vocab_size, config.model_dim)
        if table.shape != expected:
            raise ValidationError(
                f"Embedding matrix has shape {table.shape}, the encoder expects {expected}."
            )

    rng = np.random.default_rng(seed)
    encoder = Encoder(config, dtype=dtype)
    for name, shape, init in parameter_shapes(config):
        if init == 'normal':
            data = rng.normal(0.0, config.init_std, size=shape)
        elif init == 'ones':
            data = np.ones(shape)
        else:
            data = np.zeros(shape)
        if name == 'embeddings.word' and table is not None:
            data = table
        encoder.params[name] = Tensor(np.array(data, dtype=dtype), requires_grad=True, name=name)
    return encoder
