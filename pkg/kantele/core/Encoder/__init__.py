#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
A post-norm transformer encoder with a tied masked-language-model head.

Parameters are named tensors:

```
embeddings.word, embeddings.position, embeddings.norm.{weight,bias}
blocks.{i}.attn.{q,k,v,o}.{weight,bias}
blocks.{i}.norm1.{weight,bias}, blocks.{i}.norm2.{weight,bias}
blocks.{i}.ffn.{in,out}.{weight,bias}
mlm.dense.{weight,bias}, mlm.norm.{weight,bias}, mlm.bias
```
"""

from __future__ import annotations
from dataclasses import dataclass, field, asdict
from kantele.utils.typing import Dict, Optional, Any, List


@dataclass(frozen=True)
class EncoderConfig:
    """Architecture dimensions. The defaults are desk-sized."""
    vocab_size: int
    layers: int = 2
    model_dim: int = 64
    ffn_dim: int = 256
    heads: int = 2
    max_positions: int = 256
    init_std: float = 0.02

    def __post_init__(self):
        from kantele.utils.exceptions import ValidationError
        for key in ('vocab_size', 'layers', 'model_dim', 'ffn_dim', 'heads', 'max_positions'):
            if getattr(self, key) < 1:
                raise ValidationError(f"EncoderConfig.{key} must be positive (got {getattr(self, key)}).")
        if self.model_dim % self.heads != 0:
            raise ValidationError(
                f"model_dim {self.model_dim} is not divisible by heads {self.heads}."
            )

    @property
    def head_dim(self) -> int:
        return self.model_dim // self.heads

    @classmethod
    def from_config(cls, vocab_size: int, cf: Optional[Dict[str, Any]] = None) -> 'EncoderConfig':
        """Build from the `encoder` config section."""
        from kantele.utils.misc import filter_keywords
        if cf is None:
            from kantele.config import get_config
            cf = get_config('encoder')
        kw = filter_keywords(cls, **cf)
        kw.pop('vocab_size', None)
        return cls(vocab_size=vocab_size, **kw)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class PretrainConfig:
    """The masked-language-model schedule."""
    total_steps: int
    freeze_steps: int = 10_000
    mask_prob: float = 0.15
    learning_rate: float = 1e-5
    schedule: str = 'linear'
    batch_size: int = 200
    max_grad_norm: float = 1.0
    dev_eval_interval: Optional[int] = None
    max_sequence_length: int = 256
    seed: int = 0

    def __post_init__(self):
        from kantele.utils.exceptions import ValidationError
        if self.total_steps < 1:
            raise ValidationError(f"total_steps must be positive (got {self.total_steps}).")
        if not 0 <= self.freeze_steps <= self.total_steps:
            raise ValidationError(
                f"freeze_steps {self.freeze_steps} must be between 0 and total_steps {self.total_steps}."
            )
        if not 0.0 <= self.mask_prob <= 1.0:
            raise ValidationError(f"mask_prob must be in [0, 1] (got {self.mask_prob}).")
        if self.schedule not in ('linear', 'constant'):
            raise ValidationError(f"Unknown schedule '{self.schedule}'.")
        if self.batch_size < 1:
            raise ValidationError(f"batch_size must be positive (got {self.batch_size}).")
        if self.max_sequence_length < 3:
            raise ValidationError("max_sequence_length must leave room for begin, end and one token.")

    @property
    def eval_interval(self) -> int:
        if self.dev_eval_interval:
            return int(self.dev_eval_interval)
        return max(self.total_steps // 50, 100)

    def learning_rate_at(self, step: int) -> float:
        """The learning rate for the update taken at `step` (0-based)."""
        if self.schedule == 'constant':
            return self.learning_rate
        return self.learning_rate * (1.0 - step / self.total_steps)

    @classmethod
    def from_config(cls, cf: Optional[Dict[str, Any]] = None, **overrides) -> 'PretrainConfig':
        """Build from the `pretrain` config section."""
        from kantele.utils.misc import filter_keywords
        if cf is None:
            from kantele.config import get_config
            cf = get_config('pretrain')
        kw = filter_keywords(cls, **cf)
        kw.update(overrides)
        return cls(**kw)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class EncoderCheckpoint:
    """An immutable snapshot of an encoder (and optionally its optimizer)."""
    config: EncoderConfig
    params: Dict[str, 'np.ndarray']
    step: int = 0
    dev_loss: float = float('nan')
    optimizer: Optional[Dict[str, Dict[str, Any]]] = None

    def to_encoder(self, dtype: Optional[str] = None) -> 'Encoder':
        encoder = Encoder(self.config, dtype=(dtype or str(next(iter(self.params.values())).dtype)))
        encoder.load_state_dict(self.params)
        return encoder

    from ._checkpoint import write


class Encoder:
    """
    A transformer encoder built by `build_encoder`.

    Parameters
    ----------
    config: EncoderConfig
        The architecture.

    dtype: str, default 'float64'
        The parameter dtype.
    """

    def __init__(self, config: EncoderConfig, dtype: str = 'float64'):
        self.config = config
        self.dtype = dtype
        self.params: Dict[str, 'kantele.autograd.Tensor'] = {}

    def __repr__(self) -> str:
        c = self.config
        return (
            f"Encoder(layers={c.layers}, model_dim={c.model_dim}, heads={c.heads}, "
            + f"vocab_size={c.vocab_size}, parameters={self.num_parameters()})"
        )

    def num_parameters(self) -> int:
        return int(sum(p.data.size for p in self.params.values()))

    def state_dict(self) -> Dict[str, 'np.ndarray']:
        return {name: p.data.copy() for name, p in self.params.items()}

    def load_state_dict(self, state: Dict[str, 'np.ndarray']) -> None:
        import numpy as np
        from kantele.autograd import Tensor
        from kantele.utils.exceptions import ValidationError
        missing = set(self.params or state) - set(state)
        if missing:
            raise ValidationError(f"Missing parameters: {sorted(missing)}")
        for name, array in state.items():
            current = self.params.get(name, None)
            if current is not None and current.shape != array.shape:
                raise ValidationError(
                    f"Parameter '{name}' has shape {array.shape}, expected {current.shape}."
                )
            self.params[name] = Tensor(
                np.array(array, dtype=self.dtype), requires_grad=True, name=name,
            )

    def embedding_matrix(self) -> 'np.ndarray':
        return self.params['embeddings.word'].data

    def checkpoint(
            self,
            step: int = 0,
            dev_loss: float = float('nan'),
            optimizer: Optional['kantele.autograd.Adam'] = None,
        ) -> EncoderCheckpoint:
        return EncoderCheckpoint(
            config = self.config,
            params = self.state_dict(),
            step = step,
            dev_loss = dev_loss,
            optimizer = (optimizer.state_dict() if optimizer is not None else None),
        )

    from ._forward import (
        forward, encode_batch, pad_batch, mlm_logits, mlm_loss, set_frozen, frozen_names,
    )


from kantele.core.Encoder._build import build_encoder
from kantele.core.Encoder._mask import mlm_mask
from kantele.core.Encoder._pretrain import pretrain, PretrainResult, write_trajectory
from kantele.core.Encoder._checkpoint import read_checkpoint

EncoderCheckpoint.read = staticmethod(read_checkpoint)
