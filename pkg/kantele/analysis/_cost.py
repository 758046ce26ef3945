#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Parameter counts and training FLOPs of an encoder with a given vocabulary.
"""

from __future__ import annotations
from dataclasses import dataclass, replace
from kantele.utils.typing import Dict, Mapping, Optional, Sequence


@dataclass(frozen=True)
class CostModel:
    """The dimensions that determine an encoder's size."""
    layers: int
    model_dim: int
    ffn_dim: int
    max_positions: int
    vocab_size: int = 0

    def __post_init__(self):
        from kantele.utils.exceptions import ValidationError
        for key in ('layers', 'model_dim', 'ffn_dim', 'max_positions'):
            if int(getattr(self, key)) < 1:
                raise ValidationError(f"CostModel.{key} must be a positive integer.")
        if self.vocab_size < 0:
            raise ValidationError("CostModel.vocab_size must be nonnegative.")

    @property
    def non_embedding_parameters(self) -> int:
        """N: every parameter that does not scale with the vocabulary."""
        return count_parameters(self.with_vocab(0))

    def with_vocab(self, vocab_size: int) -> 'CostModel':
        return replace(self, vocab_size=int(vocab_size))

    @classmethod
    def from_dims(cls, name: str, vocab_size: int = 0) -> 'CostModel':
        """Look up named dimensions under `analysis:cost_dims`."""
        from kantele.config import get_config
        from kantele.utils.exceptions import ValidationError
        dims = get_config('analysis', 'cost_dims', warn=False) or {}
        if name not in dims:
            raise ValidationError(f"Unknown dimensions '{name}'. Choose from {sorted(dims)}.")
        return cls(vocab_size=int(vocab_size), **dims[name])


def count_parameters(model: CostModel) -> int:
    """
    Total parameters of a post-norm encoder with a tied MLM head:

        v*d + pos*d + 2d                                  embeddings and their norm
      + L * (4d^2 + 4d + 2*d*ffn + d + ffn + 4d)          attention, feed-forward, two norms
      + d^2 + d + 2d + v                                  head transform, head norm, output bias

    >>> count_parameters(CostModel(12, 768, 3072, 512, 16_384))
    98640640
    """
    v, d, f = model.vocab_size, model.model_dim, model.ffn_dim
    L, pos = model.layers, model.max_positions
    embeddings = v * d + pos * d + 2 * d
    per_layer = 4 * d * d + 4 * d + 2 * d * f + d + f + 4 * d
    head = d * d + d + 2 * d + v
    return embeddings + L * per_layer + head


def flops_per_token(N: int, d: int, v: int) -> int:
    """
    Training operations per token, `6 * (N + d*v + 2d)`.

    >>> flops_per_token(85_000_000, 768, 16_384)
    585506688
    """
    from kantele.utils.exceptions import ValidationError
    if N <= 0 or d <= 0 or v < 0:
        raise ValidationError("flops_per_token needs positive N and d and a nonnegative v.")
    return 6 * (int(N) + int(d) * int(v) + 2 * int(d))


def model_flops_per_token(model: CostModel) -> int:
    return flops_per_token(model.non_embedding_parameters, model.model_dim, model.vocab_size)


def relative_cost(
        config_a: CostModel,
        config_b: CostModel,
        mean_len_a: float,
        mean_len_b: float,
    ) -> float:
    """How much more it costs to train on a line under `config_a` than under `config_b`."""
    from kantele.utils.exceptions import ValidationError
    if mean_len_a <= 0 or mean_len_b <= 0:
        raise ValidationError("Mean sequence lengths must be positive.")
    return (model_flops_per_token(config_a) * mean_len_a) / (
        model_flops_per_token(config_b) * mean_len_b
    )


def cost_table(
        base: CostModel,
        vocab_sizes: Sequence[int],
        mean_lengths: Optional[Mapping[int, float]] = None,
    ) -> 'pd.DataFrame':
    """
    Parameters and FLOPs per vocabulary size, smallest first, with the percentage
    change in parameters from the next-smaller vocabulary.
    When mean sequence lengths are given, the per-line cost relative to the first row is added.
    """
    import pandas as pd
    rows, previous = [], None
    for v in sorted(int(x) for x in vocab_sizes):
        model = base.with_vocab(v)
        params = count_parameters(model)
        row = {
            'vocab_size': v,
            'parameters': params,
            'parameters_m': round(params / 1e6, 1),
            'pct_change': (100.0 * (params - previous) / previous) if previous else float('nan'),
            'flops_per_token': model_flops_per_token(model),
        }
        if mean_lengths is not None and v in mean_lengths:
            row['mean_length'] = float(mean_lengths[v])
            row['flops_per_line'] = row['flops_per_token'] * row['mean_length']
        rows.append(row)
        previous = params
    frame = pd.DataFrame(rows)
    if 'flops_per_line' in frame.columns:
        frame['relative_cost'] = frame['flops_per_line'] / frame['flops_per_line'].iloc[0]
    return frame


def monolingual_budget(
        sizes: Mapping[str, float],
        total_steps: Optional[int] = None,
        alpha: Optional[float] = None,
    ) -> Dict[str, int]:
    """
    Per-language step budgets for monolingual baselines: the multilingual step budget
    split by the alpha-sampling weights (defaults: `analysis:budget_steps`, `analysis:budget_alpha`).
    """
    from kantele.config import get_config
    from kantele.sampling import compute_sampling_weights, allocate_steps
    if total_steps is None:
        total_steps = get_config('analysis', 'budget_steps')
    if alpha is None:
        alpha = get_config('analysis', 'budget_alpha')
    return allocate_steps(int(total_steps), compute_sampling_weights(sizes, alpha))
