#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Task fine-tuning with periodic dev evaluation and patience-based early stopping.
"""

from __future__ import annotations
from dataclasses import dataclass, field, asdict, replace
from kantele.utils.typing import Any, Dict, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class FinetuneConfig:
    """The fine-tuning regime. `patience_epochs=None` disables early stopping."""
    learning_rate: float = 5e-6
    schedule: str = 'constant'
    max_epochs: int = 64
    eval_interval_epochs: int = 2
    patience_epochs: Optional[int] = 8
    batch_size: int = 72
    max_grad_norm: float = 1.0
    max_train_sentences: Optional[int] = 32_768
    few_shot_sentences: int = 512
    dev_carve_out: int = 300
    max_sequence_length: int = 256
    arc_dim: int = 64
    seeds: Tuple[int, ...] = (1, 2, 3, 4)

    def __post_init__(self):
        from kantele.utils.exceptions import ValidationError
        if self.schedule != 'constant':
            raise ValidationError(f"Fine-tuning supports only a constant schedule (got '{self.schedule}').")
        if self.max_epochs < 1 or self.eval_interval_epochs < 1 or self.batch_size < 1:
            raise ValidationError("max_epochs, eval_interval_epochs and batch_size must be positive.")
        if self.patience_epochs is not None:
            if self.patience_epochs < 1 or self.patience_epochs % self.eval_interval_epochs != 0:
                raise ValidationError(
                    f"patience_epochs {self.patience_epochs} must be a positive multiple "
                    + f"of eval_interval_epochs {self.eval_interval_epochs}."
                )
        object.__setattr__(self, 'seeds', tuple(self.seeds))

    @classmethod
    def from_config(cls, cf: Optional[Dict[str, Any]] = None, **overrides) -> 'FinetuneConfig':
        """Build from the `finetune` config section."""
        from kantele.utils.misc import filter_keywords
        if cf is None:
            from kantele.config import get_config
            cf = get_config('finetune')
        kw = filter_keywords(cls, **cf)
        kw.update(overrides)
        return cls(**kw)

    def with_patience(self, patience_epochs: Optional[int]) -> 'FinetuneConfig':
        return replace(self, patience_epochs=patience_epochs)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class FinetuneResult:
    """The fine-tuned model (restored to its best dev evaluation) and its trajectory."""
    model: Any
    trajectory: List[Dict[str, Any]] = field(default_factory=list)
    best_epoch: Optional[int] = None
    best_dev: Optional[float] = None
    epochs_run: int = 0


def _warn_if_all_unknown(tokenizer, sentences) -> None:
    from kantele.utils.warnings import warn
    unk = tokenizer.specials['unknown']
    total = known = 0
    for s in sentences:
        for w in s.words:
            pieces = tokenizer.encode_word(w)
            total += len(pieces)
            known += sum(1 for p in pieces if p != unk)
    if total and not known:
        warn("Every training token is unknown to the vocabulary; fine-tuning anyway.", stack=False)


def finetune(
        model: Any,
        train: Sequence['Sentence'],
        dev: Sequence['Sentence'],
        config: FinetuneConfig,
        seed: int = 0,
        debug: bool = False,
        _progress: Optional['rich.progress.Progress'] = None,
    ) -> FinetuneResult:
    """
    Fine-tune `model` (a `Tagger` or `Parser`) in place.

    Training shuffles `train` every epoch with a seeded generator. Every
    `config.eval_interval_epochs` epochs the dev score is measured; training stops once
    `config.patience_epochs` epochs pass without improvement. The parameters of the best
    dev evaluation are restored at the end.

    Returns
    -------
    A `FinetuneResult`.
    """
    import numpy as np
    from more_itertools import chunked
    from kantele.autograd import Adam, gradient, clip_grad_norm
    from kantele.tasks._evaluate import evaluate
    from kantele.utils.exceptions import ValidationError
    from kantele.utils.debug import dprint, _checkpoint

    train = list(train)
    if not train:
        raise ValidationError("Fine-tuning needs at least one training sentence.")
    _warn_if_all_unknown(model.tokenizer, train)
    model.encoder.set_frozen(False)
    rng = np.random.default_rng(seed)
    adam = Adam(model.params, lr=config.learning_rate)

    trajectory, best_epoch, best_dev, best_snapshot = [], None, None, None
    _task = (
        _progress.add_task(f'Fine-tuning {model.task}', total=config.max_epochs)
        if _progress is not None else None
    )
    epoch = 0
    for epoch in range(1, config.max_epochs + 1):
        losses = []
        order = rng.permutation(len(train))
        for chunk in chunked(order, config.batch_size):
            batch = [train[i] for i in chunk]
            loss, grads = gradient(
                lambda: model.loss(batch), model.params, context={'epoch': epoch},
            )
            grads, _ = clip_grad_norm(grads, config.max_grad_norm)
            adam.step(grads, lr=config.learning_rate)
            losses.append(loss)
        _checkpoint(_progress=_progress, _task=_task)

        if epoch % config.eval_interval_epochs != 0 or not dev:
            continue
        dev_score = evaluate(model, dev, model.task)
        trajectory.append({'epoch': epoch, 'train_loss': float(np.mean(losses)), 'dev_score': dev_score})
        if best_dev is None or dev_score > best_dev:
            best_dev, best_epoch, best_snapshot = dev_score, epoch, model.snapshot()
        if debug:
            dprint(
                f"Epoch {epoch}: loss {np.mean(losses):.4f}, dev {dev_score:.2f} "
                + f"(best {best_dev:.2f} at epoch {best_epoch})",
                _progress = _progress,
            )
        if config.patience_epochs is not None and epoch - best_epoch >= config.patience_epochs:
            break

    if best_snapshot is not None:
        model.restore(best_snapshot)
    return FinetuneResult(
        model = model,
        trajectory = trajectory,
        best_epoch = best_epoch,
        best_dev = best_dev,
        epochs_run = epoch,
    )


def _model_from(checkpoint: Any, dtype: Optional[str] = None):
    """An independent encoder copy from a checkpoint or an encoder."""
    from kantele.core.Encoder import Encoder
    if isinstance(checkpoint, Encoder):
        checkpoint = checkpoint.checkpoint()
    return checkpoint.to_encoder(dtype=dtype)


def finetune_pos(
        checkpoint: Any,
        train: Sequence['Sentence'],
        dev: Sequence['Sentence'],
        config: FinetuneConfig,
        seed: int,
        tokenizer: 'kantele.core.SubwordModel.SubwordModel',
        tags: Optional[Sequence[str]] = None,
        **kw
    ) -> FinetuneResult:
    """
    Fine-tune a UPOS tagger from `checkpoint` (an `EncoderCheckpoint` or `Encoder`, copied).
    The tag inventory defaults to the sorted tags of `train`.
    """
    from kantele.tasks._models import Tagger
    tags = sorted({t for s in train for t in s.upos}) if tags is None else list(tags)
    model = Tagger(
        _model_from(checkpoint), tokenizer, tags, seed=seed,
        max_sequence_length=config.max_sequence_length,
    )
    return finetune(model, train, dev, config, seed=seed, **kw)


def finetune_parser(
        checkpoint: Any,
        train: Sequence['Sentence'],
        dev: Sequence['Sentence'],
        config: FinetuneConfig,
        seed: int,
        tokenizer: 'kantele.core.SubwordModel.SubwordModel',
        **kw
    ) -> FinetuneResult:
    """Fine-tune a biaffine parser from `checkpoint` (copied)."""
    from kantele.tasks._models import Parser
    model = Parser(
        _model_from(checkpoint), tokenizer, arc_dim=config.arc_dim, seed=seed,
        max_sequence_length=config.max_sequence_length,
    )
    return finetune(model, train, dev, config, seed=seed, **kw)
