#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Masked-language-model pretraining with an initial freeze window.
"""

from __future__ import annotations
import pathlib
from dataclasses import dataclass, field
from kantele.utils.typing import Any, Dict, Iterator, List, Optional, Sequence, PathLike


@dataclass
class PretrainResult:
    """The lowest-dev-loss checkpoint, the most recent one, and the recorded trajectory."""
    best: 'EncoderCheckpoint'
    last: 'EncoderCheckpoint'
    trajectory: List[Dict[str, Any]] = field(default_factory=list)
    diverged_at: Optional[int] = None

    @property
    def diverged(self) -> bool:
        return self.diverged_at is not None


def encode_lines(tokenizer, lines: Sequence[str], max_length: int) -> List[List[int]]:
    """Encode lines with begin and end tokens, truncating to `max_length`."""
    out = []
    for line in lines:
        ids = tokenizer.encode(line, add_special_tokens=True)
        if len(ids) > max_length:
            ids = ids[:max_length - 1] + [tokenizer.end_id]
        out.append(ids)
    return out


def _dev_batches(encoder, tokenizer, dev_lines, config) -> List[tuple]:
    """Corrupt the dev set once with a fixed seed so every evaluation sees the same masks."""
    from more_itertools import chunked
    from kantele.core.Encoder import mlm_mask
    batches = []
    sequences = encode_lines(tokenizer, dev_lines, config.max_sequence_length)
    for j, chunk in enumerate(chunked(sequences, config.batch_size)):
        ids, mask = encoder.pad_batch(chunk, pad_id=tokenizer.pad_id)
        corrupted, labels = mlm_mask(
            ids, config.mask_prob, [config.seed, 1, j], tokenizer.mask_id,
            tokenizer.special_ids.values(), tokenizer.vocab_size,
        )
        count = int((labels != -100).sum())
        if count:
            batches.append((corrupted, labels, mask, count))
    return batches


def dev_loss(encoder, batches: List[tuple]) -> float:
    """Label-weighted mean MLM loss over pre-corrupted batches."""
    from kantele.autograd import no_grad
    total, count = 0.0, 0
    with no_grad():
        for corrupted, labels, mask, n in batches:
            total += float(encoder.mlm_loss(corrupted, labels, mask).data) * n
            count += n
    return total / count


def pretrain(
        encoder: 'Encoder',
        stream: Iterator[str],
        config: 'PretrainConfig',
        dev_lines: Sequence[str],
        tokenizer: 'kantele.core.SubwordModel.SubwordModel',
        resume: Optional['EncoderCheckpoint'] = None,
        debug: bool = False,
        _progress: Optional['rich.progress.Progress'] = None,
    ) -> PretrainResult:
    """
    Train `encoder` in place on lines drawn from `stream`.

    Steps below `config.freeze_steps` update only the word embeddings, the embedding
    norm and the MLM head. The learning rate decays linearly to zero at
    `config.total_steps` and the global gradient norm is clipped to
    `config.max_grad_norm`. Dev loss is measured at step 0, every
    `config.eval_interval` steps and at the last step.

    Parameters
    ----------
    encoder: Encoder
        The model to train. It holds the final (not the best) parameters afterwards.

    stream: Iterator[str]
        An infinite line stream, e.g. a `SampleStream`.

    config: PretrainConfig
        The schedule.

    dev_lines: Sequence[str]
        Held-out lines for checkpoint selection.

    tokenizer: SubwordModel
        The vocabulary the encoder was built for.

    resume: Optional[EncoderCheckpoint], default None
        Continue from this checkpoint. The stream is advanced past the lines it consumed.

    Returns
    -------
    A `PretrainResult`. If the loss becomes non-finite, training stops with a warning and
    the result holds the best and last finite checkpoints.
    """
    import numpy as np
    from more_itertools import chunked, consume
    from kantele.autograd import Adam, gradient, clip_grad_norm
    from kantele.core.Encoder import mlm_mask
    from kantele.utils.exceptions import ValidationError, NonFiniteLossError, DivergenceError
    from kantele.utils.warnings import warn
    from kantele.utils.debug import dprint, _checkpoint

    if not dev_lines:
        raise ValidationError("Pretraining needs a nonempty dev set.")
    if tokenizer.vocab_size != encoder.config.vocab_size:
        raise ValidationError(
            f"Tokenizer has {tokenizer.vocab_size} tokens, the encoder expects {encoder.config.vocab_size}."
        )
    batches_dev = _dev_batches(encoder, tokenizer, dev_lines, config)
    if not batches_dev:
        raise ValidationError("The dev set yields no masked positions; add more dev lines.")

    adam = Adam(encoder.params, lr=config.learning_rate)
    start = 0
    if resume is not None:
        encoder.load_state_dict(resume.params)
        if resume.optimizer:
            adam.load_state_dict(resume.optimizer)
        start = resume.step
        consume(stream, start * config.batch_size)

    batches = chunked(stream, config.batch_size)
    specials = list(tokenizer.special_ids.values())
    T, interval = config.total_steps, config.eval_interval

    initial = dev_loss(encoder, batches_dev)
    if not np.isfinite(initial):
        raise DivergenceError("Dev loss is not finite before training", {'step': start})
    best = last = encoder.checkpoint(start, initial, adam)
    trajectory = [{
        'step': start, 'train_loss': float('nan'), 'dev_loss': initial,
        'learning_rate': config.learning_rate_at(start), 'frozen': start < config.freeze_steps,
    }]
    if debug:
        dprint(f"Step {start}: dev loss {initial:.4f}", _progress=_progress)

    _task = (
        _progress.add_task('Pretraining', total=T - start) if _progress is not None else None
    )
    train_losses, diverged_at = [], None
    for step in range(start, T):
        frozen = step < config.freeze_steps
        encoder.set_frozen(frozen)
        sequences = encode_lines(tokenizer, next(batches), config.max_sequence_length)
        ids, mask = encoder.pad_batch(sequences, pad_id=tokenizer.pad_id)
        corrupted, labels = mlm_mask(
            ids, config.mask_prob, [config.seed, 0, step], tokenizer.mask_id,
            specials, tokenizer.vocab_size,
        )
        if (labels != -100).any():
            try:
                loss, grads = gradient(
                    lambda: encoder.mlm_loss(corrupted, labels, mask),
                    encoder.params,
                    context = {'step': step},
                )
            except NonFiniteLossError as e:
                warn(f"Training diverged: {e}. Returning the last finite checkpoint.", stack=False)
                diverged_at = step
                break
            grads, _ = clip_grad_norm(grads, config.max_grad_norm)
            adam.step(grads, lr=config.learning_rate_at(step))
            train_losses.append(loss)
        _checkpoint(_progress=_progress, _task=_task)

        done = step + 1
        if done % interval != 0 and done != T:
            continue
        current = dev_loss(encoder, batches_dev)
        if not np.isfinite(current):
            warn(f"Dev loss is {current} at step {done}. Returning the last finite checkpoint.", stack=False)
            diverged_at = done
            break
        last = encoder.checkpoint(done, current, adam)
        if current < best.dev_loss:
            best = last
        trajectory.append({
            'step': done,
            'train_loss': float(np.mean(train_losses)) if train_losses else float('nan'),
            'dev_loss': current,
            'learning_rate': config.learning_rate_at(step),
            'frozen': frozen,
        })
        train_losses = []
        if debug:
            dprint(
                f"Step {done}: dev loss {current:.4f} (best {best.dev_loss:.4f} at step {best.step})",
                _progress = _progress,
            )

    encoder.set_frozen(False)
    return PretrainResult(best=best, last=last, trajectory=trajectory, diverged_at=diverged_at)


def write_trajectory(trajectory: List[Dict[str, Any]], path: PathLike) -> pathlib.Path:
    """Write the loss trajectory as TSV."""
    import pandas as pd
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(trajectory).to_csv(path, sep='\t', index=False)
    return path
