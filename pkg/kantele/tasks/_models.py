#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Task models: an encoder with a tagging or parsing head over first-subword word vectors.
"""

from __future__ import annotations
import numpy as np
from kantele.utils.typing import Dict, List, Sequence, Tuple

_NEG_INF = -1e9


class WordModel:
    """
    Shared plumbing for models that read one vector per word.

    Parameters
    ----------
    encoder: Encoder
        Fine-tuned in place together with the head.

    tokenizer: SubwordModel
        The encoder's vocabulary.

    max_sequence_length: int, default 256
        Subword budget per sentence, begin and end included.
    """

    task: str = ''

    def __init__(self, encoder, tokenizer, max_sequence_length: int = 256):
        self.encoder = encoder
        self.tokenizer = tokenizer
        self.max_sequence_length = min(max_sequence_length, encoder.config.max_positions)
        self.head_params: Dict[str, 'kantele.autograd.Tensor'] = {}
        self._params = None

    @property
    def params(self) -> Dict[str, 'kantele.autograd.Tensor']:
        if self._params is None:
            self._params = {'encoder.' + k: v for k, v in self.encoder.params.items()}
            self._params.update({'head.' + k: v for k, v in self.head_params.items()})
        return self._params

    def snapshot(self) -> Dict[str, np.ndarray]:
        return {name: p.data.copy() for name, p in self.params.items()}

    def restore(self, snapshot: Dict[str, np.ndarray]) -> None:
        for name, p in self.params.items():
            p.data = snapshot[name].copy()

    def word_vectors(
            self,
            sentences: Sequence['Sentence'],
        ) -> Tuple['kantele.autograd.Tensor', np.ndarray, List[int]]:
        """
        First-subword vectors of every word, padded to the longest sentence.

        Returns the (batch, words, d) vectors, a (batch, words) mask, and per sentence
        the number of words that fit in the subword budget.
        """
        encoded = [
            self.tokenizer.encode_words(s.words, max_length=self.max_sequence_length)
            for s in sentences
        ]
        hidden, _ = self.encoder.encode_batch([ids for ids, _ in encoded], pad_id=self.tokenizer.pad_id)
        n = max(max(len(s.words) for s in sentences), 1)
        positions = np.zeros((len(sentences), n), dtype=np.int64)
        mask = np.zeros((len(sentences), n), dtype=bool)
        fitted = []
        for b, (_, starts) in enumerate(encoded):
            positions[b, :len(starts)] = starts
            mask[b, :len(starts)] = True
            fitted.append(len(starts))
        rows = np.repeat(np.arange(len(sentences))[:, None], n, axis=1)
        return hidden[(rows, positions)], mask, fitted


class Tagger(WordModel):
    """A linear UPOS classifier over word vectors."""

    task = 'pos'

    def __init__(self, encoder, tokenizer, tags: Sequence[str], seed: int = 0, max_sequence_length: int = 256):
        from kantele.autograd import Tensor
        super().__init__(encoder, tokenizer, max_sequence_length)
        self.tags = list(tags)
        self.tag_to_id = {t: i for i, t in enumerate(self.tags)}
        d, c = encoder.config.model_dim, len(self.tags)
        rng = np.random.default_rng(seed)
        self.head_params = {
            'weight': Tensor(
                rng.normal(0.0, 1.0 / np.sqrt(d), size=(d, c)).astype(encoder.dtype),
                requires_grad=True, name='weight',
            ),
            'bias': Tensor(np.zeros(c, dtype=encoder.dtype), requires_grad=True, name='bias'),
        }

    def logits(self, sentences: Sequence['Sentence']):
        from kantele.autograd import linear
        vectors, mask, fitted = self.word_vectors(sentences)
        return linear(vectors, self.head_params['weight'], self.head_params['bias']), mask, fitted

    def loss(self, sentences: Sequence['Sentence']) -> 'kantele.autograd.Tensor':
        from kantele.autograd import cross_entropy
        logits, mask, _ = self.logits(sentences)
        targets = np.full(mask.shape, -100, dtype=np.int64)
        for b, s in enumerate(sentences):
            for i, tag in enumerate(s.upos[:mask.shape[1]]):
                if mask[b, i] and tag in self.tag_to_id:
                    targets[b, i] = self.tag_to_id[tag]
        return cross_entropy(logits, targets)

    def predict(self, sentences: Sequence['Sentence'], batch_size: int = 32) -> List[List[str]]:
        """A tag per word. Words past the subword budget get the first tag."""
        from kantele.autograd import no_grad
        from more_itertools import chunked
        out = []
        with no_grad():
            for chunk in chunked(sentences, batch_size):
                logits, _, fitted = self.logits(chunk)
                best = logits.data.argmax(axis=-1)
                for b, s in enumerate(chunk):
                    tags = [self.tags[j] for j in best[b, :fitted[b]]]
                    out.append(tags + [self.tags[0]] * (len(s.words) - fitted[b]))
        return out


class Parser(WordModel):
    """A biaffine head selector over word vectors."""

    task = 'uas'

    def __init__(self, encoder, tokenizer, arc_dim: int = 64, seed: int = 0, max_sequence_length: int = 256):
        from kantele.tasks._heads import BiaffineHead
        super().__init__(encoder, tokenizer, max_sequence_length)
        self.biaffine = BiaffineHead(encoder.config.model_dim, arc_dim, seed=seed, dtype=encoder.dtype)
        self.head_params = self.biaffine.params

    def logits(self, sentences: Sequence['Sentence']):
        """Per-dependent head logits of shape (batch, words, words + 1)."""
        vectors, mask, fitted = self.word_vectors(sentences)
        scores = self.biaffine.scores(vectors)
        head_mask = np.concatenate([np.ones((mask.shape[0], 1), dtype=bool), mask], axis=1)
        bias = np.where(head_mask, 0.0, _NEG_INF).astype(self.encoder.dtype)[:, None, :]
        return scores.swapaxes(-1, -2) + bias, mask, fitted

    def loss(self, sentences: Sequence['Sentence']) -> 'kantele.autograd.Tensor':
        from kantele.autograd import cross_entropy
        logits, mask, fitted = self.logits(sentences)
        targets = np.full(mask.shape, -100, dtype=np.int64)
        for b, s in enumerate(sentences):
            for i, h in enumerate(s.head[:fitted[b]]):
                if h <= fitted[b]:
                    targets[b, i] = h
        return cross_entropy(logits, targets)

    def predict(self, sentences: Sequence['Sentence'], batch_size: int = 32) -> List[List[int]]:
        """A head per word by independent argmax. Words past the subword budget attach to the root."""
        from kantele.autograd import no_grad
        from more_itertools import chunked
        out = []
        with no_grad():
            for chunk in chunked(sentences, batch_size):
                logits, _, fitted = self.logits(chunk)
                best = logits.data.argmax(axis=-1)
                for b, s in enumerate(chunk):
                    heads = [int(h) for h in best[b, :fitted[b]]]
                    out.append(heads + [0] * (len(s.words) - fitted[b]))
        return out
