#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Tag accuracy and unlabeled attachment score.
"""

from __future__ import annotations
from kantele.utils.typing import Any, List, Sequence


def score_predictions(
        gold: Sequence['Sentence'],
        predicted: Sequence[Sequence[Any]],
        task: str,
    ) -> float:
    """
    Percentage of words whose predicted tag (`pos`) or head (`uas`) matches the gold one.

    >>> from kantele.tasks import Sentence
    >>> s = Sentence(['a', 'b'], ['X', 'Y'], [0, 1])
    >>> score_predictions([s], [[0, 0]], 'uas')
    50.0
    """
    from kantele.utils.exceptions import ValidationError
    if task not in ('pos', 'uas'):
        raise ValidationError(f"Unknown task '{task}'.")
    if len(gold) != len(predicted):
        raise ValidationError(
            f"{len(predicted)} predicted sentences for {len(gold)} gold sentences."
        )
    total = correct = 0
    for sentence, prediction in zip(gold, predicted):
        reference = sentence.upos if task == 'pos' else sentence.head
        if len(prediction) != len(reference):
            raise ValidationError(
                f"Prediction has {len(prediction)} words, the gold sentence has {len(reference)}."
            )
        total += len(reference)
        correct += sum(1 for p, g in zip(prediction, reference) if p == g)
    if total == 0:
        raise ValidationError("Cannot score an empty test set.")
    return 100.0 * correct / total


def evaluate(model: Any, sentences: Sequence['Sentence'], task: str) -> float:
    """Score `model.predict(sentences)` against the gold annotation, in [0, 100]."""
    from kantele.utils.exceptions import ValidationError
    if not sentences:
        raise ValidationError("Cannot evaluate on an empty test set.")
    return score_predictions(sentences, model.predict(sentences), task)


def score_files(gold_path, pred_path, task: str) -> float:
    """Score a predicted CoNLL-U file against a gold one."""
    from kantele.tasks._conllu import read_conllu
    gold, pred = read_conllu(gold_path), read_conllu(pred_path)
    predicted = [(s.upos if task == 'pos' else s.head) for s in pred]
    return score_predictions(gold, predicted, task)
