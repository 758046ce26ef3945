#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Score a predicted CoNLL-U file against the gold annotation.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def evaluate(
        action: Optional[List[str]] = None,
        gold: Optional[str] = None,
        pred: Optional[str] = None,
        tasks: Optional[List[str]] = None,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Print POS accuracy and unlabeled attachment score (both in percent).

    Command:
        `evaluate --gold {gold.conllu} --pred {pred.conllu} [--task pos]`
    """
    from kantele.tasks import score_files
    from kantele.utils.formatting import print_table
    from kantele.utils.exceptions import ValidationError
    if not gold or not pred:
        raise ValidationError("Both `--gold` and `--pred` are required.")
    rows = [{'task': task, 'score': score_files(gold, pred, task)} for task in (tasks or ['pos', 'uas'])]
    print_table(rows, title='Scores', nopretty=nopretty)
    return True, "Success"
