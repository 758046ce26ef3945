#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Downstream evaluation: CoNLL-U treebanks, UPOS tagging and biaffine parsing,
and the few-shot, full fine-tuning and zero-shot protocols.
"""

from kantele.tasks._conllu import Sentence, parse_conllu, read_conllu, write_conllu
from kantele.tasks._treebank import Treebank, cap_sentences, sample_sentences
from kantele.tasks._heads import BiaffineHead, biaffine_scores
from kantele.tasks._models import WordModel, Tagger, Parser
from kantele.tasks._finetune import (
    FinetuneConfig, FinetuneResult, finetune, finetune_pos, finetune_parser,
)
from kantele.tasks._evaluate import evaluate, score_predictions, score_files
from kantele.tasks._protocols import run_setting, aggregate_records, SETTINGS

__all__ = (
    'Sentence', 'parse_conllu', 'read_conllu', 'write_conllu', 'Treebank', 'cap_sentences',
    'sample_sentences', 'BiaffineHead', 'biaffine_scores', 'WordModel', 'Tagger', 'Parser',
    'FinetuneConfig', 'FinetuneResult', 'finetune', 'finetune_pos', 'finetune_parser',
    'evaluate', 'score_predictions', 'score_files', 'run_setting', 'aggregate_records',
    'SETTINGS',
)
