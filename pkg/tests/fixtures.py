#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Synthetic corpora, treebanks and run files shared by the tests.
"""

import pathlib
import numpy as np
from kantele.tasks import Sentence, write_conllu
from kantele.core.Record import ResultRecord

### Ten lines with hand-counted outcomes under the default thresholds.
CLEANING_LINES = [
    'the cat sat on the mat',
    'hello world',
    'a',
    'hello world',
    'abcdefghijklmnopqrstuvwxyzabcdefg a b c',
    '1234 5678',
    'supercalifragilisticexpialidocious antidisestablishmentarianism',
    'kissa istuu matolla',
    '',
    'ab 12',
]
CLEANING_EXPECTED = {
    'lines_in': 10,
    'lines_kept': 4,
    'duplicates_removed': 1,
    'too_few_tokens': 2,
    'avg_token_too_long': 1,
    'token_too_long': 1,
    'insufficient_alphabetic': 1,
    'langid_english': 0,
    'encoding': 0,
}

SYLLABLES = {
    'aa': ['ka', 'mi', 'to', 'na', 'su', 'le', 'vi', 'ro'],
    'bb': ['ke', 'mo', 'ti', 'nu', 'sa', 'li', 'vo', 'ra'],
}

LEXICON = {
    'kala': 'NOUN',
    'talo': 'NOUN',
    'mies': 'NOUN',
    'juoksee': 'VERB',
    'näkee': 'VERB',
    'syö': 'VERB',
    'iso': 'ADJ',
    'pieni': 'ADJ',
}


def toy_lines(language: str, count: int, seed: int = 0):
    """Lines of 3-7 words built from the language's syllables."""
    rng = np.random.default_rng(seed)
    syllables = SYLLABLES[language]
    lines = []
    for _ in range(count):
        words = []
        for _ in range(int(rng.integers(3, 8))):
            parts = rng.choice(syllables, size=int(rng.integers(1, 4)))
            words.append(''.join(parts))
        lines.append(' '.join(words))
    return lines


def write_lines(path, lines) -> pathlib.Path:
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        for line in lines:
            f.write(line + '\n')
    return path


def toy_sentences(count: int, seed: int = 0, language: str = ''):
    """
    Sentences over `LEXICON`: every tag is a function of the word and
    every word attaches to the previous one (the first to the root).
    """
    rng = np.random.default_rng(seed)
    words = sorted(LEXICON)
    sentences = []
    for _ in range(count):
        n = int(rng.integers(3, 7))
        picked = [words[i] for i in rng.integers(0, len(words), size=n)]
        sentences.append(Sentence(
            words = picked,
            upos = [LEXICON[w] for w in picked],
            head = list(range(n)),
            language = language,
        ))
    return sentences


def lexicon_lines(count: int = 400, seed: int = 0):
    """Plain text over `LEXICON`, for training a tokenizer that covers the treebanks."""
    return [' '.join(s.words) for s in toy_sentences(count, seed=seed)]


def write_treebank(directory, language: str, train: int = 24, test: int = 8, seed: int = 0):
    """Write `<language>-train.conllu` and `<language>-test.conllu`; returns split -> path."""
    directory = pathlib.Path(directory)
    paths = {}
    if train:
        paths['train'] = write_conllu(
            toy_sentences(train, seed=seed, language=language),
            directory / f"{language}-train.conllu",
        )
    if test:
        paths['test'] = write_conllu(
            toy_sentences(test, seed=seed + 1, language=language),
            directory / f"{language}-test.conllu",
        )
    return paths


def toy_records(
        languages=('aa', 'bb'),
        seeds=(1, 2),
        lapt_steps=(100_000, 200_000),
        vocab_sizes=(16_384, 32_768),
        alphas=(0.1, 0.2),
        tasks=('pos', 'uas'),
        setting='full_finetune',
        seed: int = 0,
    ):
    """A full grid of records with scores that depend on every parameter plus noise."""
    rng = np.random.default_rng(seed)
    records = []
    for language_i, language in enumerate(languages):
        for task in tasks:
            for steps in lapt_steps:
                for vocab_size in vocab_sizes:
                    for alpha in alphas:
                        for s in seeds:
                            score = (
                                60.0 + 5.0 * language_i + (10.0 if task == 'pos' else 0.0)
                                + steps / 100_000 + vocab_size / 16_384 - 10.0 * alpha
                                + rng.normal(0.0, 0.5)
                            )
                            records.append(ResultRecord(
                                language = language,
                                task = task,
                                setting = setting,
                                lapt_steps = steps,
                                vocab_size = vocab_size,
                                alpha = alpha,
                                finetuning_lines = 512,
                                seed = s,
                                score = float(score),
                            ))
    return records


def write_run_config(directory, name: str = 'toy', extra: dict = None, treebank: bool = True):
    """
    Write a two-language desk-profile run file with its corpora and treebanks
    under `directory` and return the YAML path.
    """
    from kantele.utils.yaml import yaml
    directory = pathlib.Path(directory)
    data_dir = directory / 'data'
    languages = {}
    for i, (code, resource) in enumerate((('aa', 'high'), ('bb', 'low'))):
        path = write_lines(data_dir / f"{code}.txt", toy_lines(code, 200, seed=i))
        languages[code] = {'files': [str(path)], 'resource': resource}
    if treebank:
        languages['aa']['treebank'] = {
            k: str(v) for k, v in write_treebank(data_dir, 'aa', seed=3).items()
        }
    raw = {
        'name': name,
        'profile': 'desk',
        'output_dir': str(directory / 'out'),
        'languages': languages,
    }
    for key, value in (extra or {}).items():
        raw[key] = value
    path = directory / f"{name}.yaml"
    with open(path, 'w', encoding='utf-8') as f:
        yaml.dump(raw, f)
    return path


### Small enough for a whole grid to run in seconds.
TINY_RUN = {
    'subword': {'max_lines': 10_000, 'length_sample_lines': 50},
    'transplant': {'aux_dim': 8, 'source_vocab_size': 48, 'k': 4},
    'encoder': {'layers': 1, 'model_dim': 8, 'ffn_dim': 16, 'heads': 2, 'max_positions': 64},
    'pretrain': {
        'freeze_steps': 1, 'batch_size': 4, 'dev_lines': 8, 'dev_eval_interval': 1,
        'max_sequence_length': 64, 'learning_rate': 0.01,
    },
    'finetune': {
        'max_epochs': 2, 'eval_interval_epochs': 1, 'patience_epochs': 1, 'batch_size': 8,
        'max_sequence_length': 64, 'arc_dim': 4, 'dev_carve_out': 4, 'seeds': [1, 2],
    },
    'grid': {
        'lapt_steps': [2, 3],
        'vocab_size': [36, 40],
        'alpha': [0.1, 0.3],
        'settings': ['full_finetune'],
        'tasks': ['pos', 'uas'],
    },
}
