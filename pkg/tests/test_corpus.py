#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import pytest
import numpy as np
import pandas as pd
from kantele.core.Corpus import (
    CleaningConfig, LanguageCorpus, clean_line, clean_corpus, split_corpus,
    write_splits, read_splits, write_filter_stats,
)
from kantele.utils.exceptions import ValidationError, CorpusReadError
from tests.fixtures import CLEANING_LINES, CLEANING_EXPECTED, write_lines, toy_lines


@pytest.mark.parametrize('line,reason', [
    ('hello world', None),
    ('a', 'too_few_tokens'),
    ('', 'too_few_tokens'),
    ('supercalifragilisticexpialidocious antidisestablishmentarianism', 'avg_token_too_long'),
    ('abcdefghijklmnopqrstuvwxyzabcdefg a b c', 'token_too_long'),
    ('1234 5678', 'insufficient_alphabetic'),
    ('ab 12', None),
    ('a1 2', 'insufficient_alphabetic'),
])
def test_clean_line(line: str, reason):
    verdict = clean_line(line)
    assert bool(verdict) == (reason is None)
    assert verdict.reason == reason


def test_langid_rejects_english_only_above_threshold():
    assert clean_line('the cat sat', langid_score=0.95).reason == 'langid_english'
    assert clean_line('the cat sat', langid_score=0.5)
    assert clean_line('the cat sat', langid_score=0.90).reason == 'langid_english'


def test_first_failing_reason_wins():
    config = CleaningConfig(min_tokens=5)
    assert clean_line('1234 5678', config).reason == 'too_few_tokens'


@pytest.mark.parametrize('kw', [
    {'min_tokens': 0},
    {'min_alpha_fraction': 1.5},
    {'langid_reject_threshold': 0.0},
])
def test_invalid_cleaning_config(kw):
    with pytest.raises(ValidationError):
        CleaningConfig(**kw)


def test_clean_corpus_counts(tmp_path):
    path = write_lines(tmp_path / 'fi.txt', CLEANING_LINES)
    corpus, stats = clean_corpus([path], 'fi')
    assert stats.to_dict() == CLEANING_EXPECTED
    assert stats.is_conserved()
    assert corpus.lines == ['the cat sat on the mat', 'hello world', 'kissa istuu matolla', 'ab 12']


def test_duplicates_across_files_keep_first(tmp_path):
    a = write_lines(tmp_path / 'a.txt', ['one two', 'three four'])
    b = write_lines(tmp_path / 'b.txt', ['three four', 'five six'])
    corpus, stats = clean_corpus([a, b], 'fi', workers=2)
    assert corpus.lines == ['one two', 'three four', 'five six']
    assert stats.duplicates_removed == 1
    assert stats.is_conserved()


def test_clean_corpus_is_idempotent_and_keeps_order(tmp_path):
    rng = np.random.default_rng(0)
    pool = CLEANING_LINES + toy_lines('aa', 40, seed=5)
    lines = [pool[i] for i in rng.integers(len(pool), size=120)]
    corpus, _ = clean_corpus([write_lines(tmp_path / 'in.txt', lines)], 'fi')
    assert corpus.lines == list(dict.fromkeys(line for line in lines if clean_line(line)))
    again, stats = clean_corpus([write_lines(tmp_path / 'out.txt', corpus.lines)], 'fi')
    assert again.lines == corpus.lines
    assert stats.lines_kept == stats.lines_in == len(corpus.lines)
    assert stats.duplicates_removed == 0 and stats.lines_rejected == 0



def test_undecodable_lines(tmp_path):
    path = tmp_path / 'bad.txt'
    path.write_bytes(b'good line here\n\xff\xfe broken\n')
    corpus, stats = clean_corpus([path], 'fi')
    assert corpus.lines == ['good line here']
    assert stats.rejections == {'encoding': 1}


def test_normalization_and_whitespace(tmp_path):
    path = write_lines(tmp_path / 'fi.txt', ['  käsi kissa  ', 'käsi kissa'])
    corpus, stats = clean_corpus([path], 'fi')
    assert corpus.lines == ['käsi kissa']
    assert stats.duplicates_removed == 1


def test_missing_file():
    with pytest.raises(CorpusReadError):
        clean_corpus(['/nonexistent/corpus.txt'], 'fi')


def test_langid_callable(tmp_path):
    path = write_lines(tmp_path / 'kpv.txt', ['the english line', 'коми кыв'])
    corpus, stats = clean_corpus(
        [path], 'kpv', langid=lambda line: 1.0 if line.startswith('the') else 0.0,
    )
    assert corpus.lines == ['коми кыв']
    assert stats.rejections == {'langid_english': 1}


@pytest.mark.parametrize('n,expected', [
    (100, {'train': 90, 'dev': 5, 'test': 5}),
    (3, {'train': 3, 'dev': 0, 'test': 0}),
    (0, {'train': 0, 'dev': 0, 'test': 0}),
])
def test_split_sizes(n: int, expected):
    corpus = LanguageCorpus('fi', [f"line {i}" for i in range(n)])
    assert split_corpus(corpus, 0.05, 0.05, seed=0).split_counts() == expected


def test_split_is_order_independent():
    lines = [f"line {i}" for i in range(200)]
    a = split_corpus(LanguageCorpus('fi', lines), 0.1, 0.1, seed=3)
    b = split_corpus(LanguageCorpus('fi', list(reversed(lines))), 0.1, 0.1, seed=3)
    assert set(a.dev) == set(b.dev)
    assert set(a.test) == set(b.test)
    c = split_corpus(LanguageCorpus('fi', lines), 0.1, 0.1, seed=4)
    assert set(c.test) != set(a.test)


def test_split_rejects_bad_fractions():
    with pytest.raises(ValidationError):
        split_corpus(LanguageCorpus('fi', ['a b']), 0.5, 0.5)


def test_splits_round_trip(tmp_path):
    corpus = split_corpus(LanguageCorpus('aa', toy_lines('aa', 50)), 0.1, 0.1, seed=0)
    paths = write_splits(corpus, tmp_path)
    assert sorted(p.name for p in paths.values()) == ['aa.dev.txt', 'aa.test.txt', 'aa.train.txt']
    back = read_splits(tmp_path, 'aa')
    assert back.split_counts() == corpus.split_counts()
    assert back.train == corpus.train
    with pytest.raises(CorpusReadError):
        read_splits(tmp_path, 'bb')


def test_write_filter_stats(tmp_path):
    path = write_lines(tmp_path / 'fi.txt', CLEANING_LINES)
    corpus, stats = clean_corpus([path], 'fi')
    corpus = split_corpus(corpus, 0.0, 0.25)
    out = write_filter_stats({'fi': stats}, tmp_path / 'stats.tsv', {'fi': corpus.split_counts()})
    df = pd.read_csv(out, sep='\t')
    assert df['lines_kept'].iloc[0] == 4
    assert df['test_lines'].iloc[0] == 1
    assert df['train_lines'].iloc[0] == 3
