#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import numpy as np
import pytest
from kantele.core.SubwordModel import SubwordModel, train_subword, diagnostics_table
from kantele.utils.exceptions import ValidationError
from tests.fixtures import toy_lines

### Latin letters swapped for look-alike Cyrillic ones.
CYRILLIC = str.maketrans({'a': 'а', 'o': 'о', 'e': 'е', 'k': 'к', 'm': 'м', 't': 'т'})


@pytest.fixture(scope='module')
def toy_model():
    return train_subword(toy_lines('aa', 2_000, seed=0), vocab_size=200)


def test_worked_example():
    model = train_subword(['abab ab'] * 1000, vocab_size=11)
    assert model.merges == [('▁a', 'b'), ('a', 'b')]
    assert model.vocab == [
        '<pad>', '<s>', '</s>', '<unk>', '<mask>', 'a', 'b', '▁a', '▁b', '▁ab', 'ab',
    ]
    assert model.tokenize('abab') == ['▁ab', 'ab']
    assert model.decode(model.encode('abab ab')) == 'abab ab'


def test_special_ids():
    model = train_subword(['abab ab'] * 10, vocab_size=10)
    assert (model.pad_id, model.begin_id, model.end_id, model.unk_id, model.mask_id) == (0, 1, 2, 3, 4)
    ids = model.encode('abab', add_special_tokens=True)
    assert ids[0] == model.begin_id and ids[-1] == model.end_id


def test_exact_vocab_size(toy_model):
    assert toy_model.vocab_size == 200
    assert len(set(toy_model.vocab)) == 200


def test_vocab_smaller_than_alphabet():
    with pytest.raises(ValidationError):
        train_subword(['abcdef ghij'], vocab_size=10)


def test_text_too_small_for_vocab():
    with pytest.raises(ValidationError):
        train_subword(['ab'], vocab_size=50)


def test_training_is_deterministic():
    lines = toy_lines('bb', 300, seed=2)
    assert train_subword(lines, vocab_size=80) == train_subword(lines, vocab_size=80)


def test_max_lines_limits_training():
    lines = ['abab ab'] * 10 + ['cdcd cd'] * 10
    model = train_subword(lines, vocab_size=10, max_lines=10)
    assert 'c' not in model.vocab


def test_unknown_symbols(toy_model):
    assert toy_model.tokenize('x') == ['<unk>']
    assert toy_model.unk_id in toy_model.encode('kaxmi')


def test_encode_words_truncation():
    model = train_subword(['abab ab'] * 1000, vocab_size=11)
    ab, sab = model.token_to_id['ab'], model.token_to_id['▁ab']
    ids, starts = model.encode_words(['abab', 'ab'])
    assert ids == [model.begin_id, sab, ab, sab, model.end_id]
    assert starts == [1, 3]
    ids, starts = model.encode_words(['abab', 'ab'], max_length=4)
    assert ids == [model.begin_id, sab, sab, model.end_id]
    assert starts == [1, 2]
    ids, starts = model.encode_words(['abab', 'ab'], max_length=3)
    assert starts == [1]


def test_round_trip_file(toy_model, tmp_path):
    path = toy_model.write(tmp_path / 'subword.model')
    back = SubwordModel.read(path)
    assert back == toy_model
    line = toy_lines('aa', 1, seed=42)[0]
    assert back.encode(line) == toy_model.encode(line)


def test_read_rejects_other_files(tmp_path):
    path = tmp_path / 'bad.model'
    path.write_text('not a model\n', encoding='utf-8')
    with pytest.raises(ValidationError):
        SubwordModel.read(path)


def test_diagnostics_detect_script_shift(toy_model):
    in_domain = toy_lines('aa', 200, seed=9)
    shifted = [line.translate(CYRILLIC) for line in in_domain]
    clean = toy_model.diagnostics(in_domain)
    moved = toy_model.diagnostics(shifted)
    assert clean.unk_unigram_frequency <= 0.005
    assert moved.unk_unigram_frequency >= 0.05
    assert moved.unk_type_frequency > clean.unk_type_frequency
    assert moved.chars_per_token <= 0.6 * clean.chars_per_token
    assert clean.lines == 200
    assert clean.mean_sequence_length == pytest.approx(toy_model.mean_sequence_length(in_domain))


def test_diagnostics_on_empty_sample(toy_model):
    with pytest.raises(ValidationError):
        toy_model.diagnostics([])


def test_diagnostics_table(toy_model):
    small = train_subword(toy_lines('aa', 2_000, seed=0), vocab_size=60)
    df = diagnostics_table(
        {'60': small, '200': toy_model},
        {'aa': toy_lines('aa', 50, seed=3), 'bb': toy_lines('bb', 50, seed=3)},
    )
    assert len(df) == 4
    assert {'vocabulary', 'language', 'chars_per_token', 'unk_unigram_frequency'} <= set(df.columns)
    aa = df[df['language'] == 'aa'].set_index('vocabulary')['chars_per_token']
    assert aa['200'] > aa['60']


def test_characters_are_known_in_every_position():
    model = train_subword(['xa ya'] * 10, vocab_size=12)
    assert model.merges == [('▁x', 'a')]
    assert model.tokenize('ax') == ['▁a', 'x']
    assert model.unk_id not in model.encode('ax yy aaa')


def test_alphabet_holds_both_forms():
    model = train_subword(['ab cd'], vocab_size=13)
    assert sorted(model.alphabet) == ['a', 'b', 'c', 'd', '▁a', '▁b', '▁c', '▁d']
    with pytest.raises(ValidationError):
        train_subword(['ab cd'], vocab_size=12)


def test_character_level_model():
    model = train_subword(['ab cd'] * 5, vocab_size=13)
    assert model.merges == []
    assert model.tokenize('ab cd') == ['▁a', 'b', '▁c', 'd']
    assert model.mean_sequence_length(['ab cd']) == 6.0


def test_whole_word_token_compression():
    model = train_subword(['aaaa'] * 3, vocab_size=10)
    assert model.merges == [('a', 'a'), ('aa', 'a'), ('▁a', 'aaa')]
    assert model.tokenize('aaaa') == ['▁aaaa']
    assert model.diagnostics(['aaaa']).chars_per_token == 4.0


def test_round_trip_over_the_alphabet(toy_model):
    rng = np.random.default_rng(7)
    characters = sorted(set(''.join(toy_lines('aa', 2_000, seed=0)).replace(' ', '')))
    for _ in range(200):
        words = [
            ''.join(rng.choice(characters, size=int(rng.integers(1, 7))))
            for _ in range(int(rng.integers(1, 6)))
        ]
        text = '  '.join(words)
        ids = toy_model.encode(text)
        assert toy_model.unk_id not in ids
        assert toy_model.decode(ids) == ' '.join(words)


def test_unknown_iff_outside_the_alphabet(toy_model):
    rng = np.random.default_rng(11)
    characters = list('kamitonsulevr') + ['x', 'z']
    for _ in range(300):
        word = ''.join(rng.choice(characters, size=int(rng.integers(1, 6))))
        ids = toy_model.encode(word)
        assert all(0 <= i < toy_model.vocab_size for i in ids)
        assert (toy_model.unk_id in ids) == any(c in 'xz' for c in word)


def test_compression_is_monotone_in_the_budget():
    lines = toy_lines('aa', 2_000, seed=0)
    sample = lines[:300]
    previous = None
    for vocab_size in (31, 40, 60, 120, 200):
        model = train_subword(lines, vocab_size=vocab_size)
        stats = model.diagnostics(sample)
        assert stats.mean_sequence_length == pytest.approx(model.mean_sequence_length(sample))
        if previous is not None:
            assert stats.chars_per_token >= previous.chars_per_token
            assert stats.mean_sequence_length <= previous.mean_sequence_length
        previous = stats


def test_doubling_the_budget_shortens_sequences_by_a_tenth():
    ### 15 two-character word types among 118 single-character words: doubling the
    ### character-level budget merges exactly those 15 words into one token each.
    pairs = [x + y for x in 'abc' for y in 'abcde']
    line = ' '.join(pairs + ['d', 'e'] * 59)
    small = train_subword([line] * 4, vocab_size=15)
    large = train_subword([line] * 4, vocab_size=30)
    assert small.merges == [] and len(large.merges) == 15
    assert small.mean_sequence_length([line]) == 150.0
    assert large.mean_sequence_length([line]) == 135.0
    reduction = 1 - large.mean_sequence_length([line]) / small.mean_sequence_length([line])
    assert reduction == pytest.approx(0.10, abs=0.05)
