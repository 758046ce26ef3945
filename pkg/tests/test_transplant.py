#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import numpy as np
import pytest
from kantele.transplant import (
    EmbeddingMatrix, AuxiliaryEmbeddings, OverlapMap, canonical_form, compute_overlap,
    sparsemax, focus_initialize, random_embeddings, transplant_report,
    train_auxiliary_embeddings, write_word2vec, read_word2vec,
)
from kantele.core.SubwordModel import train_subword
from kantele.utils.exceptions import ValidationError, TransplantError
from tests.fixtures import toy_lines

SP_SPECIALS = {'pad': '<pad>', 'begin': '<s>', 'end': '</s>', 'unknown': '<unk>', 'mask': '<mask>'}
WP_SPECIALS = {'pad': '[PAD]', 'begin': '[CLS]', 'end': '[SEP]', 'unknown': '[UNK]', 'mask': '[MASK]'}


@pytest.mark.parametrize('token,marker,expected', [
    ('▁foo', '▁', (True, 'foo')),
    ('foo', '▁', (False, 'foo')),
    ('▁', '▁', (False, '▁')),
    ('foo', '##', (True, 'foo')),
    ('##oo', '##', (False, 'oo')),
])
def test_canonical_form(token: str, marker: str, expected):
    assert canonical_form(token, marker) == expected


def test_overlap_across_marker_conventions():
    old = ['[PAD]', '[CLS]', '[SEP]', '[UNK]', '[MASK]', 'foo', '##ar', 'bar']
    new = ['<pad>', '<s>', '</s>', '<unk>', '<mask>', '▁foo', 'ar', '▁bar', '▁baz', 'foo']
    overlap = compute_overlap(
        old, new, old_marker='##', new_marker='▁',
        old_specials=WP_SPECIALS, new_specials=SP_SPECIALS,
    )
    assert overlap.pairs == {0: 0, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 6, 7: 7}
    assert overlap.special_ids == (0, 1, 2, 3, 4)
    assert 8 not in overlap and 9 not in overlap


def test_overlap_lowest_old_id_wins():
    overlap = compute_overlap(['▁x', 'y', '▁x'], ['▁x', 'y'])
    assert overlap.pairs == {0: 0, 1: 1}


def test_overlap_between_models():
    a = train_subword(toy_lines('aa', 300), vocab_size=60)
    b = train_subword(toy_lines('bb', 300), vocab_size=60)
    overlap = compute_overlap(a, b)
    assert len(set(overlap.old_ids)) == len(overlap)
    for new_id, old_id in overlap:
        assert a.vocab[old_id] == b.vocab[new_id]
    assert set(range(5)) <= set(overlap.new_ids)


@pytest.mark.parametrize('scores,expected', [
    ([1.0, 0.0, 0.0], [1.0, 0.0, 0.0]),
    ([0.7, 0.7, 0.7], [1 / 3, 1 / 3, 1 / 3]),
    ([0.5, 0.3, 0.2], [0.5, 0.3, 0.2]),
    ([3.0], [1.0]),
    ([0.9, 0.1], [0.9, 0.1]),
])
def test_sparsemax(scores, expected):
    assert np.allclose(sparsemax(scores), expected)


def test_sparsemax_is_on_the_simplex():
    rng = np.random.default_rng(0)
    for _ in range(20):
        p = sparsemax(rng.normal(size=8) * 3)
        assert p.min() >= 0.0
        assert p.sum() == pytest.approx(1.0)


@pytest.mark.parametrize('scores', [[], [np.nan, 1.0], [[1.0, 2.0]]])
def test_sparsemax_rejects(scores):
    with pytest.raises(ValidationError):
        sparsemax(scores)


def _toy_transplant():
    old = EmbeddingMatrix(
        vocab = ['<pad>', 'a', 'b', 'c'],
        matrix = np.array([
            [0.0, 0.0, 1.0],
            [1.0, 2.0, 0.0],
            [-1.0, 0.5, 0.5],
            [9.0, 9.0, 9.0],
        ]),
    )
    new_vocab = ['<pad>', 'a', 'b', 'd', 'e']
    overlap = OverlapMap(pairs={0: 0, 1: 1, 2: 2}, special_ids=(0,))
    aux = AuxiliaryEmbeddings(new_vocab, np.array([
        [1.0, 0.0],
        [1.0, 0.0],
        [0.0, 1.0],
        [1.0, 0.1],
        [0.0, 0.0],
    ]))
    return old, overlap, new_vocab, aux


def _simplex_projection(z: np.ndarray) -> np.ndarray:
    """Sparsemax by bisection on the threshold."""
    lo, hi = float(z.min()) - 1.0, float(z.max())
    for _ in range(200):
        tau = (lo + hi) / 2
        if np.maximum(z - tau, 0.0).sum() > 1.0:
            lo = tau
        else:
            hi = tau
    return np.maximum(z - (lo + hi) / 2, 0.0)


def test_focus_initialize():
    rng = np.random.default_rng(11)
    new_vocab = ['<pad>'] + [f"t{i}" for i in range(1, 20)]
    old = EmbeddingMatrix([f"o{i}" for i in range(15)], rng.normal(size=(15, 6)))
    old_ids = rng.permutation(15)[:12]
    overlap = OverlapMap(pairs={i: int(old_ids[i]) for i in range(12)}, special_ids=(0,))
    aux = AuxiliaryEmbeddings(new_vocab, rng.normal(size=(20, 4)))
    k = 4
    result = focus_initialize(old, overlap, new_vocab, aux, k=k, seed=0)
    assert result.provenance == ['copy'] * 12 + ['combine'] * 8
    assert np.array_equal(result.matrix[:12], old.matrix[old_ids])

    pool = np.arange(1, 12)
    unit = aux.vectors / np.linalg.norm(aux.vectors, axis=1, keepdims=True)
    for token_id in range(12, 20):
        sims = unit[pool] @ unit[token_id]
        top = np.argsort(-sims)[:k]
        weights = _simplex_projection(sims[top])
        assert (weights >= 0).all()
        assert abs(weights.sum() - 1.0) <= 1e-9
        assert np.abs(sparsemax(sims[top]) - weights).max() <= 1e-9
        expected = sum(w * old.matrix[overlap[int(p)]] for w, p in zip(weights, pool[top]))
        assert np.abs(result.matrix[token_id] - expected).max() <= 1e-9


def test_focus_on_a_hand_built_vocabulary():

    old, overlap, new_vocab, aux = _toy_transplant()
    result = focus_initialize(old, overlap, new_vocab, aux, k=10, noise_scale=0.01, seed=0)
    assert result.provenance == ['copy', 'copy', 'copy', 'combine', 'fallback']
    assert np.array_equal(result.matrix[:3], old.matrix[:3])

    ### 'd' combines 'a' and 'b' only: the special token is never a neighbour.
    unit = np.array([1.0, 0.1]) / np.linalg.norm([1.0, 0.1])
    weights = sparsemax([unit @ [1.0, 0.0], unit @ [0.0, 1.0]])
    assert np.allclose(result.matrix[3], weights @ old.matrix[[1, 2]])

    copied = old.matrix[:3]
    bound = 0.01 * np.linalg.norm(copied, axis=1).mean()
    assert np.linalg.norm(result.matrix[4] - copied.mean(axis=0)) <= bound + 1e-12

    report = transplant_report(overlap, result)
    assert (report['copied'], report['combined'], report['fallback']) == (3, 1, 1)
    assert report['overlap_specials'] == 1


def test_focus_with_one_neighbour_copies_the_nearest_row():
    old, overlap, new_vocab, aux = _toy_transplant()
    result = focus_initialize(old, overlap, new_vocab, aux, k=1)
    assert np.array_equal(result.matrix[3], old.matrix[1])


def test_focus_is_deterministic():
    old, overlap, new_vocab, aux = _toy_transplant()
    a = focus_initialize(old, overlap, new_vocab, aux, seed=3)
    b = focus_initialize(old, overlap, new_vocab, aux, seed=3)
    assert np.array_equal(a.matrix, b.matrix)


def test_focus_rejects():
    old, overlap, new_vocab, aux = _toy_transplant()
    with pytest.raises(TransplantError):
        focus_initialize(old, OverlapMap(), new_vocab, aux)
    with pytest.raises(ValidationError):
        focus_initialize(old, overlap, new_vocab, aux, k=0)
    with pytest.raises(ValidationError):
        focus_initialize(old, overlap, new_vocab[:4], aux)


def test_embedding_matrix_validation():
    with pytest.raises(ValidationError):
        EmbeddingMatrix(['a', 'b'], np.zeros((3, 2)))
    with pytest.raises(ValidationError):
        EmbeddingMatrix(['a'], np.array([[np.inf, 0.0]]))


def test_auxiliary_embeddings_on_toy_text():
    lines = toy_lines('aa', 500, seed=1)
    model = train_subword(lines, vocab_size=60)
    aux = train_auxiliary_embeddings(lines, model, aux_dim=8, window=2)
    assert aux.vectors.shape == (60, 8)
    assert np.all(aux.vectors[model.pad_id] == 0)
    assert np.all(aux.vectors[model.mask_id] == 0)
    assert aux.seen().sum() > 20
    again = train_auxiliary_embeddings(lines, model, aux_dim=8, window=2)
    assert np.allclose(aux.vectors, again.vectors)


def test_auxiliary_dims_are_capped_at_the_rank():
    model = train_subword(['abab ab'] * 100, vocab_size=11)
    aux = train_auxiliary_embeddings(['abab ab'] * 100, model, aux_dim=5, window=2)
    assert aux.vectors.shape == (11, 2)
    seen = aux.seen()
    assert seen[model.token_to_id['▁ab']] and seen[model.token_to_id['ab']]
    assert seen.sum() == 2


def test_auxiliary_rejects():
    model = train_subword(['abab ab'] * 100, vocab_size=10)
    with pytest.raises(ValidationError):
        train_auxiliary_embeddings(['abab ab'], model, aux_dim=11)
    with pytest.raises(ValidationError):
        train_auxiliary_embeddings([], model, aux_dim=2)


def test_word2vec_round_trip(tmp_path):
    matrix = random_embeddings(['<pad>', '▁kala', 'la'], dim=4, seed=1)
    path = write_word2vec(matrix, tmp_path / 'emb.vec')
    back = read_word2vec(path)
    assert back.vocab == matrix.vocab
    assert np.array_equal(back.matrix, matrix.matrix)


def test_word2vec_malformed_row(tmp_path):
    path = tmp_path / 'bad.vec'
    path.write_text('2 2\na 1 2\nb 1\n', encoding='utf-8')
    with pytest.raises(ValidationError) as excinfo:
        read_word2vec(path)
    assert ':3:' in str(excinfo.value)


def test_word2vec_row_count_mismatch(tmp_path):
    path = tmp_path / 'short.vec'
    path.write_text('3 1\na 1\n', encoding='utf-8')
    with pytest.raises(ValidationError):
        read_word2vec(path)
