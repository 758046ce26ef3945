#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import collections
import pytest
from kantele.sampling import (
    LanguageWeight, SamplingSpec, apply_cap, cap_lines, group_languages,
    compute_sampling_weights, allocate_steps, sample_stream, vocabulary_sample,
    sampling_table, write_sampling_table,
)
from kantele.utils.exceptions import ValidationError

SIZES = {'A': 1000, 'B': 100, 'C': 10}


@pytest.mark.parametrize('alpha,expected', [
    (1.0, [0.9009, 0.0901, 0.0090]),
    (0.5, [0.7061, 0.2233, 0.0706]),
    (0.0, [1 / 3, 1 / 3, 1 / 3]),
])
def test_weights(alpha: float, expected):
    weights = compute_sampling_weights(SIZES, alpha)
    assert [w.unit for w in weights] == ['A', 'B', 'C']
    assert [w.q for w in weights] == pytest.approx(expected, abs=1e-4)
    assert sum(w.q for w in weights) == pytest.approx(1.0)


def test_weights_are_monotone_in_alpha():
    previous = None
    for alpha in (0.0, 0.1, 0.2, 0.3, 0.4, 1.0):
        q_small = compute_sampling_weights(SIZES, alpha)[-1].q
        if previous is not None:
            assert q_small < previous
        previous = q_small


def test_huge_sizes_do_not_overflow():
    weights = compute_sampling_weights({'ru': 9.1e12, 'koi': 6.8e3}, 1.0)
    assert weights[0].q == pytest.approx(1.0)
    assert weights[1].q > 0


@pytest.mark.parametrize('sizes,alpha', [
    ({}, 0.5),
    (SIZES, 1.5),
    (SIZES, -0.1),
    ({'A': 10, 'B': 0}, 0.5),
])
def test_invalid_weights(sizes, alpha):
    with pytest.raises(ValidationError):
        compute_sampling_weights(sizes, alpha)


def test_apply_cap():
    assert apply_cap({'ru': 9.1e9, 'koi': 6.8e6}, {'ru': 2e9}) == {'ru': 2e9, 'koi': 6.8e6}
    with pytest.raises(ValidationError):
        apply_cap({'ru': 1.0}, {'ru': -1})


def test_cap_lines():
    lines = ['abc', 'de', 'f']
    assert cap_lines(lines, None) == lines
    assert cap_lines(lines, 7) == ['abc', 'de']
    assert cap_lines(lines, 3) == []


def test_group_languages():
    units = group_languages({'fi': 10, 'vep': 1, 'krl': 2}, {'finnic': ['vep', 'krl']})
    assert units == {'fi': 10, 'finnic': 3}
    assert list(units) == ['fi', 'finnic']


@pytest.mark.parametrize('groups', [
    {'g': ['xx']},
    {'g1': ['fi'], 'g2': ['fi']},
])
def test_invalid_groups(groups):
    with pytest.raises(ValidationError):
        group_languages({'fi': 10, 'et': 5}, groups)


def test_allocate_steps():
    assert allocate_steps(10, [LanguageWeight('a', 0.55), LanguageWeight('b', 0.45)]) == {'a': 6, 'b': 4}
    steps = allocate_steps(1_000, compute_sampling_weights(SIZES, 0.3))
    assert sum(steps.values()) == 1_000


def test_spec_caps_scale_line_counts():
    corpora = {'fi': ['aaaa'] * 100, 'kpv': ['bbbb'] * 10}
    spec = SamplingSpec.from_corpora(corpora, 1.0, caps={'fi': 250})
    assert spec.raw_sizes() == {'fi': 100.0, 'kpv': 10.0}
    assert spec.capped_sizes()['fi'] == pytest.approx(50.0)
    assert spec.capped_sizes()['kpv'] == 10.0
    q = [w.q for w in spec.weights()]
    assert q == pytest.approx([50 / 60, 10 / 60])


def test_spec_bytes_basis():
    spec = SamplingSpec.from_corpora({'fi': ['aaa'], 'et': ['b']}, 1.0, basis='bytes')
    assert spec.unit_sizes() == {'fi': 4.0, 'et': 2.0}
    with pytest.raises(ValidationError):
        SamplingSpec(1.0, {'fi': 1.0}, basis='tokens')


@pytest.mark.parametrize('alpha', [0.0, 0.1, 0.2, 0.3, 0.4, 1.0])
def test_stream_matches_weights(alpha: float):
    corpora = {u: [f"{u} {i}" for i in range(n)] for u, n in SIZES.items()}
    weights = compute_sampling_weights({u: len(v) for u, v in corpora.items()}, alpha)
    stream = sample_stream(corpora, weights, seed=11)
    counts = collections.Counter(unit for unit, _ in stream.take(100_000, with_units=True))
    for w in weights:
        assert abs(counts[w.unit] / 100_000 - w.q) < 0.01


def test_stream_is_deterministic():
    corpora = {'fi': [f"fi {i}" for i in range(50)], 'et': [f"et {i}" for i in range(5)]}
    weights = compute_sampling_weights({'fi': 50, 'et': 5}, 0.3)
    a = sample_stream(corpora, weights, seed=5).take(500)
    b = sample_stream(corpora, weights, seed=5).take(500)
    c = sample_stream(corpora, weights, seed=6).take(500)
    assert a == b
    assert a != c


def test_stream_cycles_through_every_line():
    corpora = {'et': [f"et {i}" for i in range(7)]}
    stream = sample_stream(corpora, compute_sampling_weights({'et': 7}, 1.0), seed=0)
    assert sorted(stream.take(7)) == sorted(corpora['et'])
    assert sorted(stream.take(7)) == sorted(corpora['et'])


def test_stream_rejects_empty_pools():
    with pytest.raises(ValidationError):
        sample_stream({'fi': ['a b'], 'et': []}, [LanguageWeight('fi', 0.5), LanguageWeight('et', 0.5)])
    with pytest.raises(ValidationError):
        sample_stream({'fi': ['a b']}, [LanguageWeight('xx', 1.0)])


@pytest.mark.parametrize('policy', ['proportional', 'uniform'])
def test_grouped_stream(policy: str):
    corpora = {
        'fi': [f"fi {i}" for i in range(100)],
        'vep': [f"vep {i}" for i in range(90)],
        'krl': [f"krl {i}" for i in range(10)],
    }
    groups = {'finnic': ['vep', 'krl']}
    spec = SamplingSpec.from_corpora(corpora, 1.0, groups=groups)
    assert [w.unit for w in spec.weights()] == ['fi', 'finnic']
    stream = sample_stream(corpora, spec.weights(), seed=1, groups=groups, within_group_policy=policy)
    drawn = [line.split()[0] for unit, line in stream.take(20_000, with_units=True) if unit == 'finnic']
    krl_share = drawn.count('krl') / len(drawn)
    expected = 0.1 if policy == 'proportional' else 0.5
    assert abs(krl_share - expected) < 0.03


def test_unknown_group_policy():
    with pytest.raises(ValidationError):
        sample_stream({'fi': ['a b']}, [LanguageWeight('fi', 1.0)], within_group_policy='random')


def test_vocabulary_sample():
    corpora = {'fi': [f"fi {i}" for i in range(30)], 'et': [f"et {i}" for i in range(3)]}
    assert vocabulary_sample({'fi': corpora['fi']}, max_lines=100) == corpora['fi']
    assert len(vocabulary_sample(corpora, max_lines=100)) == 33
    sample = vocabulary_sample(corpora, alpha=0.0, max_lines=20, seed=0)
    assert len(sample) == 20
    assert sample == vocabulary_sample(corpora, alpha=0.0, max_lines=20, seed=0)


def test_multilingual_vocabulary_sample_is_smoothed():
    corpora = {'fi': [f"fi {i}" for i in range(900)], 'et': [f"et {i}" for i in range(100)]}
    ### q_et = 100^0.2 / (900^0.2 + 100^0.2) ~ 0.39, against 0.1 for the raw mix.
    sample = vocabulary_sample(corpora, alpha=0.2, max_lines=5_000, seed=0)
    assert len(sample) == 1_000
    assert sum(line.startswith('et') for line in sample) > 250
    uniform = vocabulary_sample(corpora, alpha=0.0, max_lines=5_000, seed=0)
    assert 400 < sum(line.startswith('et') for line in uniform) < 600


def test_sampling_table(tmp_path):
    spec = SamplingSpec.from_corpora(
        {u: ['x y'] * n for u, n in SIZES.items()}, 0.3,
    )
    df = sampling_table(spec, alphas=[0.0, 0.5, 1.0])
    assert list(df.columns) == ['unit', 'raw_size', 'capped_size', 'q_0', 'q_0.5', 'q_1']
    assert list(df['q_0.5'].round(4)) == [0.7061, 0.2233, 0.0706]
    path = write_sampling_table(df, tmp_path / 'sampling.tsv')
    assert path.read_text(encoding='utf-8').startswith('unit\traw_size')
