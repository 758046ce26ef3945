#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import pytest
from kantele.analysis import (
    CostModel, count_parameters, flops_per_token, relative_cost, cost_table, monolingual_budget,
)
from kantele.utils.exceptions import ValidationError


def test_count_parameters_base_encoder():
    assert count_parameters(CostModel(12, 768, 3072, 512, 16_384)) == 98_640_640


def test_non_embedding_parameters():
    assert CostModel.from_dims('xlmr-base').non_embedding_parameters == 86_041_344


@pytest.mark.parametrize('vocab_size,millions', [
    (16_384, 98.6),
    (32_768, 111.2),
    (65_536, 136.4),
    (131_072, 186.8),
    (250_002, 278.3),
])
def test_parameter_counts_by_vocabulary(vocab_size: int, millions: float):
    params = count_parameters(CostModel.from_dims('xlmr-base', vocab_size))
    assert abs(params / 1e6 - millions) / millions < 0.02


def test_flops_per_token_worked_example():
    assert flops_per_token(85_000_000, 768, 16_384) == 585_506_688


def test_doubling_the_vocabulary_costs_about_thirteen_percent():
    ratio = flops_per_token(85_000_000, 768, 32_768) / flops_per_token(85_000_000, 768, 16_384)
    assert ratio == pytest.approx(1.13, abs=0.01)


def test_relative_cost_of_the_full_vocabulary():
    base = CostModel.from_dims('xlmr-base')
    cost = relative_cost(base.with_vocab(250_002), base.with_vocab(32_768), 48.4, 44.3)
    assert 2.0 <= cost <= 3.0


def test_relative_cost_rejects_empty_lengths():
    base = CostModel.from_dims('xlmr-base')
    with pytest.raises(ValidationError):
        relative_cost(base, base, 0.0, 1.0)


def test_cost_table():
    base = CostModel.from_dims('xlmr-base')
    df = cost_table(base, [32_768, 16_384], mean_lengths={16_384: 50.0, 32_768: 45.0})
    assert list(df['vocab_size']) == [16_384, 32_768]
    assert df['parameters'].iloc[0] == 98_640_640
    assert df['pct_change'].iloc[1] == pytest.approx(
        100 * (df['parameters'].iloc[1] - 98_640_640) / 98_640_640
    )
    assert df['relative_cost'].iloc[0] == pytest.approx(1.0)
    assert df['relative_cost'].iloc[1] < 1.13


def test_unknown_dimensions():
    with pytest.raises(ValidationError):
        CostModel.from_dims('no-such-model')


def test_invalid_dimensions():
    with pytest.raises(ValidationError):
        CostModel(0, 768, 3072, 512)


def test_monolingual_budget_sums_to_total():
    budget = monolingual_budget({'fi': 1000.0, 'et': 100.0, 'sme': 10.0}, total_steps=1_000, alpha=0.1)
    assert sum(budget.values()) == 1_000
    assert budget['fi'] > budget['et'] > budget['sme'] > 0
