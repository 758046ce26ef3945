#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import pytest
from kantele.actions import actions, entry, get_subactions, action_name
from kantele.actions._entry import _category
from kantele.actions.arguments import parse_arguments
from kantele.config import get_config
from kantele.core.Record import append_records
from kantele.tasks import Sentence, write_conllu
from kantele.utils.exceptions import (
    ValidationError, ConfigError, CorpusReadError, NonFiniteLossError, KanteleError,
)
from tests.fixtures import toy_records


def test_every_stage_has_an_action():
    expected = {
        'clean', 'sample', 'train_vocab', 'diagnose', 'transplant', 'pretrain', 'finetune',
        'evaluate', 'run_grid', 'regress', 'report', 'cost', 'show',
    }
    assert expected <= set(actions)
    assert action_name('run-grid') == 'run_grid'


def test_show_subactions():
    assert sorted(get_subactions('show')) == ['actions', 'config', 'grid', 'records', 'version']
    assert get_subactions('frobnicate') == {}


@pytest.mark.parametrize('sysargs,key,value', [
    (['cost', '--vocab', '16k,32k'], 'vocab', [16384, 32768]),
    (['run-grid', '--alpha', '0.1,0.3'], 'alpha', [0.1, 0.3]),
    (['train-vocab'], 'action', ['train_vocab']),
    (['show', 'config', 'pretrain'], 'action', ['show', 'config', 'pretrain']),
    (['finetune', '--task', 'pos', 'uas'], 'tasks', ['pos', 'uas']),
    (['run-grid', '--seeds', '1,2'], 'seeds', [1, 2]),
    (['cost', '--config', 'pretrain:total_steps:500'], 'config', {'pretrain': {'total_steps': 500}}),
])
def test_parse_arguments(sysargs, key: str, value):
    assert parse_arguments(sysargs)[key] == value


def test_parse_arguments_drops_unset_options():
    args = parse_arguments(['cost'])
    assert 'vocab' not in args and 'run' not in args
    assert args['debug'] is False
    assert args['sysargs'] == ['cost']


@pytest.mark.parametrize('sysargs', [
    ['cost', '--bogus'],
    ['cost', '--workers', 'many'],
])
def test_parse_arguments_rejects(sysargs):
    with pytest.raises(ValidationError):
        parse_arguments(sysargs)


def test_cost_action(capsys):
    assert entry(['cost', '--dims', 'xlmr-base', '--vocab', '16384']) == (True, 'Success')
    assert entry('cost --dims desk --vocab 256,512 --lengths 20,18 --nopretty')[0]
    assert capsys.readouterr().out


def test_cost_action_writes_a_table(tmp_path):
    out = tmp_path / 'cost.tsv'
    success, msg = entry(['cost', '--vocab', '16k,32k', '--output', str(out), '--nopretty'])
    assert success, msg
    assert out.read_text(encoding='utf-8').startswith('vocab_size')


@pytest.mark.parametrize('sysargs,category', [
    (['frobnicate'], '[validation]'),
    (['cost'], '[validation]'),
    (['cost', '--vocab', '16k', '--lengths', '1,2'], '[validation]'),
    (['cost', '--dims', 'nope', '--vocab', '16k'], '[validation]'),
    (['cost', '--bogus'], '[validation]'),
    (['regress'], '[validation]'),
    (['clean'], '[config]'),
])
def test_failures_are_categorized(sysargs, category: str):
    success, msg = entry(sysargs)
    assert not success
    assert msg.startswith(category), msg


def test_missing_files_are_io_errors(tmp_path):
    success, msg = entry(['report', '--records', str(tmp_path / 'missing.tsv')])
    assert not success
    assert msg.startswith('[io]')


def test_config_patch_lasts_one_action():
    before = get_config('pretrain', 'total_steps')
    assert entry(['cost', '--vocab', '16k', '--nopretty', '--config', 'pretrain:total_steps:5'])[0]
    assert get_config('pretrain', 'total_steps') == before


def test_show(capsys):
    assert entry(['show', 'version', '--nopretty']) == (True, 'Success')
    assert capsys.readouterr().out.strip()
    assert entry(['show', 'config', 'pretrain', 'mask_prob', '--nopretty'])[0]
    assert capsys.readouterr().out.strip() == '0.15'
    assert not entry(['show', 'config', 'nope'])[0]
    assert entry([])[0]
    assert 'run-grid' in capsys.readouterr().out


def test_evaluate_action(tmp_path, capsys):
    ten = Sentence(list('abcdefghij'), ['X'] * 10, [0, 1, 0, 3, 0, 5, 6, 7, 8, 9])
    gold = write_conllu([ten], tmp_path / 'gold.conllu')
    pred = write_conllu([ten], tmp_path / 'pred.conllu', heads=[[0] * 10])
    assert entry(['evaluate', '--gold', str(gold), '--pred', str(pred), '--nopretty'])[0]
    assert '30' in capsys.readouterr().out
    assert not entry(['evaluate', '--gold', str(gold)])[0]


def test_report_and_regress_actions(tmp_path):
    records = tmp_path / 'records.tsv'
    append_records(records, toy_records())
    out = tmp_path / 'analysis'
    success, msg = entry(['report', '--records', str(records), '--output', str(out)])
    assert success, msg
    assert (out / 'report.md').exists()
    assert (out / 'marginals_alpha.tsv').exists()

    summary = tmp_path / 'lmm.tsv'
    success, msg = entry([
        'regress', '--records', str(records), '--formula', 'score ~ lapt_steps + vocab_size + task',
        '--output', str(summary), '--nopretty',
    ])
    assert success, msg
    assert summary.exists()

    ### The default formula includes a column that never varies in these records.
    success, msg = entry(['regress', '--records', str(records), '--nopretty'])
    assert not success
    assert msg.startswith('[numeric]')


@pytest.mark.parametrize('error,category', [
    (ValidationError('x'), 'validation'),
    (ConfigError(['x']), 'config'),
    (CorpusReadError('a.txt', 'gone'), 'io'),
    (NonFiniteLossError('x', {'step': 1}), 'numeric'),
    (KanteleError('x'), 'internal'),
    (FileNotFoundError('x'), 'io'),
    (ZeroDivisionError('x'), 'numeric'),
    (KeyError('x'), 'validation'),
    (RuntimeError('x'), 'internal'),
])
def test_category(error, category: str):
    assert _category(error) == category


def test_main_exit_codes():
    from kantele.__main__ import main
    with pytest.raises(SystemExit) as excinfo:
        main(['show', 'version', '--nopretty'])
    assert excinfo.value.code == 0
    with pytest.raises(SystemExit) as excinfo:
        main(['frobnicate'])
    assert excinfo.value.code == 1
    with pytest.raises(SystemExit) as excinfo:
        main(['cost', '--help'])
    assert excinfo.value.code == 0
