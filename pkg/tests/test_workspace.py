#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import json
import pytest
from kantele.core import Workspace
from kantele.core.Encoder import EncoderCheckpoint
from kantele.core.Record import read_records, cell_key
from kantele.core.SubwordModel import SubwordModel
from kantele.actions import entry
from tests.fixtures import write_run_config, TINY_RUN
from tests import debug


@pytest.fixture
def workspace(tmp_path):
    path = write_run_config(tmp_path)
    return Workspace.from_file(path, patch=TINY_RUN, run_dir=tmp_path / 'run')


def test_paths(workspace):
    assert workspace.path('records').name == 'records.tsv'
    assert workspace.path('failed').name == 'failed_cells.tsv'
    assert workspace.path('marginals', parameter='alpha').name == 'marginals_alpha.tsv'
    assert workspace.lapt_dir(2, 36, 0.1).name == '2-36-0.1'
    assert workspace.vocab_dir(36).parent.name == 'vocab'


def test_clean_writes_splits_and_stats(workspace):
    stats = workspace.clean(workers=1)
    assert set(stats) == {'aa', 'bb'}
    for code in ('aa', 'bb'):
        for split in ('train', 'dev', 'test'):
            assert (workspace.corpus_dir / f"{code}.{split}.txt").exists()
    assert workspace.path('filter_stats').exists()
    corpora = workspace.corpora()
    assert set(corpora) == {'aa', 'bb'}
    assert all(len(lines) > 100 for lines in corpora.values())


def test_sampling_table(workspace):
    path = workspace.write_sampling_table()
    header = path.read_text(encoding='utf-8').splitlines()[0].split('\t')
    assert header[:3] == ['unit', 'raw_size', 'capped_size']


def test_vocabulary_is_reused(workspace, tmp_path):
    model = workspace.train_vocab(36)
    assert model.vocab_size == 36
    directory = workspace.vocab_dir(36)
    assert (directory / 'subword.model').exists()
    assert (directory / 'diagnostics.tsv').exists()
    reopened = Workspace.from_file(tmp_path / 'toy.yaml', patch=TINY_RUN, run_dir=workspace.run_dir)
    assert reopened.train_vocab(36) == model
    assert SubwordModel.read(directory / 'subword.model') == model


def test_transplant(workspace):
    matrix = workspace.transplant(36)
    assert matrix.matrix.shape == (36, 8)
    assert matrix.vocab == workspace.train_vocab(36).vocab
    directory = workspace.transplant_dir(36)
    assert (directory / 'embeddings.vec').exists()
    assert (directory / 'transplant.tsv').exists()
    assert (workspace.run_dir / 'source' / 'subword.model').exists()


def test_pretrain_cell_is_reloaded(workspace):
    best = workspace.pretrain_cell(2, 36, 0.1)
    path = workspace.lapt_dir(2, 36, 0.1) / 'encoder.ckpt'
    assert path.exists()
    assert (workspace.lapt_dir(2, 36, 0.1) / 'trajectory.tsv').exists()
    assert best.step <= 2
    again = workspace.pretrain_cell(2, 36, 0.1)
    assert isinstance(again, EncoderCheckpoint)
    for name, array in best.params.items():
        assert (again.params[name] == array).all()


def test_completed_cells_are_not_recomputed(workspace):
    skip = {
        cell_key('aa', task, 'full_finetune', 2, 36, 0.1, seed)
        for task in ('pos', 'uas') for seed in (1, 2)
    }
    assert workspace.evaluate_cell(2, 36, 0.1, skip=skip) == []
    assert not workspace.lapt_dir(2, 36, 0.1).exists()


@pytest.mark.slow
def test_toy_grid(workspace):
    written, skipped, failed = workspace.run_grid(workers=1, debug=debug)
    assert (written, skipped, failed) == (32, 0, 0)
    records = read_records(workspace.path('records'))
    for task in ('pos', 'uas'):
        rows = [r for r in records if r.task == task]
        assert len(rows) == 16
        assert {r.language for r in rows} == {'aa'}
        assert all(r.setting == 'full_finetune' for r in rows)
        assert all(0.0 <= r.score <= 100.0 for r in rows)
    assert len({r.cell_key for r in records}) == 32

    before = workspace.path('records').read_bytes()
    assert workspace.run_grid(workers=1) == (0, 8, 0)
    assert workspace.path('records').read_bytes() == before


@pytest.mark.slow
def test_run_grid_action(tmp_path):
    path = write_run_config(tmp_path)
    run_dir = tmp_path / 'run'
    args = ['--run', str(path), '--run-dir', str(run_dir), '--config', json.dumps(TINY_RUN)]
    success, msg = entry(['run-grid'] + args)
    assert success, msg
    assert (run_dir / 'records.tsv').exists()
    success, msg = entry(['report'] + args)
    assert success, msg
    assert (run_dir / 'analysis' / 'report.md').exists()


def _capped_workspace(tmp_path, **subword):
    path = write_run_config(tmp_path)
    patch = {
        **TINY_RUN,
        'subword': {**TINY_RUN['subword'], **subword},
        'sampling': {'caps': {'aa': 600}},
    }
    return Workspace.from_file(path, patch=patch, run_dir=tmp_path / 'run')


def test_byte_caps_truncate_training_pools(tmp_path):
    workspace = _capped_workspace(tmp_path)
    corpora, pools = workspace.corpora(), workspace.training_pools()
    assert pools['bb'] == corpora['bb']
    assert 0 < len(pools['aa']) < len(corpora['aa'])
    assert pools['aa'] == corpora['aa'][:len(pools['aa'])]
    assert sum(len(line.encode('utf-8')) + 1 for line in pools['aa']) <= 600
    assert set(workspace.vocabulary_lines()) <= set(pools['aa']) | set(pools['bb'])


def test_length_sample_follows_its_alpha(tmp_path):
    uniform = _capped_workspace(tmp_path / 'uniform', length_sample_lines=200, length_sample_alpha=0.0)
    proportional = _capped_workspace(
        tmp_path / 'proportional', length_sample_lines=200, length_sample_alpha=1.0,
    )
    counts = {}
    for name, workspace in (('uniform', uniform), ('proportional', proportional)):
        sample = workspace.length_sample()
        assert len(sample) == 200
        assert sample == workspace.length_sample()
        aa = set(workspace.training_pools()['aa'])
        counts[name] = sum(line in aa for line in sample)
    assert counts['uniform'] > 60
    assert counts['proportional'] < 60


def test_diagnostics_include_the_length_sample(workspace):
    import pandas as pd
    model = workspace.train_vocab(36)
    df = pd.read_csv(workspace.vocab_dir(36) / 'diagnostics.tsv', sep='\t')
    assert set(df['language']) == {'aa', 'bb', 'sampled'}
    row = df[df['language'] == 'sampled'].iloc[0]
    assert row['mean_sequence_length'] == pytest.approx(
        model.mean_sequence_length(workspace.length_sample())
    )
