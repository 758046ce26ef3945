#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import pytest
from kantele.core.Record import (
    ResultRecord, append_records, read_records, completed_keys, schema_hash,
)
from kantele.analysis import (
    format_mean_sd, seed_statistics, report_tables, emit_report, marginalize, write_marginals,
)
from kantele.utils.exceptions import SchemaDriftError, ValidationError, CorpusReadError
from tests.fixtures import toy_records


def _record(language: str, seed: int, score: float, **kw) -> ResultRecord:
    fields = dict(
        language = language, task = 'pos', setting = 'full_finetune', lapt_steps = 100_000,
        vocab_size = 16_384, alpha = 0.1, finetuning_lines = 512, seed = seed, score = score,
    )
    fields.update(kw)
    return ResultRecord(**fields)


def test_format_mean_sd():
    assert format_mean_sd(2.5, 1.2909944) == '2.5 ± 1.3'
    assert format_mean_sd(80.0, 0.0, precision=2) == '80.00 ± 0.00'


@pytest.mark.parametrize('kw', [{'task': 'ner'}, {'setting': 'one_shot'}])
def test_record_rejects_unknown_labels(kw):
    with pytest.raises(ValidationError):
        _record('fi', 1, 50.0, **kw)


@pytest.mark.parametrize('score', [-0.1, 100.5, float('nan'), float('inf')])
def test_record_rejects_out_of_range_scores(score: float):
    with pytest.raises(ValidationError):
        _record('fi', 1, score)
    assert _record('fi', 1, 0.0).score == 0.0
    assert _record('fi', 1, 100.0).score == 100.0


def test_out_of_range_scores_are_rejected_on_read(tmp_path):
    path = tmp_path / 'records.tsv'
    append_records(path, [_record('fi', 1, 99.0)])
    schema, header, row = path.read_text(encoding='utf-8').splitlines()
    values = row.split('\t')
    values[header.split('\t').index('score')] = '199'
    path.write_text('\n'.join([schema, header, '\t'.join(values)]) + '\n', encoding='utf-8')
    with pytest.raises(ValidationError):
        read_records(path)


def test_append_and_read(tmp_path):
    path = tmp_path / 'records.tsv'
    records = toy_records()
    assert append_records(path, records[:10]) == 10
    assert append_records(path, records[10:]) == len(records) - 10
    lines = path.read_text(encoding='utf-8').splitlines()
    assert lines[0] == '# schema: ' + schema_hash()
    assert lines[1].split('\t')[0] == 'language'
    assert len(lines) == len(records) + 2
    assert read_records(path) == records
    assert completed_keys(path) == {r.cell_key for r in records}


def test_schema_drift(tmp_path):
    path = tmp_path / 'records.tsv'
    path.write_text('# schema: 0000\nlanguage\tscore\n', encoding='utf-8')
    with pytest.raises(SchemaDriftError):
        append_records(path, [_record('fi', 1, 1.0)])
    with pytest.raises(SchemaDriftError):
        read_records(path)


def test_missing_records_file(tmp_path):
    assert completed_keys(tmp_path / 'nothing.tsv') == set()
    with pytest.raises(CorpusReadError):
        read_records(tmp_path / 'nothing.tsv')


def test_seed_statistics():
    records = [_record('fi', s, float(s)) for s in (1, 2, 3, 4)] + [_record('et', 1, 7.0)]
    stats = seed_statistics(records).set_index('language')
    assert stats.loc['fi', 'mean'] == pytest.approx(2.5)
    assert stats.loc['fi', 'sd'] == pytest.approx(1.2909944, rel=1e-6)
    assert stats.loc['fi', 'seeds'] == 4
    assert stats.loc['et', 'sd'] == 0.0


def test_report_tables_and_files(tmp_path):
    records = (
        [_record('fi', s, float(s)) for s in (1, 2, 3, 4)]
        + [_record('et', s, 13.5) for s in (1, 2, 3, 4)]
        + [_record('fi', s, 70.0, task='uas') for s in (1, 2)]
    )
    tables = report_tables(records)
    assert set(tables) == {('full_finetune', 'pos'), ('full_finetune', 'uas')}
    table = tables[('full_finetune', 'pos')]
    assert len(table) == 1
    assert table['fi'].iloc[0] == '2.5 ± 1.3'
    assert table['et'].iloc[0] == '13.5 ± 0.0'
    assert table['avg'].iloc[0] == '8.0'

    paths = emit_report(records, tmp_path)
    names = sorted(p.name for p in paths)
    assert names == ['report.md', 'report_full_finetune_pos.tsv', 'report_full_finetune_uas.tsv']
    assert '2.5 ± 1.3' in (tmp_path / 'report.md').read_text(encoding='utf-8')


def test_report_without_records():
    with pytest.raises(ValidationError):
        report_tables([])


def test_marginalize():
    records = toy_records()
    df = marginalize(records, 'vocab_size')
    assert list(df.columns) == ['language', 'level', 'mean', 'sd', 'count']
    assert len(df) == 4
    assert set(df['count']) == {len(records) // 4}
    aa = df[df['language'] == 'aa'].set_index('level')['mean']
    assert aa[32_768] - aa[16_384] == pytest.approx(1.0, abs=0.5)


def test_marginalize_unknown_parameter():
    with pytest.raises(ValidationError):
        marginalize(toy_records(), 'dropout')


def test_write_marginals(tmp_path):
    paths = write_marginals(toy_records(), ['alpha', 'lapt_steps'], tmp_path)
    assert [p.name for p in paths] == ['marginals_alpha.tsv', 'marginals_lapt_steps.tsv']
    assert all(p.exists() for p in paths)
