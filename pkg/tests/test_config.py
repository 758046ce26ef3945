#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import pytest
from kantele.config import get_config, resolve_profile, read_run_config
from kantele.config._patch import apply_patch_to_config
from kantele.config._run import run_config_from_dict
from kantele.utils.exceptions import ConfigError
from tests.fixtures import toy_lines, write_lines, write_treebank, write_run_config


def _raw(tmp_path, **sections):
    """A valid desk document for one language, with `sections` merged in."""
    text = write_lines(tmp_path / 'aa.txt', toy_lines('aa', 20))
    treebank = write_treebank(tmp_path, 'aa')
    raw = {
        'name': 'unit',
        'profile': 'desk',
        'languages': {
            'aa': {
                'files': [str(text)],
                'resource': 'high',
                'treebank': {k: str(v) for k, v in treebank.items()},
            },
        },
    }
    raw.update(sections)
    return raw


def test_patch_merges_dicts_and_replaces_lists():
    base = {'a': {'b': 1, 'c': [1, 2]}, 'd': 0}
    patched = apply_patch_to_config(base, {'a': {'c': [3]}, 'e': {'f': 1}})
    assert patched == {'a': {'b': 1, 'c': [3]}, 'd': 0, 'e': {'f': 1}}
    assert base == {'a': {'b': 1, 'c': [1, 2]}, 'd': 0}


def test_get_config():
    assert get_config('pretrain', 'mask_prob') == 0.15
    assert get_config('does', 'not', 'exist', warn=False) is None
    assert get_config('does', 'not', as_tuple=True, warn=False) == (False, None)


def test_desk_profile():
    desk = resolve_profile(get_config(), 'desk')
    assert 'profiles' not in desk
    assert desk['encoder']['layers'] == 2
    assert desk['encoder']['init_std'] == 0.02
    assert desk['pretrain']['total_steps'] == 2_000
    assert desk['grid']['vocab_size'] == [256, 512]
    assert resolve_profile(get_config(), 'full')['encoder']['layers'] == 12
    with pytest.raises(ConfigError):
        resolve_profile(get_config(), 'laptop')


def test_cascade_order(tmp_path):
    raw = _raw(tmp_path, pretrain={'total_steps': 300, 'batch_size': 8})
    rc = run_config_from_dict(raw, patch={'pretrain': {'total_steps': 400}})
    pretrain = rc.section('pretrain')
    assert pretrain['total_steps'] == 400
    assert pretrain['batch_size'] == 8
    assert pretrain['learning_rate'] == 1e-3
    assert pretrain['mask_prob'] == 0.15


def test_read_run_config(tmp_path):
    rc = read_run_config(write_run_config(tmp_path))
    assert rc.name == 'toy'
    assert rc.profile == 'desk'
    assert rc.codes == ['aa', 'bb']
    assert rc.resources == {'aa': 'high', 'bb': 'low'}
    assert rc.language('aa').has_train and rc.language('aa').has_test
    assert not rc.language('bb').treebank
    assert rc.seeds == [1, 2]
    with pytest.raises(KeyError):
        rc.language('cc')


def test_relative_paths_resolve_against_the_file(tmp_path):
    write_lines(tmp_path / 'data' / 'aa.txt', toy_lines('aa', 5))
    path = tmp_path / 'relative.yaml'
    path.write_text(
        "profile: desk\n"
        + "grid:\n  settings: [full_finetune]\n"
        + "languages:\n  aa:\n    files: data/aa.txt\n    resource: high\n",
        encoding = 'utf-8',
    )
    rc = read_run_config(path)
    assert rc.language('aa').files == [str(tmp_path / 'data' / 'aa.txt')]


def test_languages_as_a_list(tmp_path):
    raw = _raw(tmp_path)
    raw['languages'] = [dict(code='aa', **raw['languages']['aa'])]
    assert run_config_from_dict(raw).codes == ['aa']


def test_groups_and_caps(tmp_path):
    raw = _raw(tmp_path, groups={'finnic': ['aa']}, sampling={'caps': {'aa': 100}})
    raw['languages']['aa']['cap_bytes'] = '1e3'
    rc = run_config_from_dict(raw)
    assert rc.groups == {'finnic': ['aa']}
    assert rc.caps == {'aa': 1000}


def test_cells_are_in_declaration_order(tmp_path):
    rc = run_config_from_dict(_raw(tmp_path))
    assert rc.cells() == [
        (500, 256, 0.1), (500, 256, 0.3), (500, 512, 0.1), (500, 512, 0.3),
        (1_000, 256, 0.1), (1_000, 256, 0.3), (1_000, 512, 0.1), (1_000, 512, 0.3),
    ]


@pytest.mark.parametrize('sections,problem', [
    ({'encoder': {'model_dim': 30, 'heads': 4}}, 'not divisible by heads'),
    ({'pretrain': {'max_sequence_length': 128}}, 'exceeds encoder:max_positions'),
    ({'finetune': {'patience_epochs': 3}}, 'positive multiple'),
    ({'finetune': {'seeds': []}}, 'at least one seed'),
    ({'grid': {'lapt_steps': []}}, 'grid:lapt_steps is empty'),
    ({'grid': {'lapt_steps': [100]}}, 'smaller than pretrain:freeze_steps'),
    ({'grid': {'vocab_size': [5]}}, 'leaves no room'),
    ({'grid': {'settings': ['one_shot']}}, "unknown setting 'one_shot'"),
    ({'grid': {'tasks': ['las']}}, "unknown task 'las'"),
    ({'sampling': {'basis': 'tokens'}}, 'sampling:basis'),
    ({'sampling': {'alpha': 1.5}}, 'alpha 1.5 is outside'),
    ({'cleaning': {'dev_frac': 0.6, 'test_frac': 0.5}}, 'dev_frac + test_frac'),
    ({'cleaning': {'langid_reject_threshold': 0}}, 'langid_reject_threshold'),
    ({'groups': {'finnic': ['zz']}}, "unknown language 'zz'"),
])
def test_validation_problems(tmp_path, sections, problem: str):
    with pytest.raises(ConfigError) as excinfo:
        run_config_from_dict(_raw(tmp_path, **sections))
    assert any(problem in p for p in excinfo.value.problems), excinfo.value.problems


def test_every_problem_is_reported(tmp_path):
    raw = _raw(tmp_path, encoder={'model_dim': 30, 'heads': 4}, grid={'vocab_size': [5]})
    raw['languages']['aa']['resource'] = 'medium'
    raw['languages']['bb'] = {'files': [str(tmp_path / 'missing.txt')]}
    with pytest.raises(ConfigError) as excinfo:
        run_config_from_dict(raw)
    problems = excinfo.value.problems
    assert len(problems) >= 4
    assert any("'medium'" in p for p in problems)
    assert any('missing.txt' in p for p in problems)
    assert str(len(problems)) in str(excinfo.value)


def test_zero_shot_needs_a_train_treebank(tmp_path):
    raw = _raw(tmp_path)
    raw['languages']['aa']['treebank'].pop('train')
    with pytest.raises(ConfigError) as excinfo:
        run_config_from_dict(raw)
    assert any('zero_shot' in p for p in excinfo.value.problems)
    raw['grid'] = {'settings': ['full_finetune']}
    assert run_config_from_dict(raw).codes == ['aa']


@pytest.mark.parametrize('content', ['- a\n- b\n', 'a: [unclosed\n'])
def test_unreadable_run_files(tmp_path, content: str):
    path = tmp_path / 'bad.yaml'
    path.write_text(content, encoding='utf-8')
    with pytest.raises(ConfigError):
        read_run_config(path)
    with pytest.raises(ConfigError):
        read_run_config(tmp_path / 'missing.yaml')


def test_root_dir(tmp_path, monkeypatch):
    monkeypatch.delenv('KANTELE_ROOT_DIR', raising=False)
    rc = run_config_from_dict(_raw(tmp_path, output_dir=str(tmp_path / 'out')))
    assert rc.root_dir() == tmp_path / 'out'
    monkeypatch.setenv('KANTELE_ROOT_DIR', str(tmp_path / 'env'))
    assert rc.root_dir() == tmp_path / 'env'


def test_run_dir(tmp_path, monkeypatch):
    monkeypatch.delenv('KANTELE_ROOT_DIR', raising=False)
    rc = run_config_from_dict(_raw(tmp_path, output_dir=str(tmp_path / 'out')))
    first = rc.run_dir('20240101-000000')
    second = rc.run_dir('20240102-000000')
    assert first.is_dir() and second.is_dir()
    assert first == tmp_path / 'out' / 'runs' / 'unit' / '20240101-000000'
    assert rc.run_dir(resume=True) == second
    assert rc.run_dir().parent == first.parent


def test_to_dict_round_trip(tmp_path):
    rc = run_config_from_dict(_raw(tmp_path, groups={'g': ['aa']}, pretrain={'total_steps': 300}))
    again = run_config_from_dict(rc.to_dict())
    assert again.config == rc.config
    assert again.codes == rc.codes
    assert again.language('aa').treebank == rc.language('aa').treebank
