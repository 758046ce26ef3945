#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Validate a run configuration up front and report every problem at once.
"""

from __future__ import annotations
import os
from kantele.utils.typing import List, Any


def _positive(value: Any) -> bool:
    try:
        return float(value) > 0
    except (TypeError, ValueError):
        return False


def find_problems(rc: 'kantele.config.RunConfig') -> List[str]:
    """Return a list of human-readable problems with `rc` (empty when valid)."""
    from kantele.config.static import _static_config
    problems = []
    cf = rc.config
    specials = cf['subword']['specials']

    ### Languages and paths.
    if not rc.languages:
        problems.append("No languages are declared.")
    seen = set()
    for lang in rc.languages:
        if not lang.code:
            problems.append("A language is missing its code.")
        if lang.code in seen:
            problems.append(f"Language '{lang.code}' is declared twice.")
        seen.add(lang.code)
        if lang.resource not in ('high', 'low'):
            problems.append(
                f"Language '{lang.code}': resource must be 'high' or 'low', not '{lang.resource}'."
            )
        if lang.cap_bytes is not None and lang.cap_bytes < 0:
            problems.append(f"Language '{lang.code}': cap_bytes must be nonnegative.")
        for f in lang.files:
            if not os.path.exists(f):
                problems.append(f"Language '{lang.code}': text file '{f}' does not exist.")
        for split, f in lang.treebank.items():
            if split not in _static_config()['splits']:
                problems.append(f"Language '{lang.code}': unknown treebank split '{split}'.")
            if not os.path.exists(f):
                problems.append(
                    f"Language '{lang.code}': {split} treebank '{f}' does not exist."
                )

    ### Groups.
    members = {}
    for group, codes in rc.groups.items():
        if group in seen:
            problems.append(f"Group '{group}' shadows a language code.")
        for code in codes:
            if code not in seen:
                problems.append(f"Group '{group}' references unknown language '{code}'.")
            if code in members:
                problems.append(
                    f"Language '{code}' belongs to both '{members[code]}' and '{group}'."
                )
            members[code] = group

    ### Cleaning.
    cl = cf['cleaning']
    for key in ('min_tokens', 'max_avg_token_chars', 'max_token_chars', 'min_alpha_fraction'):
        if not _positive(cl.get(key)):
            problems.append(f"cleaning:{key} must be strictly positive.")
    if _positive(cl.get('min_alpha_fraction')) and cl['min_alpha_fraction'] > 1:
        problems.append("cleaning:min_alpha_fraction must be at most 1.")
    if not (0 < float(cl.get('langid_reject_threshold', 0)) <= 1):
        problems.append("cleaning:langid_reject_threshold must be in (0, 1].")
    dev_frac, test_frac = float(cl['dev_frac']), float(cl['test_frac'])
    if dev_frac < 0 or test_frac < 0 or dev_frac + test_frac >= 1:
        problems.append(
            f"cleaning: dev_frac + test_frac must be in [0, 1), got {dev_frac} + {test_frac}."
        )

    ### Sampling.
    sp = cf['sampling']
    if sp.get('basis') not in ('lines', 'bytes'):
        problems.append(f"sampling:basis must be 'lines' or 'bytes', not '{sp.get('basis')}'.")
    for a in [sp.get('alpha')] + list(sp.get('table_alphas', [])):
        if a is None or not (0 <= float(a) <= 1):
            problems.append(f"sampling: alpha {a} is outside [0, 1].")

    ### Encoder.
    enc = cf['encoder']
    for key in ('layers', 'model_dim', 'ffn_dim', 'heads', 'max_positions'):
        if not _positive(enc.get(key)):
            problems.append(f"encoder:{key} must be a positive integer.")
    if _positive(enc.get('heads')) and enc['model_dim'] % enc['heads'] != 0:
        problems.append(
            f"encoder:model_dim ({enc['model_dim']}) is not divisible by heads ({enc['heads']})."
        )

    ### Pretraining.
    pt = cf['pretrain']
    if not (0 <= float(pt['mask_prob']) <= 1):
        problems.append("pretrain:mask_prob must be in [0, 1].")
    if pt['max_sequence_length'] > enc['max_positions']:
        problems.append(
            "pretrain:max_sequence_length exceeds encoder:max_positions "
            + f"({pt['max_sequence_length']} > {enc['max_positions']})."
        )
    if pt['freeze_steps'] < 0:
        problems.append("pretrain:freeze_steps must be nonnegative.")
    for key in ('learning_rate', 'batch_size', 'max_grad_norm'):
        if not _positive(pt.get(key)):
            problems.append(f"pretrain:{key} must be strictly positive.")

    ### Fine-tuning.
    ft = cf['finetune']
    patience, interval = ft.get('patience_epochs'), ft.get('eval_interval_epochs')
    if not _positive(interval):
        problems.append("finetune:eval_interval_epochs must be strictly positive.")
    elif patience is not None and (patience <= 0 or patience % interval != 0):
        problems.append(
            f"finetune:patience_epochs ({patience}) must be a positive multiple "
            + f"of eval_interval_epochs ({interval})."
        )
    if ft['max_sequence_length'] > enc['max_positions']:
        problems.append("finetune:max_sequence_length exceeds encoder:max_positions.")
    if not ft.get('seeds'):
        problems.append("finetune:seeds must list at least one seed.")

    ### Grid.
    grid = cf['grid']
    for key in ('lapt_steps', 'vocab_size', 'alpha'):
        if not grid.get(key):
            problems.append(f"grid:{key} is empty.")
    for steps in grid.get('lapt_steps', []) or []:
        if steps < pt['freeze_steps']:
            problems.append(
                f"grid: lapt_steps {steps} is smaller than pretrain:freeze_steps ({pt['freeze_steps']})."
            )
    for v in grid.get('vocab_size', []) or []:
        if v <= len(specials):
            problems.append(f"grid: vocab_size {v} leaves no room beyond the special tokens.")
    for a in grid.get('alpha', []) or []:
        if not (0 <= float(a) <= 1):
            problems.append(f"grid: alpha {a} is outside [0, 1].")
    settings = _static_config()['records']['settings']
    for s in grid.get('settings', []) or []:
        if s not in settings:
            problems.append(f"grid: unknown setting '{s}' (choose from {list(settings)}).")
    tasks = _static_config()['records']['tasks']
    for t in grid.get('tasks', []) or []:
        if t not in tasks:
            problems.append(f"grid: unknown task '{t}' (choose from {list(tasks)}).")
    if 'zero_shot' in (grid.get('settings') or []) and rc.languages:
        if not any(lang.has_train for lang in rc.languages):
            problems.append("grid: zero_shot requires at least one language with a train treebank.")

    return problems


def validate_run_config(rc: 'kantele.config.RunConfig') -> 'kantele.config.RunConfig':
    """
    Raise a `ConfigError` listing every problem with `rc`, or return `rc` unchanged.
    """
    from kantele.utils.exceptions import ConfigError
    problems = find_problems(rc)
    if problems:
        raise ConfigError(problems)
    return rc
