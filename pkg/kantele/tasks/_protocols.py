#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
The few-shot, full fine-tuning and zero-shot evaluation protocols.
"""

from __future__ import annotations
from kantele.utils.typing import Any, Dict, List, Mapping, Optional, Sequence

SETTINGS = ('few_shot', 'full_finetune', 'zero_shot')


def _run_job(job: Dict[str, Any]) -> List['ResultRecord']:
    """Fine-tune once and score every target language."""
    from kantele.core.Record import ResultRecord
    from kantele.tasks._finetune import finetune_pos, finetune_parser
    from kantele.tasks._evaluate import evaluate
    train_fn = finetune_pos if job['task'] == 'pos' else finetune_parser
    result = train_fn(
        job['checkpoint'], job['train'], job['dev'], job['config'], job['seed'],
        tokenizer = job['tokenizer'],
        debug = job.get('debug', False),
    )
    records = []
    for language, test in job['targets'].items():
        records.append(ResultRecord(
            language = language,
            task = job['task'],
            setting = job['setting'],
            lapt_steps = int(job['cell'].get('lapt_steps', 0)),
            vocab_size = int(job['cell'].get('vocab_size', job['tokenizer'].vocab_size)),
            alpha = float(job['cell'].get('alpha', 0.0)),
            finetuning_lines = len(job['train']),
            seed = job['seed'],
            score = evaluate(result.model, test, job['task']),
        ))
    return records


def run_setting(
        setting: str,
        checkpoint: Any,
        treebanks: Mapping[str, 'Treebank'],
        config: 'FinetuneConfig',
        tokenizer: 'kantele.core.SubwordModel.SubwordModel',
        cell: Optional[Mapping[str, Any]] = None,
        tasks: Sequence[str] = ('pos', 'uas'),
        seeds: Optional[Sequence[int]] = None,
        languages: Optional[Sequence[str]] = None,
        workers: Optional[int] = None,
        debug: bool = False,
    ) -> List['ResultRecord']:
    """
    Run one evaluation protocol over every seed and task.

    - `few_shot`: per language, fine-tune on `config.few_shot_sentences` seeded-sampled
      training sentences (all of them when fewer) without early stopping.
    - `full_finetune`: per language, fine-tune on the capped training split with patience.
    - `zero_shot`: fine-tune once on the concatenation of every capped training split and
      evaluate on the languages that have only a test split.

    Parameters
    ----------
    setting: str
        One of `few_shot`, `full_finetune`, `zero_shot`.

    checkpoint: Union[EncoderCheckpoint, Encoder]
        The adapted encoder. Each run fine-tunes its own copy.

    treebanks: Mapping[str, Treebank]
        Language -> treebank.

    config: FinetuneConfig
        The fine-tuning regime.

    cell: Optional[Mapping[str, Any]], default None
        `lapt_steps`, `vocab_size` and `alpha` stamped onto each record.

    Returns
    -------
    One `ResultRecord` per (language, task, seed).
    """
    from kantele.tasks._treebank import cap_sentences, sample_sentences
    from kantele.utils.exceptions import ValidationError
    from kantele.utils.warnings import warn
    from kantele.utils.pool import parallel_map

    if setting not in SETTINGS:
        raise ValidationError(f"Unknown setting '{setting}'. Choose from {list(SETTINGS)}.")
    seeds = list(config.seeds if seeds is None else seeds)
    codes = [c for c in treebanks if languages is None or c in languages]
    cell = dict(cell or {})
    base = {
        'checkpoint': checkpoint, 'tokenizer': tokenizer, 'setting': setting,
        'cell': cell, 'debug': debug,
    }

    jobs = []
    if setting == 'zero_shot':
        trainable = [c for c in treebanks if treebanks[c].has_train]
        if not trainable:
            raise ValidationError("Zero-shot evaluation needs at least one language with a train split.")
        targets = {c: treebanks[c].test for c in codes if treebanks[c].test_only}
        if not targets:
            warn("No test-only language to evaluate zero-shot.", stack=False)
            return []
        train = [s for c in trainable for s in cap_sentences(treebanks[c].train, config.max_train_sentences)]
        dev = [s for c in trainable for s in treebanks[c].dev]
        for task in tasks:
            for seed in seeds:
                jobs.append(dict(
                    base, task=task, seed=seed, train=train, dev=dev,
                    targets=targets, config=config,
                ))
    else:
        evaluated = [c for c in codes if treebanks[c].has_train and treebanks[c].has_test]
        for code in evaluated:
            tb = treebanks[code]
            if setting == 'few_shot' and len(tb.train) < config.few_shot_sentences:
                warn(
                    f"'{code}' has only {len(tb.train)} training sentences; "
                    + f"few-shot uses all of them instead of {config.few_shot_sentences}.",
                    stack = False,
                )
            for task in tasks:
                for seed in seeds:
                    if setting == 'few_shot':
                        train = sample_sentences(tb.train, config.few_shot_sentences, seed)
                        job_config = config.with_patience(None)
                    else:
                        train = cap_sentences(tb.train, config.max_train_sentences)
                        job_config = config
                    jobs.append(dict(
                        base, task=task, seed=seed, train=train, dev=tb.dev,
                        targets={code: tb.test}, config=job_config,
                    ))

    results = parallel_map(_run_job, jobs, workers=workers, debug=debug)
    return [record for records in results for record in records]


def aggregate_records(records: Sequence['ResultRecord']) -> 'pd.DataFrame':
    """
    Mean and sample standard deviation of scores over seeds, per
    (language, task, setting, lapt_steps, vocab_size, alpha).
    """
    from kantele.core.Record import records_to_frame
    frame = records_to_frame(records)
    keys = ['language', 'task', 'setting', 'lapt_steps', 'vocab_size', 'alpha']
    grouped = frame.groupby(keys, sort=True)['score']
    out = grouped.agg(['mean', 'std', 'count']).reset_index()
    return out.rename(columns={'std': 'sd', 'count': 'seeds'})
