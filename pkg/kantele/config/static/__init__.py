#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Insert non-user-editable configuration values here.
"""

static_config = None

def _static_config():
    global static_config
    if static_config is None:
        static_config = {
            'environment': {
                'config': 'KANTELE_CONFIG',
                'root': 'KANTELE_ROOT_DIR',
            },
            'system': {
                'success': {
                    'ignore': (
                        'Success',
                        'success',
                        'Succeeded',
                        '',
                        None,
                    ),
                },
            },
            'records': {
                'columns': (
                    'language',
                    'task',
                    'setting',
                    'lapt_steps',
                    'vocab_size',
                    'alpha',
                    'finetuning_lines',
                    'seed',
                    'score',
                ),
                'tasks': ('pos', 'uas'),
                'settings': ('few_shot', 'full_finetune', 'zero_shot'),
                'hash_prefix': '# schema: ',
                'filename': 'records.tsv',
                'failed_filename': 'failed_cells.tsv',
            },
            'subword': {
                'header': 'kantele-subword 1',
                'specials': ('pad', 'begin', 'end', 'unknown', 'mask'),
            },
            'checkpoint': {
                'magic': b'KNTCKPT1',
            },
            'splits': ('train', 'dev', 'test'),
            'filenames': {
                'filter_stats': 'filter_stats.tsv',
                'sampling_table': 'sampling.tsv',
                'subword_model': 'subword.model',
                'diagnostics': 'diagnostics.tsv',
                'embeddings': 'embeddings.vec',
                'transplant_report': 'transplant.tsv',
                'checkpoint': 'encoder.ckpt',
                'trajectory': 'trajectory.tsv',
                'cost_table': 'cost.tsv',
                'lmm_summary': 'lmm_summary.tsv',
                'marginals': 'marginals_{parameter}.tsv',
                'report_tsv': 'report_{setting}_{task}.tsv',
                'report_md': 'report.md',
            },
            'setup': {
                'name': 'kantele',
                'description': (
                    "Desk-scale workbench for adapting multilingual encoders "
                    + "to a family of low-resource languages."
                ),
                'url': 'https://github.com/kantele-nlp/kantele',
                'author': 'The kantele developers',
                'author_email': 'dev@kantele-nlp.org',
                'maintainer_email': 'dev@kantele-nlp.org',
                'license': 'Apache Software License 2.0',
            },
        }
    return static_config
