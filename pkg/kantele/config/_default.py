#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
The default configuration values to write to the run configuration.
Top-level sections mirror the pipeline stages. Full-scale values follow the
published pretraining and fine-tuning hyperparameters; the `desk` profile
overrides them for CPU-sized runs.
"""

from __future__ import annotations
import copy
from kantele.config._formatting import default_formatting_config

default_cleaning_config = {
    'min_tokens': 2,
    'max_avg_token_chars': 16,
    'max_token_chars': 32,
    'min_alpha_fraction': 0.5,
    'langid_reject_threshold': 0.90,
    'langid': None,
    'normalization': 'NFC',
    'dev_frac': 0.05,
    'test_frac': 0.05,
    'split_seed': 0,
}

default_sampling_config = {
    'alpha': 0.2,
    'basis': 'lines',
    'caps': {},
    'groups': {},
    'seed': 0,
    'table_alphas': [0.0, 0.1, 0.2, 0.3, 0.4, 1.0],
}

default_subword_config = {
    'vocab_size': 16384,
    'max_lines': 5_000_000,
    'alpha': 0.2,
    'marker': '▁',
    'specials': {
        'pad': '<pad>',
        'begin': '<s>',
        'end': '</s>',
        'unknown': '<unk>',
        'mask': '<mask>',
    },
    'length_sample_lines': 100_000,
    'length_sample_alpha': 0.1,
}

default_transplant_config = {
    'aux_dim': 100,
    'window': 5,
    'k': 10,
    'noise_scale': 0.01,
    'seed': 0,
    'source_vocab_size': 250_002,
}

default_encoder_config = {
    'layers': 12,
    'model_dim': 768,
    'ffn_dim': 3072,
    'heads': 12,
    'max_positions': 256,
    'init_std': 0.02,
}

default_pretrain_config = {
    'total_steps': 100_000,
    'freeze_steps': 10_000,
    'mask_prob': 0.15,
    'learning_rate': 1e-5,
    'schedule': 'linear',
    'batch_size': 200,
    'max_grad_norm': 1.0,
    'dev_eval_interval': None,
    'max_sequence_length': 256,
    'dev_lines': 2048,
    'seed': 0,
    'dtype': 'float32',
}

default_finetune_config = {
    'learning_rate': 5e-6,
    'schedule': 'constant',
    'max_epochs': 64,
    'eval_interval_epochs': 2,
    'patience_epochs': 8,
    'batch_size': 72,
    'max_grad_norm': 1.0,
    'max_train_sentences': 32_768,
    'few_shot_sentences': 512,
    'dev_carve_out': 300,
    'max_sequence_length': 256,
    'arc_dim': 64,
    'seeds': [1, 2, 3, 4],
}

default_analysis_config = {
    'formula': 'score ~ lapt_steps + vocab_size + finetuning_lines + task + resource:alpha',
    'group': 'language',
    'scales': {
        'lapt_steps': 100_000,
        'vocab_size': 16_384,
        'finetuning_lines': 512,
        'alpha': 0.1,
    },
    'significance_t': 1.96,
    'ratio_bounds': [1e-8, 1e8],
    'ratio_grid_points': 65,
    'tolerance': 1e-8,
    'budget_steps': 400_000,
    'budget_alpha': 0.1,
    'cost_dims': {
        'xlmr-base': {
            'layers': 12,
            'model_dim': 768,
            'ffn_dim': 3072,
            'max_positions': 512,
        },
        'desk': {
            'layers': 2,
            'model_dim': 64,
            'ffn_dim': 256,
            'max_positions': 64,
        },
    },
}

default_grid_config = {
    'lapt_steps': [100_000, 200_000, 400_000],
    'vocab_size': [16_384, 32_768, 65_536],
    'alpha': [0.1, 0.2, 0.3, 0.4],
    'settings': ['few_shot', 'full_finetune', 'zero_shot'],
    'tasks': ['pos', 'uas'],
}

default_system_config = {
    'workers': 1,
    'run_stamp_format': '%Y%m%d-%H%M%S',
}

default_profiles_config = {
    'full': {},
    'desk': {
        'subword': {
            'vocab_size': 512,
            'max_lines': 50_000,
            'length_sample_lines': 2_000,
        },
        'transplant': {
            'aux_dim': 32,
            'source_vocab_size': 1024,
        },
        'encoder': {
            'layers': 2,
            'model_dim': 64,
            'ffn_dim': 256,
            'heads': 2,
            'max_positions': 64,
        },
        'pretrain': {
            'total_steps': 2_000,
            'freeze_steps': 200,
            'learning_rate': 1e-3,
            'batch_size': 16,
            'max_sequence_length': 64,
            'dev_lines': 128,
        },
        'finetune': {
            'learning_rate': 1e-3,
            'max_epochs': 16,
            'batch_size': 16,
            'max_sequence_length': 64,
            'arc_dim': 32,
            'seeds': [1, 2],
        },
        'grid': {
            'lapt_steps': [500, 1_000],
            'vocab_size': [256, 512],
            'alpha': [0.1, 0.3],
        },
    },
}

default_config = {
    'cleaning': default_cleaning_config,
    'sampling': default_sampling_config,
    'subword': default_subword_config,
    'transplant': default_transplant_config,
    'encoder': default_encoder_config,
    'pretrain': default_pretrain_config,
    'finetune': default_finetune_config,
    'analysis': default_analysis_config,
    'grid': default_grid_config,
    'system': default_system_config,
    'formatting': default_formatting_config,
    'profiles': default_profiles_config,
}


def get_default_config() -> dict:
    """Return a deep copy of the default configuration."""
    return copy.deepcopy(default_config)
