#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Alpha-weighted language sampling.

Units (languages, or groups of languages sampled as one) are drawn with
probability q_i = n_i^alpha / sum_j n_j^alpha, sentence by sentence.
"""

from kantele.sampling._weights import (
    LanguageWeight,
    SamplingSpec,
    apply_cap,
    cap_lines,
    group_languages,
    compute_sampling_weights,
    allocate_steps,
)
from kantele.sampling._stream import SampleStream, sample_stream, vocabulary_sample
from kantele.sampling._table import sampling_table, write_sampling_table

__all__ = (
    'LanguageWeight', 'SamplingSpec', 'apply_cap', 'cap_lines', 'group_languages',
    'compute_sampling_weights', 'allocate_steps', 'SampleStream', 'sample_stream',
    'vocabulary_sample', 'sampling_table', 'write_sampling_table',
)
