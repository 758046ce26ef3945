#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Compute-cost models, mixed-effects regression and score reports.
"""

from kantele.analysis._cost import (
    CostModel,
    count_parameters,
    flops_per_token,
    model_flops_per_token,
    relative_cost,
    cost_table,
    monolingual_budget,
)
from kantele.analysis._lmm import LmmFit, fit_lmm, lmm_summary_table, prepare_frame
from kantele.analysis._marginals import marginalize, write_marginals
from kantele.analysis._report import (
    emit_report,
    report_tables,
    seed_statistics,
    format_mean_sd,
)

__all__ = (
    'CostModel',
    'count_parameters',
    'flops_per_token',
    'model_flops_per_token',
    'relative_cost',
    'cost_table',
    'monolingual_budget',
    'LmmFit',
    'fit_lmm',
    'lmm_summary_table',
    'prepare_frame',
    'marginalize',
    'write_marginals',
    'emit_report',
    'report_tables',
    'seed_statistics',
    'format_mean_sd',
)
