#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
The central value types of the pipeline.
"""

from kantele.core.Corpus import LanguageCorpus, CleaningConfig, FilterStats
from kantele.core.SubwordModel import SubwordModel, TokenizerDiagnostics
from kantele.core.Encoder import Encoder, EncoderConfig, PretrainConfig, EncoderCheckpoint
from kantele.core.Record import ResultRecord
from kantele.core.Workspace import Workspace
