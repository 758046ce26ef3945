#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Adapt a multilingual encoder to a family of low-resource languages on a desk-sized budget.

```
>>> import kantele
>>> rc = kantele.read_run_config('uralic.yaml')
>>> ws = kantele.Workspace(rc)
>>> ws.run_grid()
```
"""

from kantele.config import __version__, read_run_config, RunConfig
from kantele.core import (
    LanguageCorpus, SubwordModel, Encoder, EncoderConfig, PretrainConfig, ResultRecord, Workspace,
)

__all__ = (
    'read_run_config', 'RunConfig', 'LanguageCorpus', 'SubwordModel', 'Encoder',
    'EncoderConfig', 'PretrainConfig', 'ResultRecord', 'Workspace',
)
