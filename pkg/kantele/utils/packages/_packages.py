#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Directory of necessary packages

packages dictionary is structured in the following schema:
    {
        <group> : {
            <import_name> : <install_name>
        }
    }
"""

from __future__ import annotations
from typing import Dict

packages : Dict[str, Dict[str, str]] = {
    'required' : {
        'numpy'                      : 'numpy>=1.21.0',
        'scipy'                      : 'scipy>=1.7.0',
        'pandas'                     : 'pandas>=1.3.0',
        'yaml'                       : 'PyYAML>=5.3.1',
        'patsy'                      : 'patsy>=0.5.2',
    },
    'formatting' : {
        'rich'                       : 'rich>=10.12.0',
        'typing_extensions'          : 'typing_extensions>=3.7.4.3',
        'pygments'                   : 'pygments>=2.7.2',
    },
    '_required': {
        'more_itertools'             : 'more-itertools>=8.7.0',
        'joblib'                     : 'joblib>=0.17.0',
    },
    'dev-tools': {
        'pytest'                     : 'pytest>=6.2.2',
    },
}

all_packages = dict()
for group, import_names in packages.items():
    all_packages.update(import_names)

skip_groups = {'dev-tools'}
_full = dict()
for group, import_names in packages.items():
    if group in skip_groups:
        continue
    for import_name, install_name in import_names.items():
        _full[import_name] = install_name
packages['full'] = _full
