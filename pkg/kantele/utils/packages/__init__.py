#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Functions for importing declared packages reside here.
"""

from __future__ import annotations
import importlib
from kantele.utils.typing import Any, List, Optional, Union, Tuple

from kantele.utils.packages._packages import packages, all_packages

_import_module = importlib.import_module


def attempt_import(
        *names: str,
        warn: bool = True,
        split: bool = True,
    ) -> Union['ModuleType', Tuple['ModuleType']]:
    """
    Raise a warning if packages are not installed; otherwise import and return modules.

    Returns tuple of modules if multiple names are provided, else returns one module.
    Modules which cannot be imported are returned as `None`.

    Parameters
    ----------
    names: str
        The packages to be imported.

    warn: bool, default True
        If `True`, raise a warning if a package cannot be imported.

    split: bool, default True
        If `True`, split packages' names on `'.'` to look up the install name.

    Examples
    --------
    >>> np, pd = attempt_import('numpy', 'pandas')
    >>> yaml = attempt_import('yaml')
    """
    modules = []
    for name in names:
        root_name = name.split('.')[0] if split else name
        install_name = all_packages.get(root_name, root_name)
        try:
            mod = _import_module(name)
        except ImportError as e:
            if warn:
                from kantele.utils.warnings import warn as _warn
                _warn(
                    f"Failed to import module '{name}'. "
                    + f"Install it with `pip install '{install_name}'`.\nException:\n{e}",
                    ImportWarning,
                    stacklevel = 3,
                    color = False,
                )
            mod = None
        modules.append(mod)
    modules = tuple(modules)
    if len(modules) == 1:
        return modules[0]
    return modules


def get_modules_from_package(
        package: 'package',
        names: bool = False,
        recursive: bool = False,
    ) -> Union[List[str], List['ModuleType'], Tuple[List[str], List['ModuleType']]]:
    """
    Find and import all modules in a package.

    Returns
    -------
    Either a list of modules or a tuple of lists of names and modules.
    """
    from os.path import dirname, join, isfile, isdir, basename
    import glob

    pattern = '*' if recursive else '*.py'
    package_path = dirname(package.__file__ or package.__path__[0])
    module_names = glob.glob(join(package_path, pattern), recursive=recursive)
    _all = [
        basename(f)[:-3] if isfile(f) else basename(f)
        for f in module_names
            if ((isfile(f) and f.endswith('.py')) or (recursive and isdir(f)))
               and not f.endswith('__init__.py')
               and not f.endswith('__pycache__')
               and not basename(f).startswith('_')
    ]
    _all = sorted(_all)

    modules = []
    for module_name in [package.__name__ + "." + mod_name for mod_name in _all]:
        modules.append(_import_module(module_name))
    if names:
        return _all, modules
    return modules
