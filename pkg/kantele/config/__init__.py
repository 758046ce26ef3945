#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Build and index the active configuration dictionary.
"""

from __future__ import annotations
import os, sys, pathlib
from kantele.utils.typing import Any, Dict, Optional

from kantele.config._version import __version__
from kantele.config.static import _static_config
from kantele.config._patch import apply_patch_to_config
__all__ = (
    'get_config', 'set_config', 'patch_config', 'resolve_profile',
    'RunConfig', 'LanguageSpec', 'read_run_config',
)

config = None
def _config(reload: bool = False) -> Dict[str, Any]:
    """
    Build the configuration from the defaults and the environment patch.
    """
    global config
    if config is None or reload:
        from kantele.config._default import get_default_config
        config = get_default_config()
        _apply_environment_config(_static_config()['environment']['config'])
    return config


def set_config(cf: Dict[str, Any]) -> Dict[str, Any]:
    """
    Set the configuration dictionary.
    """
    global config
    if not isinstance(cf, dict):
        from kantele.utils.warnings import error
        from kantele.utils.exceptions import ConfigError
        error([f"Invalid value for config: {cf}"], ConfigError)
    config = cf
    return config


def patch_config(patch: Dict[str, Any]) -> Dict[str, Any]:
    """Cascade `patch` over the active configuration and make the result active."""
    return set_config(apply_patch_to_config(_config(), patch))


def get_config(
        *keys: str,
        as_tuple: bool = False,
        warn: bool = True,
        debug: bool = False
    ) -> Any:
    """
    Return the configuration dictionary.
    If positional arguments are provided, index by the keys.
    Raises a warning if invalid keys are provided.

    Parameters
    ----------
    keys: str:
        List of strings to index.

    as_tuple: bool, default False
        If `True`, return a tuple of type (success, value).

    warn: bool, default True
        If `True`, warn about keys which cannot be found.

    Returns
    -------
    The value in the configuration dictionary indexed by the provided keys.

    Examples
    --------
    >>> get_config('pretrain', 'mask_prob')
    0.15
    >>> get_config('does', 'not', 'exist')
    UserWarning:  🔔 Invalid keys in config: ('does', 'not', 'exist')
    """
    if debug:
        from kantele.utils.debug import dprint
        dprint(f"Indexing keys: {keys}")

    c = _config()
    invalid_keys = False
    for k in keys:
        try:
            c = c[k]
        except Exception:
            invalid_keys = True
            break

    if invalid_keys:
        if warn:
            from kantele.utils.warnings import warn as _warn
            _warn(f"Invalid keys in config: {keys}", stacklevel=3)
        if as_tuple:
            return False, None
        return None

    if as_tuple:
        return True, c
    return c


def resolve_profile(cf: Dict[str, Any], profile: str) -> Dict[str, Any]:
    """
    Return a copy of `cf` with the named profile cascaded over it
    (the `profiles` key itself is dropped).
    """
    profiles = cf.get('profiles', {})
    if profile not in profiles:
        from kantele.utils.exceptions import ConfigError
        raise ConfigError([
            f"Unknown profile '{profile}' (choose from {sorted(profiles)})."
        ])
    base = {k: v for k, v in cf.items() if k != 'profiles'}
    return apply_patch_to_config(base, profiles[profile])


def _apply_environment_config(env_var: str) -> None:
    global config
    if env_var not in os.environ:
        return
    from kantele.utils.misc import string_to_dict
    try:
        _patch = string_to_dict(str(os.environ[env_var]))
    except Exception:
        _patch = None
    if not isinstance(_patch, dict):
        print(
            f"Environment variable {env_var} is set but cannot be parsed.\n"
            + f"Unset {env_var} or change to JSON or simplified dictionary format.\n"
            + f"{env_var} is set to:\n{os.environ[env_var]}\n"
            + "Skipping patching the environment into config...",
            file = sys.stderr,
        )
        return
    config = apply_patch_to_config(config, _patch)


environment_root_dir = _static_config()['environment']['root']
if environment_root_dir in os.environ:
    from kantele.config._paths import set_root
    root_dir_path = pathlib.Path(os.environ[environment_root_dir]).absolute()
    if not root_dir_path.exists():
        print(
            f"Invalid root directory '{str(root_dir_path)}' set for " +
            f"environment variable '{environment_root_dir}'.\n" +
            f"Please enter a valid path for {environment_root_dir}.",
            file = sys.stderr,
        )
        sys.exit(1)
    set_root(root_dir_path)

from kantele.config._run import RunConfig, LanguageSpec, read_run_config

__doc__ = f"kantele v{__version__}"
