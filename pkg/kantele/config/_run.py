#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
The declarative run configuration: a language inventory, a hyperparameter grid,
and every per-stage section resolved against the defaults and a profile.
"""

from __future__ import annotations
import itertools
import pathlib
from dataclasses import dataclass, field
from kantele.utils.typing import Any, Dict, List, Optional, Tuple, PathLike

_SECTIONS = (
    'cleaning', 'sampling', 'subword', 'transplant', 'encoder',
    'pretrain', 'finetune', 'analysis', 'grid', 'system',
)


@dataclass
class LanguageSpec:
    """One language of the inventory."""
    code: str
    files: List[str] = field(default_factory=list)
    resource: str = 'low'
    cap_bytes: Optional[int] = None
    treebank: Dict[str, str] = field(default_factory=dict)

    @property
    def low_resource(self) -> bool:
        return self.resource == 'low'

    @property
    def has_train(self) -> bool:
        return 'train' in self.treebank

    @property
    def has_test(self) -> bool:
        return 'test' in self.treebank


@dataclass
class RunConfig:
    """
    A fully resolved run description.

    `config` holds every pipeline section (`cleaning`, `sampling`, ..., `grid`)
    after cascading the defaults, the chosen profile, the file's own sections,
    and any command-line patch.
    """
    name: str
    profile: str
    languages: List[LanguageSpec]
    config: Dict[str, Any]
    output_dir: Optional[str] = None
    path: Optional[str] = None

    def section(self, key: str) -> Dict[str, Any]:
        return self.config[key]

    @property
    def grid(self) -> Dict[str, Any]:
        return self.config['grid']

    @property
    def seeds(self) -> List[int]:
        return list(self.config['finetune']['seeds'])

    @property
    def codes(self) -> List[str]:
        return [lang.code for lang in self.languages]

    @property
    def resources(self) -> Dict[str, str]:
        return {lang.code: lang.resource for lang in self.languages}

    @property
    def caps(self) -> Dict[str, int]:
        caps = dict(self.config['sampling'].get('caps', {}) or {})
        caps.update({
            lang.code: int(lang.cap_bytes)
            for lang in self.languages
                if lang.cap_bytes is not None
        })
        return caps

    @property
    def groups(self) -> Dict[str, List[str]]:
        return {k: list(v) for k, v in (self.config['sampling'].get('groups', {}) or {}).items()}

    def language(self, code: str) -> LanguageSpec:
        for lang in self.languages:
            if lang.code == code:
                return lang
        raise KeyError(code)

    def cells(self) -> List[Tuple[int, int, float]]:
        """The Cartesian (lapt_steps, vocab_size, alpha) grid in declaration order."""
        return list(itertools.product(
            self.grid['lapt_steps'], self.grid['vocab_size'], self.grid['alpha'],
        ))

    def root_dir(self) -> pathlib.Path:
        """
        The output root. `KANTELE_ROOT_DIR` wins over the file's `output_dir`,
        which wins over the default root.
        """
        import os
        from kantele.config.static import _static_config
        env_var = _static_config()['environment']['root']
        if os.environ.get(env_var, None):
            return pathlib.Path(os.environ[env_var])
        if self.output_dir:
            return pathlib.Path(self.output_dir)
        from kantele.config._paths import ROOT_DIR_PATH
        return pathlib.Path(ROOT_DIR_PATH)

    def run_dir(self, stamp: Optional[str] = None, resume: bool = False) -> pathlib.Path:
        """
        Return the run-stamped directory `<root>/runs/<name>/<stamp>`.
        If `resume` and no stamp is given, reuse the most recent existing stamp.
        """
        import datetime
        runs = self.root_dir() / 'runs' / self.name
        if stamp is None and resume and runs.exists():
            previous = sorted(p.name for p in runs.iterdir() if p.is_dir())
            if previous:
                stamp = previous[-1]
        if stamp is None:
            stamp = datetime.datetime.now().strftime(self.config['system']['run_stamp_format'])
        path = runs / stamp
        path.mkdir(parents=True, exist_ok=True)
        return path

    def to_dict(self) -> Dict[str, Any]:
        """Return the YAML-ready form of the configuration."""
        out = {
            'name': self.name,
            'profile': self.profile,
            'output_dir': self.output_dir,
            'languages': {
                lang.code: {
                    'files': list(lang.files),
                    'resource': lang.resource,
                    'cap_bytes': lang.cap_bytes,
                    'treebank': dict(lang.treebank),
                } for lang in self.languages
            },
        }
        out.update(self.config)
        return out


def _resolve_path(p: str, base: Optional[pathlib.Path]) -> str:
    path = pathlib.Path(p).expanduser()
    if not path.is_absolute() and base is not None:
        path = base / path
    return str(path)


def run_config_from_dict(
        raw: Dict[str, Any],
        patch: Optional[Dict[str, Any]] = None,
        base_dir: Optional[PathLike] = None,
        path: Optional[str] = None,
        validate: bool = True,
    ) -> RunConfig:
    """
    Build a `RunConfig` from a parsed YAML document.

    Parameters
    ----------
    raw: Dict[str, Any]
        The document. Recognised keys: `name`, `profile`, `output_dir`, `languages`,
        `groups`, plus any pipeline section.

    patch: Optional[Dict[str, Any]], default None
        A final patch cascaded over the sections (e.g. from `--config`).

    base_dir: Optional[PathLike], default None
        Relative language paths are resolved against this directory.

    validate: bool, default True
        If `True`, raise a `ConfigError` listing every problem found.
    """
    from kantele.config import get_config, resolve_profile
    from kantele.config._patch import apply_patch_to_config
    from kantele.utils.exceptions import ConfigError
    raw = dict(raw or {})
    base = pathlib.Path(base_dir) if base_dir is not None else None
    profile = str(raw.get('profile', 'full'))
    resolved = resolve_profile(get_config(), profile)
    resolved = apply_patch_to_config(
        resolved, {k: raw[k] for k in _SECTIONS if isinstance(raw.get(k, None), dict)}
    )
    if raw.get('groups'):
        resolved['sampling']['groups'] = {
            k: list(v) for k, v in raw['groups'].items()
        }
    if patch:
        resolved = apply_patch_to_config(resolved, patch)

    languages = []
    _langs = raw.get('languages', {}) or {}
    if isinstance(_langs, list):
        _langs = {l.get('code', ''): l for l in _langs}
    for code, spec in _langs.items():
        spec = spec or {}
        files = spec.get('files', [])
        if isinstance(files, str):
            files = [files]
        languages.append(LanguageSpec(
            code = str(code),
            files = [_resolve_path(f, base) for f in files],
            resource = str(spec.get('resource', 'low')),
            cap_bytes = (int(float(spec['cap_bytes'])) if spec.get('cap_bytes') is not None else None),
            treebank = {
                split: _resolve_path(p, base)
                for split, p in (spec.get('treebank', {}) or {}).items()
            },
        ))

    output_dir = raw.get('output_dir', None)
    rc = RunConfig(
        name = str(raw.get('name', 'run')),
        profile = profile,
        languages = languages,
        config = resolved,
        output_dir = (_resolve_path(output_dir, base) if output_dir else None),
        path = path,
    )
    if validate:
        from kantele.config._validate import validate_run_config
        validate_run_config(rc)
    return rc


def read_run_config(
        path: PathLike,
        patch: Optional[Dict[str, Any]] = None,
        validate: bool = True,
    ) -> RunConfig:
    """
    Read a YAML run file and resolve it into a `RunConfig`.

    Examples
    --------
    >>> rc = read_run_config('uralic.yaml')
    >>> rc.profile
    'desk'
    """
    from kantele.utils.yaml import yaml
    from kantele.utils.exceptions import ConfigError
    path = pathlib.Path(path)
    if not path.exists():
        raise ConfigError([f"Run configuration file '{path}' does not exist."])
    with open(path, 'r', encoding='utf-8') as f:
        try:
            raw = yaml.safe_load(f)
        except Exception as e:
            raise ConfigError([f"Could not parse '{path}': {e}"])
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigError([f"'{path}' must contain a mapping at the top level."])
    return run_config_from_dict(
        raw, patch=patch, base_dir=path.parent, path=str(path), validate=validate,
    )
