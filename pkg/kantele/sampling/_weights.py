#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Sampling distributions over languages and language groups.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from kantele.utils.typing import Dict, List, Optional, Mapping, Sequence, SizesDict


@dataclass(frozen=True)
class LanguageWeight:
    """The sampling probability of one unit (a language or a group)."""
    unit: str
    q: float


def apply_cap(sizes: Mapping[str, float], caps: Optional[Mapping[str, float]] = None) -> SizesDict:
    """
    Clip sizes to their caps. Languages without a cap are unchanged.

    >>> apply_cap({'ru': 9.1e9, 'koi': 6.8e6}, {'ru': 2e9})
    {'ru': 2000000000.0, 'koi': 6800000.0}
    """
    from kantele.utils.exceptions import ValidationError
    caps = caps or {}
    for code, cap in caps.items():
        if cap < 0:
            raise ValidationError(f"Cap for '{code}' must be nonnegative (got {cap}).")
    return {
        code: (min(size, caps[code]) if code in caps else size)
        for code, size in sizes.items()
    }


def cap_lines(lines: Sequence[str], cap_bytes: Optional[int]) -> List[str]:
    """Keep the longest prefix of `lines` whose UTF-8 size (one newline per line) fits the cap."""
    if cap_bytes is None:
        return list(lines)
    out, total = [], 0
    for line in lines:
        total += len(line.encode('utf-8')) + 1
        if total > cap_bytes:
            break
        out.append(line)
    return out


def _check_groups(codes: Sequence[str], groups: Mapping[str, Sequence[str]]) -> None:
    from kantele.utils.exceptions import ValidationError
    owner = {}
    for group, members in groups.items():
        for code in members:
            if code not in codes:
                raise ValidationError(f"Group '{group}' contains unknown language '{code}'.")
            if code in owner:
                raise ValidationError(
                    f"Language '{code}' is in both group '{owner[code]}' and group '{group}'."
                )
            owner[code] = group


def group_languages(
        sizes: Mapping[str, float],
        groups: Optional[Mapping[str, Sequence[str]]] = None,
    ) -> SizesDict:
    """
    Merge each group of languages into a single unit whose size is the sum of its members.
    A group takes the position of its first listed member.

    >>> group_languages({'fi': 10, 'vep': 1, 'krl': 2}, {'finnic': ['vep', 'krl']})
    {'fi': 10, 'finnic': 3}
    """
    groups = groups or {}
    _check_groups(list(sizes), groups)
    member_of = {code: group for group, members in groups.items() for code in members}
    units = {}
    for code, size in sizes.items():
        unit = member_of.get(code, code)
        units[unit] = units.get(unit, 0) + size
    return units


def compute_sampling_weights(
        sizes: Mapping[str, float],
        alpha: float,
    ) -> List[LanguageWeight]:
    """
    Compute q_i = n_i^alpha / sum_j n_j^alpha in the order of `sizes`.
    `alpha = 1` is proportional sampling and `alpha = 0` is uniform.

    >>> [round(w.q, 4) for w in compute_sampling_weights({'A': 1000, 'B': 100, 'C': 10}, 0.5)]
    [0.7061, 0.2233, 0.0706]
    """
    import numpy as np
    from kantele.utils.exceptions import ValidationError
    if not sizes:
        raise ValidationError("At least one sampling unit is required.")
    if not 0 <= alpha <= 1:
        raise ValidationError(f"alpha must be in [0, 1] (got {alpha}).")
    units = list(sizes)
    n = np.array([float(sizes[u]) for u in units], dtype=np.float64)
    if not np.all(n > 0):
        empty = [u for u, v in zip(units, n) if not v > 0]
        raise ValidationError(f"Sampling unit(s) with zero size: {empty}")
    ### Work in log space so large sizes cannot overflow.
    logits = alpha * np.log(n)
    w = np.exp(logits - logits.max())
    q = w / w.sum()
    return [LanguageWeight(u, float(p)) for u, p in zip(units, q)]


def allocate_steps(total_steps: int, weights: Sequence[LanguageWeight]) -> Dict[str, int]:
    """
    Split a step budget across units: floor(q_i * total), with the remainder
    given to the unit with the largest weight.

    >>> allocate_steps(10, [LanguageWeight('a', 0.55), LanguageWeight('b', 0.45)])
    {'a': 6, 'b': 4}
    """
    import math
    from kantele.utils.exceptions import ValidationError
    if not weights:
        raise ValidationError("Cannot allocate steps over zero units.")
    steps = {w.unit: math.floor(w.q * total_steps) for w in weights}
    largest = max(weights, key=lambda w: w.q).unit
    steps[largest] += total_steps - sum(steps.values())
    return steps


@dataclass
class SamplingSpec:
    """
    Sizes, caps and groups of a sampling setup.

    `lines` and `bytes` hold raw per-language sizes; `caps` are byte caps.
    With `basis='lines'`, a capped language's line count is scaled by the kept byte fraction.
    """
    alpha: float
    lines: Dict[str, float]
    bytes: Dict[str, float] = field(default_factory=dict)
    caps: Dict[str, float] = field(default_factory=dict)
    groups: Dict[str, List[str]] = field(default_factory=dict)
    basis: str = 'lines'

    def __post_init__(self):
        from kantele.utils.exceptions import ValidationError
        if self.basis not in ('lines', 'bytes'):
            raise ValidationError(f"Unknown sampling basis '{self.basis}'.")
        if self.basis == 'bytes' and set(self.bytes) != set(self.lines):
            raise ValidationError("Byte sizes are required for every language with basis 'bytes'.")
        _check_groups(list(self.lines), self.groups)

    @classmethod
    def from_corpora(
            cls,
            corpora: Mapping[str, Sequence[str]],
            alpha: float,
            caps: Optional[Mapping[str, float]] = None,
            groups: Optional[Mapping[str, Sequence[str]]] = None,
            basis: str = 'lines',
        ) -> 'SamplingSpec':
        """Measure line and byte sizes of `corpora` (language -> lines)."""
        return cls(
            alpha = alpha,
            lines = {code: float(len(lines)) for code, lines in corpora.items()},
            bytes = {
                code: float(sum(len(l.encode('utf-8')) + 1 for l in lines))
                for code, lines in corpora.items()
            },
            caps = dict(caps or {}),
            groups = {k: list(v) for k, v in (groups or {}).items()},
            basis = basis,
        )

    def capped_sizes(self) -> SizesDict:
        if self.basis == 'bytes':
            return apply_cap(self.bytes, self.caps)
        if not self.bytes:
            return dict(self.lines)
        capped_bytes = apply_cap(self.bytes, self.caps)
        return {
            code: (
                n * (capped_bytes[code] / self.bytes[code])
                if self.bytes.get(code) else n
            )
            for code, n in self.lines.items()
        }

    def raw_sizes(self) -> SizesDict:
        return dict(self.bytes if self.basis == 'bytes' else self.lines)

    def unit_sizes(self) -> SizesDict:
        return group_languages(self.capped_sizes(), self.groups)

    def weights(self, alpha: Optional[float] = None) -> List[LanguageWeight]:
        return compute_sampling_weights(
            self.unit_sizes(), self.alpha if alpha is None else alpha
        )
