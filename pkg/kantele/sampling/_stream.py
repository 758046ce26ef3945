#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
The deterministic, infinite, sentence-wise sampled training stream.
"""

from __future__ import annotations
from kantele.utils.typing import (
    Dict, List, Optional, Mapping, Sequence, Tuple, Iterator,
)
from kantele.sampling._weights import LanguageWeight

_CHUNK = 4096


class _UnitCycle:
    """Cycle through a pool of lines, reshuffling at the start of every pass."""

    def __init__(self, lines: Sequence[str], rng: 'numpy.random.Generator'):
        self.lines = lines
        self.rng = rng
        self.order = None
        self.position = 0
        self.epoch = 0

    def next(self) -> str:
        if self.order is None or self.position >= len(self.order):
            self.order = self.rng.permutation(len(self.lines))
            self.position = 0
            self.epoch += 1
        line = self.lines[self.order[self.position]]
        self.position += 1
        return line


class _UniformMemberCycle:
    """Pick a group member uniformly, then draw from that member's own cycle."""

    def __init__(self, pools: List[Sequence[str]], rng: 'numpy.random.Generator'):
        import numpy as np
        self.rng = rng
        children = rng.spawn(len(pools)) if hasattr(rng, 'spawn') else [
            np.random.default_rng(s) for s in rng.integers(0, 2**63 - 1, size=len(pools))
        ]
        self.cycles = [_UnitCycle(p, r) for p, r in zip(pools, children)]

    def next(self) -> str:
        return self.cycles[int(self.rng.integers(len(self.cycles)))].next()


class SampleStream:
    """
    An infinite iterator of lines.

    Each line independently draws a unit from the weights, then takes the next line
    of that unit's reshuffled cycle. The stream is a pure function of its inputs and `seed`.
    """

    def __init__(
            self,
            pools: Mapping[str, Sequence[str]],
            weights: Sequence[LanguageWeight],
            seed: int = 0,
            member_pools: Optional[Mapping[str, List[Sequence[str]]]] = None,
        ):
        import numpy as np
        from kantele.utils.exceptions import ValidationError
        self.units = [w.unit for w in weights]
        missing = [u for u in self.units if u not in pools]
        if missing:
            raise ValidationError(f"No lines were provided for sampling unit(s) {missing}.")
        empty = [u for u in self.units if len(pools[u]) == 0]
        if empty:
            raise ValidationError(f"Sampling unit(s) {empty} have no lines.")
        q = np.array([w.q for w in weights], dtype=np.float64)
        self.q = q / q.sum()
        self.seed = seed
        seq = np.random.SeedSequence(int(seed))
        unit_seq, *line_seqs = seq.spawn(len(self.units) + 1)
        self._rng = np.random.default_rng(unit_seq)
        member_pools = member_pools or {}
        self._cycles = {}
        for u, s in zip(self.units, line_seqs):
            rng = np.random.default_rng(s)
            if u in member_pools:
                self._cycles[u] = _UniformMemberCycle(member_pools[u], rng)
            else:
                self._cycles[u] = _UnitCycle(pools[u], rng)
        self._buffer = []
        self.drawn = 0

    def __iter__(self) -> Iterator[str]:
        return self

    def _next_unit(self) -> int:
        if not self._buffer:
            self._buffer = list(
                self._rng.choice(len(self.units), size=_CHUNK, p=self.q)[::-1]
            )
        return int(self._buffer.pop())

    def next_with_unit(self) -> Tuple[str, str]:
        """Draw one `(unit, line)` pair."""
        unit = self.units[self._next_unit()]
        self.drawn += 1
        return unit, self._cycles[unit].next()

    def __next__(self) -> str:
        return self.next_with_unit()[1]

    def take(self, n: int, with_units: bool = False) -> List:
        """Return the next `n` lines (or `(unit, line)` pairs)."""
        pairs = [self.next_with_unit() for _ in range(n)]
        return pairs if with_units else [line for _, line in pairs]


def sample_stream(
        corpora: Mapping[str, Sequence[str]],
        weights: Sequence[LanguageWeight],
        seed: int = 0,
        groups: Optional[Mapping[str, Sequence[str]]] = None,
        within_group_policy: str = 'proportional',
    ) -> SampleStream:
    """
    Build the sampled training stream.

    Parameters
    ----------
    corpora: Mapping[str, Sequence[str]]
        Language code -> training lines.

    weights: Sequence[LanguageWeight]
        Weights over units (languages not in a group, and group names).

    seed: int, default 0
        The stream is a pure function of this seed.

    groups: Optional[Mapping[str, Sequence[str]]], default None
        Group name -> member codes.

    within_group_policy: str, default 'proportional'
        `'proportional'` draws uniformly over the concatenated member lines
        (members weighted by size); `'uniform'` picks a member uniformly first.

    Examples
    --------
    >>> stream = sample_stream({'fi': fi_lines, 'kpv': kpv_lines}, weights, seed=0)
    >>> next(stream)
    'Minä olen täällä.'
    """
    from kantele.utils.exceptions import ValidationError
    if within_group_policy not in ('proportional', 'uniform'):
        raise ValidationError(f"Unknown within-group policy '{within_group_policy}'.")
    groups = groups or {}
    pools, member_pools = {}, {}
    for code, lines in corpora.items():
        pools[code] = lines
    for group, members in groups.items():
        missing = [m for m in members if m not in corpora]
        if missing:
            raise ValidationError(f"Group '{group}' references missing corpora {missing}.")
        pools[group] = [line for m in members for line in corpora[m]]
        if within_group_policy == 'uniform':
            member_pools[group] = [corpora[m] for m in members if len(corpora[m]) > 0]
    return SampleStream(pools, weights, seed=seed, member_pools=member_pools)


def vocabulary_sample(
        corpora: Mapping[str, Sequence[str]],
        alpha: float = 0.2,
        max_lines: int = 5_000_000,
        seed: int = 0,
        groups: Optional[Mapping[str, Sequence[str]]] = None,
        caps: Optional[Mapping[str, float]] = None,
    ) -> List[str]:
    """
    Lines for tokenizer training.

    A single language with at most `max_lines` lines is used whole. Otherwise
    `min(max_lines, total)` lines are drawn from the alpha-weighted stream, so
    a multilingual vocabulary always sees the smoothed language mix.

    >>> sample = vocabulary_sample({'fi': ['a'] * 90, 'kpv': ['b'] * 10}, alpha=0.0)
    >>> len(sample), sample.count('b') > 10
    (100, True)
    """
    from kantele.sampling._weights import SamplingSpec
    total = sum(len(v) for v in corpora.values())
    if len(corpora) == 1 and total <= max_lines:
        return [line for lines in corpora.values() for line in lines]
    spec = SamplingSpec.from_corpora(corpora, alpha, caps=caps, groups=groups)
    stream = sample_stream(corpora, spec.weights(), seed=seed, groups=groups)
    return stream.take(min(int(max_lines), total))
