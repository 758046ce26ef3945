#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
A `LanguageCorpus` is the cleaned, deduplicated line store of one language.

```
>>> from kantele.core.Corpus import clean_corpus, split_corpus
>>> corpus, stats = clean_corpus(['kpv.txt'], 'kpv')
>>> corpus = split_corpus(corpus, 0.05, 0.05, seed=0)
>>> len(corpus.train), len(corpus.dev), len(corpus.test)
(90, 5, 5)
```
"""

from __future__ import annotations
from dataclasses import dataclass, field
from kantele.utils.typing import Optional, Dict, Any, List

REJECT_REASONS = (
    'too_few_tokens',
    'avg_token_too_long',
    'token_too_long',
    'insufficient_alphabetic',
    'langid_english',
    'encoding',
)


@dataclass(frozen=True)
class CleaningConfig:
    """Thresholds of the line filters."""
    min_tokens: int = 2
    max_avg_token_chars: float = 16
    max_token_chars: int = 32
    min_alpha_fraction: float = 0.5
    langid_reject_threshold: float = 0.90

    def __post_init__(self):
        from kantele.utils.exceptions import ValidationError
        for key in ('min_tokens', 'max_avg_token_chars', 'max_token_chars', 'min_alpha_fraction'):
            if not getattr(self, key) > 0:
                raise ValidationError(f"CleaningConfig.{key} must be strictly positive.")
        if self.min_alpha_fraction > 1:
            raise ValidationError("CleaningConfig.min_alpha_fraction must be at most 1.")
        if not 0 < self.langid_reject_threshold <= 1:
            raise ValidationError("CleaningConfig.langid_reject_threshold must be in (0, 1].")

    @classmethod
    def from_config(cls, cf: Optional[Dict[str, Any]] = None) -> 'CleaningConfig':
        """Build from the `cleaning` configuration section (unknown keys are ignored)."""
        if cf is None:
            from kantele.config import get_config
            cf = get_config('cleaning')
        from kantele.utils.misc import filter_keywords
        return cls(**filter_keywords(cls, **cf))


@dataclass(frozen=True)
class Verdict:
    """The outcome of `clean_line`: keep, or reject with the first failing reason."""
    keep: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.keep

KEEP = Verdict(True)


@dataclass
class FilterStats:
    """Per-reason rejection counts of one cleaning pass."""
    lines_in: int = 0
    lines_kept: int = 0
    duplicates_removed: int = 0
    rejections: Dict[str, int] = field(default_factory=dict)

    @property
    def lines_rejected(self) -> int:
        return sum(self.rejections.values())

    def reject(self, reason: str) -> None:
        self.rejections[reason] = self.rejections.get(reason, 0) + 1

    def __add__(self, other: 'FilterStats') -> 'FilterStats':
        rejections = dict(self.rejections)
        for reason, count in other.rejections.items():
            rejections[reason] = rejections.get(reason, 0) + count
        return FilterStats(
            lines_in = self.lines_in + other.lines_in,
            lines_kept = self.lines_kept + other.lines_kept,
            duplicates_removed = self.duplicates_removed + other.duplicates_removed,
            rejections = rejections,
        )

    def is_conserved(self) -> bool:
        """Every input line is either kept, rejected, or a removed duplicate."""
        return self.lines_in == self.lines_kept + self.lines_rejected + self.duplicates_removed

    def to_dict(self) -> Dict[str, int]:
        out = {
            'lines_in': self.lines_in,
            'lines_kept': self.lines_kept,
            'duplicates_removed': self.duplicates_removed,
        }
        for reason in REJECT_REASONS:
            out[reason] = self.rejections.get(reason, 0)
        return out


@dataclass
class LanguageCorpus:
    """
    The ordered lines of one language, optionally labelled with splits.

    `splits[i]` is the split (`train`, `dev` or `test`) of `lines[i]`;
    an unsplit corpus has `splits = None` and behaves as all-train.
    """
    language: str
    lines: List[str] = field(default_factory=list)
    splits: Optional[List[str]] = None

    def __len__(self) -> int:
        return len(self.lines)

    def split_lines(self, name: str) -> List[str]:
        if self.splits is None:
            return list(self.lines) if name == 'train' else []
        return [line for line, s in zip(self.lines, self.splits) if s == name]

    @property
    def train(self) -> List[str]:
        return self.split_lines('train')

    @property
    def dev(self) -> List[str]:
        return self.split_lines('dev')

    @property
    def test(self) -> List[str]:
        return self.split_lines('test')

    def split_counts(self) -> Dict[str, int]:
        from kantele.config.static import _static_config
        return {s: len(self.split_lines(s)) for s in _static_config()['splits']}

    from ._split import split
    from ._io import write_splits


from kantele.core.Corpus._clean import clean_line, clean_corpus, normalize_line
from kantele.core.Corpus._split import split_corpus
from kantele.core.Corpus._io import write_splits, read_splits, write_filter_stats
