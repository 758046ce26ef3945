#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Result records: one evaluation score per
(language, task, setting, configuration, seed).
"""

from __future__ import annotations
from dataclasses import dataclass, asdict, fields
from kantele.utils.typing import Any, Dict, Tuple


@dataclass(frozen=True)
class ResultRecord:
    """A single evaluation score."""
    language: str
    task: str
    setting: str
    lapt_steps: int
    vocab_size: int
    alpha: float
    finetuning_lines: int
    seed: int
    score: float

    def __post_init__(self):
        from kantele.config.static import _static_config
        from kantele.utils.exceptions import ValidationError
        scf = _static_config()['records']
        if self.task not in scf['tasks']:
            raise ValidationError(f"Unknown task '{self.task}'.")
        if self.setting not in scf['settings']:
            raise ValidationError(f"Unknown setting '{self.setting}'.")
        if not 0.0 <= self.score <= 100.0:
            raise ValidationError(f"Score {self.score} is outside [0, 100].")

    @property
    def cell_key(self) -> Tuple[Any, ...]:
        """Identifies the record within a grid, without its score."""
        return cell_key(
            self.language, self.task, self.setting, self.lapt_steps,
            self.vocab_size, self.alpha, self.seed,
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> 'ResultRecord':
        types = {f.name: f.type for f in fields(cls)}
        casts = {'int': int, 'float': float, 'str': str}
        return cls(**{k: casts[types[k]](d[k]) for k in types})


def cell_key(
        language: str,
        task: str,
        setting: str,
        lapt_steps: int,
        vocab_size: int,
        alpha: float,
        seed: int,
    ) -> Tuple[Any, ...]:
    return (str(language), str(task), str(setting), int(lapt_steps), int(vocab_size), round(float(alpha), 6), int(seed))


from kantele.core.Record._io import (
    schema_hash, append_records, read_records, completed_keys, records_to_frame,
)
