#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Per-language treebank splits.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from kantele.utils.typing import Dict, List, Mapping, Optional, PathLike, Sequence


def cap_sentences(sentences: Sequence['Sentence'], cap: Optional[int]) -> List['Sentence']:
    """Keep the first `cap` sentences."""
    if cap is None:
        return list(sentences)
    return list(sentences[:cap])


def sample_sentences(sentences: Sequence['Sentence'], count: int, seed: int) -> List['Sentence']:
    """Draw `count` sentences without replacement (all of them if fewer), keeping file order."""
    import numpy as np
    if count >= len(sentences):
        return list(sentences)
    rng = np.random.default_rng(seed)
    picks = np.sort(rng.choice(len(sentences), size=count, replace=False))
    return [sentences[i] for i in picks]


@dataclass
class Treebank:
    """
    The train, dev and test sentences of one language.

    `dev_carved` is `True` when the dev split was sampled out of train.
    """
    language: str
    train: List['Sentence'] = field(default_factory=list)
    dev: List['Sentence'] = field(default_factory=list)
    test: List['Sentence'] = field(default_factory=list)
    dev_carved: bool = False

    @property
    def has_train(self) -> bool:
        return len(self.train) > 0

    @property
    def has_test(self) -> bool:
        return len(self.test) > 0

    @property
    def test_only(self) -> bool:
        return self.has_test and not self.has_train

    def counts(self) -> Dict[str, int]:
        return {'train': len(self.train), 'dev': len(self.dev), 'test': len(self.test)}

    def carve_dev(self, count: int, seed: int = 0) -> 'Treebank':
        """
        Move `count` seeded-sampled sentences from train to dev.
        At most half of train is moved.
        """
        import numpy as np
        count = min(count, len(self.train) // 2)
        if count <= 0:
            return self
        rng = np.random.default_rng(seed)
        picks = set(rng.choice(len(self.train), size=count, replace=False).tolist())
        self.dev = [s for i, s in enumerate(self.train) if i in picks]
        self.train = [s for i, s in enumerate(self.train) if i not in picks]
        self.dev_carved = True
        return self

    @classmethod
    def from_files(
            cls,
            language: str,
            paths: Mapping[str, PathLike],
            dev_carve_out: int = 300,
            seed: int = 0,
        ) -> 'Treebank':
        """Read the splits listed in `paths`; carve a dev split from train when none is given."""
        from kantele.tasks._conllu import read_conllu
        splits = {
            split: read_conllu(path, language=language) for split, path in paths.items()
        }
        treebank = cls(
            language,
            train = splits.get('train', []),
            dev = splits.get('dev', []),
            test = splits.get('test', []),
        )
        if treebank.has_train and not treebank.dev:
            treebank.carve_dev(dev_carve_out, seed=seed)
        return treebank
