#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
A `SubwordModel` is a trained pair-merge vocabulary.

Words are whitespace-delimited. The first piece of every word carries the boundary
marker (`▁` by default), so `'ab cd'` at the character level is `['▁a', 'b', '▁c', 'd']`.
Special tokens occupy the lowest ids in the order pad, begin, end, unknown, mask.

```
>>> from kantele.core.SubwordModel import train_subword
>>> model = train_subword(['abab ab'] * 1000, vocab_size=11)
>>> model.tokenize('abab')
['▁ab', 'ab']
```
"""

from __future__ import annotations
from dataclasses import dataclass
from kantele.utils.typing import Dict, List, Optional, Tuple, IdSequence

DEFAULT_SPECIALS = {
    'pad': '<pad>',
    'begin': '<s>',
    'end': '</s>',
    'unknown': '<unk>',
    'mask': '<mask>',
}


@dataclass(frozen=True)
class TokenizerDiagnostics:
    """Compression and coverage of a vocabulary on a text sample."""
    chars_per_token: float
    unk_unigram_frequency: float
    unk_type_frequency: float
    mean_sequence_length: float
    lines: int = 0
    tokens: int = 0

    def to_dict(self) -> Dict[str, float]:
        from dataclasses import asdict
        return asdict(self)


class SubwordModel:
    """
    An immutable subword vocabulary with its merge table.

    Parameters
    ----------
    vocab: List[str]
        Token strings ordered by id. The first entries are the special tokens.

    merges: List[Tuple[str, str]]
        Merge rules in priority order.

    specials: Optional[Dict[str, str]], default None
        Role -> surface string for `pad`, `begin`, `end`, `unknown`, `mask`.

    marker: str, default '▁'
        The word-boundary marker prefixed to word-initial pieces.

    normalization: Optional[str], default 'NFC'
        Unicode normal form applied to text before encoding.
    """

    def __init__(
            self,
            vocab: List[str],
            merges: List[Tuple[str, str]],
            specials: Optional[Dict[str, str]] = None,
            marker: str = '▁',
            normalization: Optional[str] = 'NFC',
        ):
        from kantele.utils.exceptions import ValidationError
        from kantele.config.static import _static_config
        self.specials = dict(specials or DEFAULT_SPECIALS)
        roles = _static_config()['subword']['specials']
        if sorted(self.specials) != sorted(roles):
            raise ValidationError(f"Special tokens must cover exactly the roles {list(roles)}.")
        if list(vocab[:len(roles)]) != [self.specials[r] for r in roles]:
            raise ValidationError("Special tokens must occupy the lowest ids in role order.")
        if len(set(vocab)) != len(vocab):
            raise ValidationError("Vocabulary contains duplicate tokens.")
        self.vocab = list(vocab)
        self.merges = [tuple(m) for m in merges]
        self.marker = marker
        self.normalization = normalization
        self.token_to_id = {t: i for i, t in enumerate(self.vocab)}
        self.ranks = {}
        for rank, pair in enumerate(self.merges):
            self.ranks.setdefault(pair, rank)
        self.special_ids = {role: self.token_to_id[s] for role, s in self.specials.items()}
        self._cache = {}

    def __len__(self) -> int:
        return len(self.vocab)

    def __repr__(self) -> str:
        return f"SubwordModel(vocab_size={len(self)}, merges={len(self.merges)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubwordModel)
            and self.vocab == other.vocab
            and self.merges == other.merges
            and self.specials == other.specials
            and self.marker == other.marker
        )

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)

    @property
    def num_specials(self) -> int:
        return len(self.specials)

    @property
    def pad_id(self) -> int:
        return self.special_ids['pad']

    @property
    def begin_id(self) -> int:
        return self.special_ids['begin']

    @property
    def end_id(self) -> int:
        return self.special_ids['end']

    @property
    def unk_id(self) -> int:
        return self.special_ids['unknown']

    @property
    def mask_id(self) -> int:
        return self.special_ids['mask']

    @property
    def alphabet(self) -> List[str]:
        """The single-character symbols (with or without the marker)."""
        n = self.num_specials
        return [
            t for t in self.vocab[n:]
                if len(t) == 1 or (t.startswith(self.marker) and len(t) == len(self.marker) + 1)
        ]

    from ._encode import (
        normalize, word_symbols, encode_word, tokenize, encode, encode_words, decode,
    )
    from ._diagnostics import diagnostics, mean_sequence_length
    from ._io import write


from kantele.core.SubwordModel._train import train_subword
from kantele.core.SubwordModel._io import read as _read
from kantele.core.SubwordModel._diagnostics import diagnostics_table

SubwordModel.train = staticmethod(train_subword)
SubwordModel.read = staticmethod(_read)
