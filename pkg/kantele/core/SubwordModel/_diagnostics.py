#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Compression and unknown-token diagnostics.
"""

from __future__ import annotations
from kantele.utils.typing import Iterable, Dict, List, Any


def diagnostics(self, lines: Iterable[str]) -> 'TokenizerDiagnostics':
    """
    Measure how well the vocabulary covers a text sample.

    Characters are counted without whitespace and boundary markers. The unknown
    token counts as a content token. Sequence lengths include begin and end.

    Parameters
    ----------
    lines: Iterable[str]
        The evaluation sample.

    Returns
    -------
    A `TokenizerDiagnostics`.
    """
    from kantele.core.SubwordModel import TokenizerDiagnostics
    from kantele.utils.exceptions import ValidationError
    unk = self.specials['unknown']
    num_lines = num_chars = num_tokens = num_unk = 0
    types, unk_types = set(), set()
    for line in lines:
        num_lines += 1
        for word in self.normalize(line).split():
            pieces = self.encode_word(word)
            num_chars += len(word)
            num_tokens += len(pieces)
            n_unk = sum(1 for p in pieces if p == unk)
            num_unk += n_unk
            types.add(word)
            if n_unk:
                unk_types.add(word)

    if num_lines == 0 or num_tokens == 0:
        raise ValidationError("Cannot compute tokenizer diagnostics on an empty sample.")

    return TokenizerDiagnostics(
        chars_per_token = num_chars / num_tokens,
        unk_unigram_frequency = num_unk / num_tokens,
        unk_type_frequency = len(unk_types) / len(types),
        mean_sequence_length = (num_tokens + 2 * num_lines) / num_lines,
        lines = num_lines,
        tokens = num_tokens,
    )


def mean_sequence_length(self, lines: Iterable[str]) -> float:
    """Mean tokens per line, begin and end included."""
    from kantele.utils.exceptions import ValidationError
    n, total = 0, 0
    for line in lines:
        n += 1
        total += len(self.tokenize(line)) + 2
    if n == 0:
        raise ValidationError("Cannot measure sequence length on an empty sample.")
    return total / n


def diagnostics_table(
        models: Dict[str, Any],
        samples: Dict[str, List[str]],
    ) -> 'pd.DataFrame':
    """
    Build a table of diagnostics for every (model, sample) pair.

    Parameters
    ----------
    models: Dict[str, SubwordModel]
        Vocabulary name -> model.

    samples: Dict[str, List[str]]
        Language -> evaluation lines.

    Returns
    -------
    A `pd.DataFrame` with one row per pair.
    """
    from kantele.utils.packages import attempt_import
    pd = attempt_import('pandas')
    rows = []
    for name, model in models.items():
        for language, lines in samples.items():
            row = {'vocabulary': name, 'vocab_size': model.vocab_size, 'language': language}
            row.update(model.diagnostics(lines).to_dict())
            rows.append(row)
    return pd.DataFrame(rows)
