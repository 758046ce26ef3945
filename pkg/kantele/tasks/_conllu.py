#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Read and write CoNLL-U treebanks (word form, UPOS and head columns).
"""

from __future__ import annotations
import pathlib
from dataclasses import dataclass, field
from kantele.utils.typing import Iterable, Iterator, List, Optional, PathLike

ID, FORM, LEMMA, UPOS, XPOS, FEATS, HEAD, DEPREL, DEPS, MISC = range(10)


@dataclass
class Sentence:
    """One sentence: word forms, a UPOS tag per word, and a head per word (0 = root)."""
    words: List[str]
    upos: List[str]
    head: List[int]
    language: str = ''
    comments: List[str] = field(default_factory=list)

    def __post_init__(self):
        from kantele.utils.exceptions import ValidationError
        n = len(self.words)
        if len(self.upos) != n or len(self.head) != n:
            raise ValidationError("A sentence needs exactly one tag and one head per word.")
        for h in self.head:
            if not 0 <= h <= n:
                raise ValidationError(f"Head index {h} is outside [0, {n}].")

    def __len__(self) -> int:
        return len(self.words)


def parse_conllu(
        lines: Iterable[str],
        language: str = '',
        path: Optional[str] = None,
    ) -> Iterator[Sentence]:
    """Yield sentences from CoNLL-U lines. Range and empty-node rows are skipped."""
    from kantele.utils.exceptions import ConllParseError, ValidationError
    words, upos, heads, comments = [], [], [], []
    start = None

    def _flush(lineno):
        try:
            return Sentence(list(words), list(upos), list(heads), language, list(comments))
        except ValidationError as e:
            raise ConllParseError(str(e), path, start or lineno)

    lineno = 0
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip('\r\n')
        if not line.strip():
            if words:
                yield _flush(lineno)
            words, upos, heads, comments, start = [], [], [], [], None
            continue
        if line.startswith('#'):
            comments.append(line)
            continue
        columns = line.split('\t')
        if len(columns) != 10:
            raise ConllParseError(f"expected 10 columns, found {len(columns)}", path, lineno)
        if '-' in columns[ID] or '.' in columns[ID]:
            continue
        try:
            head = int(columns[HEAD])
        except ValueError:
            raise ConllParseError(f"non-integer head '{columns[HEAD]}'", path, lineno)
        if start is None:
            start = lineno
        words.append(columns[FORM])
        upos.append(columns[UPOS])
        heads.append(head)
    if words:
        yield _flush(lineno)


def read_conllu(path: PathLike, language: str = '') -> List[Sentence]:
    """
    Read every sentence of a CoNLL-U file.

    Raises
    ------
    `ConllParseError` with the offending line number on a malformed row.
    """
    from kantele.utils.exceptions import CorpusReadError
    path = pathlib.Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return list(parse_conllu(f, language=language, path=str(path)))
    except (OSError, UnicodeDecodeError) as e:
        raise CorpusReadError(path, e)


def write_conllu(
        sentences: Iterable[Sentence],
        path: PathLike,
        upos: Optional[List[List[str]]] = None,
        heads: Optional[List[List[int]]] = None,
    ) -> pathlib.Path:
    """
    Write sentences in CoNLL-U layout, optionally replacing tags or heads with predictions.
    Columns other than the form, UPOS and head are written as `_`.
    """
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        for s_i, sentence in enumerate(sentences):
            tags = upos[s_i] if upos is not None else sentence.upos
            hs = heads[s_i] if heads is not None else sentence.head
            for line in sentence.comments:
                f.write(line + '\n')
            for i, word in enumerate(sentence.words):
                columns = [str(i + 1), word, '_', tags[i], '_', '_', str(hs[i]), '_', '_', '_']
                f.write('\t'.join(columns) + '\n')
            f.write('\n')
    return path
