#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Line filters and whole-corpus cleaning.
"""

from __future__ import annotations
import functools
import unicodedata
from kantele.utils.typing import Optional, List, Tuple, Callable, PathLike
from kantele.core.Corpus import (
    CleaningConfig, Verdict, KEEP, FilterStats, LanguageCorpus,
)


def normalize_line(line: str, form: Optional[str] = 'NFC') -> str:
    """Apply Unicode normalization and trim surrounding whitespace."""
    if form:
        line = unicodedata.normalize(form, line)
    return line.strip()


def clean_line(
        line: str,
        config: Optional[CleaningConfig] = None,
        langid_score: Optional[float] = None,
    ) -> Verdict:
    """
    Decide whether to keep a line.

    Tokens are maximal runs of non-whitespace. The alphabetic fraction counts
    Unicode letters over all non-whitespace characters, and a fraction exactly
    at the threshold is kept. The language-ID filter only applies when a score
    is supplied.

    Parameters
    ----------
    line: str
        The text of the line.

    config: Optional[CleaningConfig], default None
        The thresholds. Defaults to `CleaningConfig()`.

    langid_score: Optional[float], default None
        The probability that the line is English.

    Returns
    -------
    `KEEP` or a rejecting `Verdict` carrying the first failing reason.

    Examples
    --------
    >>> clean_line('hello world')
    Verdict(keep=True, reason=None)
    >>> clean_line('1234 5678')
    Verdict(keep=False, reason='insufficient_alphabetic')
    """
    if config is None:
        config = CleaningConfig()
    tokens = line.split()
    if len(tokens) < config.min_tokens:
        return Verdict(False, 'too_few_tokens')
    lengths = [len(t) for t in tokens]
    if sum(lengths) / len(lengths) > config.max_avg_token_chars:
        return Verdict(False, 'avg_token_too_long')
    if max(lengths) > config.max_token_chars:
        return Verdict(False, 'token_too_long')
    alpha = sum(1 for t in tokens for c in t if c.isalpha())
    if alpha < config.min_alpha_fraction * sum(lengths):
        return Verdict(False, 'insufficient_alphabetic')
    if langid_score is not None and langid_score >= config.langid_reject_threshold:
        return Verdict(False, 'langid_english')
    return KEEP


def _clean_file(
        path: PathLike,
        config: CleaningConfig,
        langid: Optional[Callable[[str], float]] = None,
        normalization: Optional[str] = 'NFC',
    ) -> Tuple[List[str], FilterStats]:
    """Filter one file. Duplicates are not removed here."""
    from kantele.utils.exceptions import CorpusReadError
    try:
        with open(path, 'rb') as f:
            data = f.read()
    except OSError as e:
        raise CorpusReadError(path, e.strerror or e)

    stats = FilterStats()
    kept = []
    for raw in data.splitlines():
        stats.lines_in += 1
        try:
            text = raw.decode('utf-8')
        except UnicodeDecodeError:
            stats.reject('encoding')
            continue
        line = normalize_line(text, normalization)
        verdict = clean_line(
            line, config, (langid(line) if langid is not None else None)
        )
        if not verdict:
            stats.reject(verdict.reason)
            continue
        kept.append(line)
    return kept, stats


def clean_corpus(
        files: List[PathLike],
        language: str,
        config: Optional[CleaningConfig] = None,
        langid: Optional[Callable[[str], float]] = None,
        normalization: Optional[str] = 'NFC',
        workers: Optional[int] = None,
        debug: bool = False,
    ) -> Tuple[LanguageCorpus, FilterStats]:
    """
    Filter and deduplicate the text files of one language.

    Files are filtered independently (in parallel when `workers > 1`) and merged in
    input order; exact duplicates are then removed keeping first occurrences.

    Parameters
    ----------
    files: List[PathLike]
        UTF-8 text files, one sentence per line.

    language: str
        The language code of the corpus.

    config: Optional[CleaningConfig], default None
        Filter thresholds. Defaults to the `cleaning` configuration section.

    langid: Optional[Callable[[str], float]], default None
        Scores a line with the probability of being English.
        Pass it for low-resource languages only.

    normalization: Optional[str], default 'NFC'
        The Unicode normal form applied before filtering (`None` to skip).

    Returns
    -------
    A tuple of the cleaned `LanguageCorpus` and its `FilterStats`.
    """
    from kantele.utils.pool import parallel_map
    if config is None:
        config = CleaningConfig.from_config()
    func = functools.partial(
        _clean_file, config=config, langid=langid, normalization=normalization,
    )
    results = parallel_map(
        func, list(files), workers=workers,
        backend=('threading' if langid is not None else 'loky'),
        debug=debug,
    )

    stats = FilterStats()
    seen, lines = set(), []
    for kept, file_stats in results:
        stats = stats + file_stats
        for line in kept:
            if line in seen:
                stats.duplicates_removed += 1
                continue
            seen.add(line)
            lines.append(line)
    stats.lines_kept = len(lines)

    if debug:
        from kantele.utils.debug import dprint
        dprint(f"[{language}] kept {stats.lines_kept} of {stats.lines_in} line(s).")
    return LanguageCorpus(language, lines), stats
