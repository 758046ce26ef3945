#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Build (or reload) the artifacts of each pipeline stage.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import Any, Callable, Dict, List, Optional, Tuple


def _load_callable(spec: str) -> Callable[[str], float]:
    """Import `'package.module:function'`."""
    import importlib
    from kantele.utils.exceptions import ConfigError
    module_name, _, attr = str(spec).partition(':')
    try:
        return getattr(importlib.import_module(module_name), attr)
    except (ImportError, AttributeError) as e:
        raise ConfigError([f"cleaning:langid '{spec}' cannot be imported ({e})."])


def clean(
        self,
        workers: Optional[int] = None,
        langid: Optional[Callable[[str], float]] = None,
        debug: bool = False,
    ) -> Dict[str, 'kantele.core.Corpus.FilterStats']:
    """
    Clean, deduplicate and split every language with text files, then write
    the split files and the filter statistics.

    `langid` (or the `cleaning:langid` import path) scores lines of
    low-resource languages only.
    """
    from kantele.core.Corpus import (
        CleaningConfig, clean_corpus, split_corpus, write_splits, write_filter_stats,
    )
    from kantele.utils.warnings import info
    cf = self.section('cleaning')
    config = CleaningConfig.from_config(cf)
    if langid is None and cf.get('langid'):
        langid = _load_callable(cf['langid'])

    stats, counts = {}, {}
    for lang in self.run_config.languages:
        if not lang.files:
            continue
        corpus, lang_stats = clean_corpus(
            lang.files, lang.code, config,
            langid = (langid if lang.low_resource else None),
            normalization = cf.get('normalization', 'NFC'),
            workers = workers,
            debug = debug,
        )
        corpus = split_corpus(corpus, cf['dev_frac'], cf['test_frac'], seed=cf['split_seed'])
        write_splits(corpus, self.corpus_dir)
        stats[lang.code], counts[lang.code] = lang_stats, corpus.split_counts()
        self._cache[('corpus', lang.code)] = corpus
        if debug:
            info(f"[{lang.code}] {counts[lang.code]}")
    for key in ('training_pools', 'vocabulary_lines', 'length_sample'):
        self._cache.pop(key, None)
    write_filter_stats(stats, self.path('filter_stats'), split_counts=counts)
    return stats


def _corpus(self, code: str) -> 'kantele.core.Corpus.LanguageCorpus':
    from kantele.core.Corpus import read_splits
    key = ('corpus', code)
    if key not in self._cache:
        self._cache[key] = read_splits(self.corpus_dir, code)
    return self._cache[key]


def corpora(self, split: str = 'train', debug: bool = False) -> Dict[str, List[str]]:
    """Language -> lines of `split`. Cleans first when no split files exist."""
    codes = [lang.code for lang in self.run_config.languages if lang.files]
    if any(not (self.corpus_dir / f"{c}.train.txt").exists() for c in codes):
        self.clean(debug=debug)
    return {code: _corpus(self, code).split_lines(split) for code in codes}


def training_pools(self, debug: bool = False) -> Dict[str, List[str]]:
    """Language -> training lines, truncated to the language's byte cap."""
    from kantele.sampling import cap_lines
    if 'training_pools' not in self._cache:
        caps = self.run_config.caps
        self._cache['training_pools'] = {
            code: cap_lines(lines, caps.get(code))
            for code, lines in self.corpora(debug=debug).items()
        }
    return self._cache['training_pools']


def sampling_spec(self, alpha: Optional[float] = None) -> 'kantele.sampling.SamplingSpec':

    from kantele.sampling import SamplingSpec
    sp = self.section('sampling')
    return SamplingSpec.from_corpora(
        self.corpora(),
        sp['alpha'] if alpha is None else alpha,
        caps = self.run_config.caps,
        groups = self.run_config.groups,
        basis = sp.get('basis', 'lines'),
    )


def write_sampling_table(self) -> pathlib.Path:
    from kantele.sampling import sampling_table, write_sampling_table as _write
    table = sampling_table(self.sampling_spec(), alphas=self.section('sampling')['table_alphas'])
    return _write(table, self.path('sampling_table'))


def vocabulary_lines(self) -> List[str]:
    """Lines for tokenizer and auxiliary-embedding training."""
    if 'vocabulary_lines' not in self._cache:
        from kantele.sampling import vocabulary_sample
        sub, sp = self.section('subword'), self.section('sampling')
        self._cache['vocabulary_lines'] = vocabulary_sample(
            self.training_pools(),
            alpha = sub['alpha'],
            max_lines = sub['max_lines'],
            seed = sp['seed'],
            groups = self.run_config.groups,
            caps = self.run_config.caps,
        )
    return self._cache['vocabulary_lines']


def length_sample(self) -> List[str]:
    """
    `subword:length_sample_lines` training lines drawn from the stream sampled at
    `subword:length_sample_alpha`, for comparing sequence lengths across vocabularies.
    """
    if 'length_sample' not in self._cache:
        from kantele.sampling import sample_stream
        sub = self.section('subword')
        stream = sample_stream(
            self.training_pools(),
            self.sampling_spec(sub['length_sample_alpha']).weights(),
            seed = self.section('sampling')['seed'],
            groups = self.run_config.groups,
        )
        self._cache['length_sample'] = stream.take(int(sub['length_sample_lines']))
    return self._cache['length_sample']



def _train_subword(self, vocab_size: int, directory: pathlib.Path, debug: bool = False):
    from kantele.core.SubwordModel import SubwordModel
    path = directory / pathlib.Path(self.path('subword_model')).name
    if path.exists():
        return SubwordModel.read(path)
    sub = self.section('subword')
    model = SubwordModel.train(
        self.vocabulary_lines(),
        vocab_size = int(vocab_size),
        specials = sub['specials'],
        marker = sub['marker'],
        max_lines = sub['max_lines'],
        normalization = self.section('cleaning').get('normalization', 'NFC'),
        debug = debug,
    )
    model.write(path)
    return model


def diagnostic_samples(self) -> Dict[str, List[str]]:
    """
    Evaluation sets for tokenizer diagnostics: each language's dev split (capped at
    `subword:length_sample_lines`) plus the alpha-sampled length sample under `'sampled'`.
    """
    limit = self.section('subword')['length_sample_lines']
    samples = {c: lines[:limit] for c, lines in self.corpora('dev').items() if lines}
    samples['sampled'] = self.length_sample()
    return samples


def train_vocab(self, vocab_size: int, debug: bool = False) -> 'kantele.core.SubwordModel.SubwordModel':
    """The specialized vocabulary of `vocab_size` with its diagnostics table."""
    from kantele.core.SubwordModel import diagnostics_table
    key = ('vocab', int(vocab_size))
    if key in self._cache:
        return self._cache[key]
    directory = self.vocab_dir(vocab_size)
    directory.mkdir(parents=True, exist_ok=True)
    model = _train_subword(self, vocab_size, directory, debug=debug)
    diagnostics_path = directory / pathlib.Path(self.path('diagnostics')).name
    if not diagnostics_path.exists():
        diagnostics_table({str(int(vocab_size)): model}, self.diagnostic_samples()).to_csv(
            diagnostics_path, sep='\t', index=False,
        )
    self._cache[key] = model
    return model


def source_embeddings(self, debug: bool = False) -> Tuple['kantele.transplant.EmbeddingMatrix', Any, Dict[str, Any]]:
    """
    The source model's embedding matrix, the vocabulary to match against,
    and the overlap keywords (marker and specials).

    `transplant:source_embeddings` names a word2vec text file; without it a
    source vocabulary of `transplant:source_vocab_size` is trained and given
    seeded Gaussian embeddings.
    """
    from kantele.transplant import read_word2vec, random_embeddings, write_word2vec
    if 'source' in self._cache:
        return self._cache['source']
    tcf = self.section('transplant')
    if tcf.get('source_embeddings'):
        matrix = read_word2vec(tcf['source_embeddings'])
        vocab, kw = matrix, {
            'old_marker': tcf.get('source_marker', '▁'),
            'old_specials': tcf.get('source_specials', None),
        }
    else:
        directory = self.run_dir / 'source'
        directory.mkdir(parents=True, exist_ok=True)
        vocab = _train_subword(self, tcf['source_vocab_size'], directory, debug=debug)
        path = directory / pathlib.Path(self.path('embeddings')).name
        if path.exists():
            matrix = read_word2vec(path)
        else:
            matrix = random_embeddings(
                vocab, self.section('encoder')['model_dim'], seed=tcf['seed'],
                std=self.section('encoder')['init_std'],
            )
            write_word2vec(matrix, path)
        kw = {}
    self._cache['source'] = (matrix, vocab, kw)
    return self._cache['source']


def transplant(self, vocab_size: int, debug: bool = False) -> 'kantele.transplant.EmbeddingMatrix':
    """Initialize the embeddings of the `vocab_size` vocabulary from the source model."""
    import pandas as pd
    from kantele.transplant import (
        compute_overlap, train_auxiliary_embeddings, focus_initialize, transplant_report,
        read_word2vec, write_word2vec,
    )
    key = ('transplant', int(vocab_size))
    if key in self._cache:
        return self._cache[key]
    directory = self.transplant_dir(vocab_size)
    path = directory / pathlib.Path(self.path('embeddings')).name
    if path.exists():
        self._cache[key] = read_word2vec(path)
        return self._cache[key]

    tcf = self.section('transplant')
    model = self.train_vocab(vocab_size, debug=debug)
    source, source_vocab, overlap_kw = self.source_embeddings(debug=debug)
    overlap = compute_overlap(source_vocab, model, **overlap_kw)
    aux = train_auxiliary_embeddings(
        self.vocabulary_lines(), model,
        aux_dim = min(int(tcf['aux_dim']), model.vocab_size),
        window = tcf['window'],
        debug = debug,
    )
    matrix = focus_initialize(
        source, overlap, model, aux,
        k = tcf['k'], noise_scale = tcf['noise_scale'], seed = tcf['seed'], debug = debug,
    )
    write_word2vec(matrix, path)
    pd.DataFrame([transplant_report(overlap, matrix)]).to_csv(
        directory / pathlib.Path(self.path('transplant_report')).name, sep='\t', index=False,
    )
    self._cache[key] = matrix
    return matrix


def _dev_lines(self, count: int) -> List[str]:
    from itertools import islice
    from more_itertools import roundrobin
    return list(islice(roundrobin(*self.corpora('dev').values()), count))


def pretrain_cell(
        self,
        lapt_steps: int,
        vocab_size: int,
        alpha: float,
        debug: bool = False,
        _progress: Optional['rich.progress.Progress'] = None,
    ) -> 'kantele.core.Encoder.EncoderCheckpoint':
    """
    Adapt the transplanted encoder for `lapt_steps` steps on the stream sampled at
    `alpha`, returning the lowest-dev-loss checkpoint (reloaded when present).
    """
    from kantele.core.Encoder import (
        EncoderConfig, PretrainConfig, EncoderCheckpoint, build_encoder, pretrain,
        write_trajectory,
    )
    from kantele.sampling import sample_stream
    pcf = self.section('pretrain')
    directory = self.lapt_dir(lapt_steps, vocab_size, alpha)
    path = directory / pathlib.Path(self.path('checkpoint')).name
    if path.exists():
        return EncoderCheckpoint.read(path, dtype=pcf.get('dtype', 'float32'))

    model = self.train_vocab(vocab_size, debug=debug)
    embedding = self.transplant(vocab_size, debug=debug)
    encoder = build_encoder(
        EncoderConfig.from_config(model.vocab_size, self.section('encoder')),
        embedding = embedding,
        seed = pcf['seed'],
        dtype = pcf.get('dtype', 'float32'),
    )
    config = PretrainConfig.from_config(
        pcf,
        total_steps = int(lapt_steps),
        freeze_steps = min(int(pcf['freeze_steps']), int(lapt_steps)),
    )
    stream = sample_stream(
        self.training_pools(),
        self.sampling_spec(alpha).weights(),
        seed = pcf['seed'],
        groups = self.run_config.groups,
    )
    result = pretrain(
        encoder, stream, config, _dev_lines(self, pcf['dev_lines']), model,
        debug = debug, _progress = _progress,
    )
    result.best.write(path)
    write_trajectory(result.trajectory, directory / pathlib.Path(self.path('trajectory')).name)
    return result.best


def treebanks(self) -> Dict[str, 'kantele.tasks.Treebank']:
    """Language -> treebank for every language that declares one."""
    from kantele.tasks import Treebank
    if 'treebanks' not in self._cache:
        fcf = self.section('finetune')
        self._cache['treebanks'] = {
            lang.code: Treebank.from_files(
                lang.code, lang.treebank,
                dev_carve_out = fcf['dev_carve_out'],
                seed = fcf['seeds'][0],
            )
            for lang in self.run_config.languages
                if lang.treebank
        }
    return self._cache['treebanks']
