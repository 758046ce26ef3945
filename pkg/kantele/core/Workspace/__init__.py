#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
A `Workspace` binds a `RunConfig` to one run-stamped artifact directory and
builds each pipeline stage on demand, reusing artifacts already on disk.

```
<run_dir>/
    corpus/<lang>.<split>.txt, filter_stats.tsv
    sampling.tsv
    vocab/<vocab_size>/subword.model, diagnostics.tsv
    transplant/<vocab_size>/embeddings.vec, transplant.tsv
    lapt/<steps>-<vocab_size>-<alpha>/encoder.ckpt, trajectory.tsv
    records.tsv, failed_cells.tsv
    analysis/
```
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import Any, Dict, Optional, PathLike


class Workspace:
    """
    Parameters
    ----------
    run_config: RunConfig
        The resolved run description.

    run_dir: Optional[PathLike], default None
        The artifact directory. Defaults to a new run-stamped directory.

    resume: bool, default False
        Without `run_dir`, reuse the most recent run directory of this run name.
    """

    def __init__(
            self,
            run_config: 'kantele.config.RunConfig',
            run_dir: Optional[PathLike] = None,
            resume: bool = False,
        ):
        self.run_config = run_config
        if run_dir is None:
            run_dir = run_config.run_dir(resume=resume)
        self.run_dir = pathlib.Path(run_dir)
        self.run_dir.mkdir(parents=True, exist_ok=True)
        self._cache: Dict[Any, Any] = {}

    def __repr__(self) -> str:
        return f"Workspace('{self.run_config.name}', '{self.run_dir}')"

    @classmethod
    def from_file(
            cls,
            path: PathLike,
            patch: Optional[Dict[str, Any]] = None,
            run_dir: Optional[PathLike] = None,
            resume: bool = False,
        ) -> 'Workspace':
        from kantele.config import read_run_config
        return cls(read_run_config(path, patch=patch), run_dir=run_dir, resume=resume)

    def section(self, key: str) -> Dict[str, Any]:
        return self.run_config.section(key)

    def path(self, key: str, **kw) -> pathlib.Path:
        """Resolve a static file name (e.g. `'records'`) inside the run directory."""
        from kantele.config.static import _static_config
        filenames = _static_config()['filenames']
        if key == 'records':
            return self.run_dir / _static_config()['records']['filename']
        if key == 'failed':
            return self.run_dir / _static_config()['records']['failed_filename']
        return self.run_dir / filenames[key].format(**kw)

    @property
    def corpus_dir(self) -> pathlib.Path:
        return self.run_dir / 'corpus'

    def vocab_dir(self, vocab_size: int) -> pathlib.Path:
        return self.run_dir / 'vocab' / str(int(vocab_size))

    def transplant_dir(self, vocab_size: int) -> pathlib.Path:
        return self.run_dir / 'transplant' / str(int(vocab_size))

    def lapt_dir(self, lapt_steps: int, vocab_size: int, alpha: float) -> pathlib.Path:
        return self.run_dir / 'lapt' / f"{int(lapt_steps)}-{int(vocab_size)}-{float(alpha):g}"

    from ._stages import (
        clean, corpora, training_pools, sampling_spec, write_sampling_table, vocabulary_lines,
        length_sample, diagnostic_samples, train_vocab, source_embeddings, transplant,
        pretrain_cell, treebanks,
    )
    from ._grid import evaluate_cell, run_grid
