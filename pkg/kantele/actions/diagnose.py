#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Compare tokenizer quality across vocabularies and languages.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def diagnose(
        action: Optional[List[str]] = None,
        input: Optional[List[str]] = None,
        vocab: Optional[List[int]] = None,
        output: Optional[str] = None,
        debug: bool = False,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Characters per token, unknown-token rates and mean sequence length.

    With `--run`, every grid vocabulary is measured on each language's dev split
    and on a sample drawn at `subword:length_sample_alpha`.
    Otherwise `--input` lists subword model files followed by text files.

    Command:
        `diagnose --run {run.yaml}`
        `diagnose --input {a.model} {b.model} {fi.txt} {kpv.txt}`
    """
    from kantele.core.SubwordModel import SubwordModel, diagnostics_table
    from kantele.actions._workspace import get_workspace, print_frame
    from kantele.utils.exceptions import ValidationError
    if kw.get('run'):
        workspace = get_workspace(debug=debug, **kw)
        models = {
            str(size): workspace.train_vocab(size, debug=debug)
            for size in (vocab or workspace.run_config.grid['vocab_size'])
        }
        samples = workspace.diagnostic_samples()
        default_output = workspace.path('diagnostics')
    else:
        paths = [pathlib.Path(p) for p in (input or [])]
        model_paths = [p for p in paths if p.suffix == '.model']
        text_paths = [p for p in paths if p.suffix != '.model']
        if not model_paths or not text_paths:
            raise ValidationError("`--input` needs at least one `.model` file and one text file.")
        models = {p.stem: SubwordModel.read(p) for p in model_paths}
        samples = {
            p.name.split('.')[0]: p.read_text(encoding='utf-8').splitlines()
            for p in text_paths
        }
        default_output = None

    table = diagnostics_table(models, samples)
    print_frame(table, title='Tokenizer diagnostics', nopretty=nopretty)
    path = output or default_output
    if path is not None:
        table.to_csv(path, sep='\t', index=False)
        return True, f"Wrote '{path}'."
    return True, "Success"
