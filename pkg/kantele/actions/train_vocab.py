#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Train the specialized subword vocabularies of a run.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def train_vocab(
        action: Optional[List[str]] = None,
        vocab: Optional[List[int]] = None,
        debug: bool = False,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Train one vocabulary per size (default: every grid size) on the alpha-sampled lines.

    Command:
        `train-vocab --run {run.yaml} [--vocab 16k,32k]`
    """
    from kantele.actions._workspace import get_workspace
    from kantele.utils.formatting import print_table
    workspace = get_workspace(debug=debug, **kw)
    sizes = vocab or workspace.run_config.grid['vocab_size']
    rows = []
    for size in sizes:
        model = workspace.train_vocab(size, debug=debug)
        rows.append({
            'vocab_size': model.vocab_size,
            'merges': len(model.merges),
            'alphabet': len(model.alphabet),
            'path': str(workspace.vocab_dir(size)),
        })
    print_table(rows, title='Vocabularies', nopretty=nopretty)
    return True, f"Trained {len(rows)} vocabular{'y' if len(rows) == 1 else 'ies'}."
