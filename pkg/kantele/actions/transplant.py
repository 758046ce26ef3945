#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Initialize the embeddings of specialized vocabularies from the source model.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def transplant(
        action: Optional[List[str]] = None,
        vocab: Optional[List[int]] = None,
        debug: bool = False,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Copy overlapping rows and combine similar overlapping tokens for the rest.

    Command:
        `transplant --run {run.yaml} [--vocab 16k]`
    """
    from collections import Counter
    from kantele.actions._workspace import get_workspace
    from kantele.utils.formatting import print_table
    workspace = get_workspace(debug=debug, **kw)
    rows = []
    for size in (vocab or workspace.run_config.grid['vocab_size']):
        matrix = workspace.transplant(size, debug=debug)
        row = {'vocab_size': matrix.vocab_size, 'dim': matrix.dim}
        row.update(Counter(matrix.provenance or []))
        rows.append(row)
    print_table(rows, title='Transplanted embeddings', nopretty=nopretty)
    return True, "Success"
