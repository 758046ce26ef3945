#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Tabulate parameter counts and per-token training cost by vocabulary size.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def cost(
        action: Optional[List[str]] = None,
        dims: Optional[str] = None,
        vocab: Optional[List[int]] = None,
        lengths: Optional[List[float]] = None,
        output: Optional[str] = None,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Print parameters, percent change and FLOPs per token for each vocabulary size.
    With `--lengths`, also the per-line cost relative to the first size.

    Command:
        `cost --dims xlmr-base --vocab 16384,32768,250002`
    """
    from kantele.analysis import CostModel, cost_table
    from kantele.actions._workspace import print_frame
    from kantele.utils.exceptions import ValidationError
    if not vocab:
        raise ValidationError("`--vocab` lists the vocabulary sizes to compare.")
    if lengths and len(lengths) != len(vocab):
        raise ValidationError("`--lengths` needs one mean length per vocabulary size.")
    base = CostModel.from_dims(dims or 'xlmr-base')
    table = cost_table(base, vocab, mean_lengths=(dict(zip(vocab, lengths)) if lengths else None))
    print_frame(table, title=f"Cost ({dims or 'xlmr-base'})", nopretty=nopretty)
    if output:
        table.to_csv(output, sep='\t', index=False)
        return True, f"Wrote '{output}'."
    return True, "Success"
