#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Inspect the sampling distribution of a run.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def sample(
        action: Optional[List[str]] = None,
        **kw: Any
    ) -> SuccessTuple:
    """
    Show or draw from the multilingual sampling distribution.

    Command:
        `sample {table, stream, budget}`

    Example:
        `sample table --run uralic.yaml`
    """
    from kantele.utils.misc import choose_subaction
    options = {
        'table': _sample_table,
        'stream': _sample_stream,
        'budget': _sample_budget,
    }
    return choose_subaction(action or ['table'], options, **kw)


def _sample_table(nopretty: bool = False, **kw: Any) -> SuccessTuple:
    """
    Write and print the sampling probabilities per unit at several alphas.

    Command:
        `sample table --run {run.yaml}`
    """
    import pandas as pd
    from kantele.actions._workspace import get_workspace, print_frame
    workspace = get_workspace(**kw)
    path = workspace.write_sampling_table()
    print_frame(pd.read_csv(path, sep='\t'), title='Sampling', nopretty=nopretty)
    return True, f"Wrote '{path}'."


def _sample_stream(
        action: Optional[List[str]] = None,
        alpha: Optional[List[float]] = None,
        **kw: Any
    ) -> SuccessTuple:
    """
    Print lines drawn from the stream, prefixed with their unit.

    Command:
        `sample stream {count} --alpha {alpha}`
    """
    from kantele.actions._workspace import get_workspace
    from kantele.sampling import sample_stream
    workspace = get_workspace(**kw)
    count = int(action[0]) if action else 10
    spec = workspace.sampling_spec(alpha[0] if alpha else None)
    stream = sample_stream(
        workspace.training_pools(), spec.weights(),
        seed = workspace.section('sampling')['seed'],
        groups = workspace.run_config.groups,
    )
    for unit, line in stream.take(count, with_units=True):
        print(f"{unit}\t{line}")
    return True, "Success"


def _sample_budget(
        steps: Optional[List[int]] = None,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Allocate monolingual adaptation steps across languages by sampling weight.

    Command:
        `sample budget --steps {total}`
    """
    from kantele.actions._workspace import get_workspace
    from kantele.analysis import monolingual_budget
    from kantele.utils.formatting import print_table
    workspace = get_workspace(**kw)
    spec = workspace.sampling_spec()
    budget = monolingual_budget(
        spec.capped_sizes(),
        total_steps = (steps[0] if steps else None),
        alpha = workspace.section('analysis')['budget_alpha'],
    )
    print_table(
        [{'language': code, 'steps': n} for code, n in budget.items()],
        title = 'Budget', nopretty = nopretty,
    )
    return True, "Success"
