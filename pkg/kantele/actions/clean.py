#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Clean, deduplicate and split the text corpora of a run.
"""

from __future__ import annotations
from kantele.utils.typing import SuccessTuple, Any, Optional, List


def clean(
        action: Optional[List[str]] = None,
        workers: Optional[int] = None,
        debug: bool = False,
        nopretty: bool = False,
        **kw: Any
    ) -> SuccessTuple:
    """
    Filter every language's text files and write train / dev / test splits.

    Command:
        `clean --run {run.yaml}`
    """
    from kantele.actions._workspace import get_workspace
    from kantele.utils.formatting import print_table
    workspace = get_workspace(fresh=True, debug=debug, **kw)
    stats = workspace.clean(workers=workers, debug=debug)
    print_table(
        [dict(language=code, **s.to_dict()) for code, s in stats.items()],
        title = 'Cleaning', nopretty = nopretty,
    )
    return True, f"Cleaned {len(stats)} corpora into '{workspace.corpus_dir}'."
