#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Run independent jobs in parallel with `joblib`.
Results are always returned in input order.
"""

from __future__ import annotations
from kantele.utils.typing import Optional, Callable, List, Any, Iterable


def get_workers(workers: Optional[int] = None) -> int:
    """Resolve the worker count (`None` or `0` reads `system:workers`, negatives count back from the CPU count)."""
    from kantele.config import get_config
    if not workers:
        workers = get_config('system', 'workers', warn=False) or 1
    if workers < 0:
        from multiprocessing import cpu_count
        workers = max(1, cpu_count() + 1 + workers)
    return int(workers)


def parallel_map(
        func: Callable[..., Any],
        items: Iterable[Any],
        workers: Optional[int] = None,
        backend: str = 'loky',
        debug: bool = False,
    ) -> List[Any]:
    """
    Apply `func` to every item, in parallel when `workers > 1`.

    Parameters
    ----------
    func: Callable[..., Any]
        A picklable function taking one positional argument.

    items: Iterable[Any]
        The inputs.

    workers: Optional[int], default None
        How many workers to use. Defaults to `system:workers` in the configuration.

    backend: str, default 'loky'
        The `joblib` backend (`'loky'`, `'threading'`, or `'multiprocessing'`).

    Returns
    -------
    A list of results in the same order as `items`.
    """
    items = list(items)
    workers = min(get_workers(workers), max(1, len(items)))
    if workers <= 1:
        return [func(item) for item in items]
    from kantele.utils.packages import attempt_import
    joblib = attempt_import('joblib')
    if debug:
        from kantele.utils.debug import dprint
        dprint(f"Running {len(items)} job(s) with {workers} {backend} worker(s).")
    return joblib.Parallel(n_jobs=workers, backend=backend)(
        joblib.delayed(func)(item) for item in items
    )
