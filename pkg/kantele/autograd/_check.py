#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Gradient evaluation and finite-difference verification.
"""

from __future__ import annotations
import numpy as np
from kantele.utils.typing import Any, Callable, Dict, Optional, Tuple


def gradient(
        loss_fn: Callable[[], 'kantele.autograd.Tensor'],
        params: Dict[str, 'kantele.autograd.Tensor'],
        context: Optional[Dict[str, Any]] = None,
    ) -> Tuple[float, Dict[str, np.ndarray]]:
    """
    Evaluate `loss_fn()` and differentiate it with respect to every parameter
    that requires a gradient.

    Parameters
    ----------
    loss_fn: Callable[[], Tensor]
        Builds the scalar loss from the current parameter values.

    params: Dict[str, Tensor]
        Named parameters. Parameters the loss does not reach get zero gradients.

    context: Optional[Dict[str, Any]], default None
        Attached to the error raised on a non-finite loss (e.g. the step index).

    Returns
    -------
    A tuple of the loss value and a dictionary of gradients.

    Examples
    --------
    >>> x = Tensor(3.0, requires_grad=True)
    >>> gradient(lambda: x * x, {'x': x})
    (9.0, {'x': array(6.)})
    """
    from kantele.utils.exceptions import NonFiniteLossError
    for p in params.values():
        p.zero_grad()
    loss = loss_fn()
    value = float(loss.data)
    if not np.isfinite(value):
        raise NonFiniteLossError(f"Loss is {value}", context)
    loss.backward()
    grads = {
        name: (p.grad if p.grad is not None else np.zeros_like(p.data))
        for name, p in params.items() if p.requires_grad
    }
    for p in params.values():
        p.zero_grad()
    return value, grads


def finite_difference_check(
        loss_fn: Callable[[], 'kantele.autograd.Tensor'],
        params: Dict[str, 'kantele.autograd.Tensor'],
        eps: float = 1e-5,
        samples_per_block: int = 6,
        seed: int = 0,
        floor: float = 1e-4,
    ) -> Dict[str, float]:
    """
    Compare analytic gradients against central differences on sampled entries.

    Returns one relative error per parameter block:
    `||analytic - numeric|| / max(||analytic||, ||numeric||, floor)` over the sampled entries.
    Run in float64.
    """
    from kantele.autograd._tensor import no_grad
    analytic = gradient(loss_fn, params)[1]
    rng = np.random.default_rng(seed)
    errors = {}
    for name, p in params.items():
        if not p.requires_grad:
            continue
        flat = p.data.reshape(-1)
        count = min(samples_per_block, flat.size)
        picks = rng.choice(flat.size, size=count, replace=False)
        numeric, exact = [], []
        for i in picks:
            original = flat[i]
            with no_grad():
                flat[i] = original + eps
                plus = float(loss_fn().data)
                flat[i] = original - eps
                minus = float(loss_fn().data)
            flat[i] = original
            numeric.append((plus - minus) / (2 * eps))
            exact.append(analytic[name].reshape(-1)[i])
        numeric, exact = np.asarray(numeric), np.asarray(exact)
        scale = max(np.linalg.norm(exact), np.linalg.norm(numeric), floor)
        errors[name] = float(np.linalg.norm(exact - numeric) / scale)
    return errors
