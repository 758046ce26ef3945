#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Adam and global-norm gradient clipping over named parameters.
"""

from __future__ import annotations
import numpy as np
from kantele.utils.typing import Dict, Optional, Tuple


def global_norm(grads: Dict[str, np.ndarray]) -> float:
    return float(np.sqrt(sum(float(np.sum(g.astype(np.float64) ** 2)) for g in grads.values())))


def clip_grad_norm(
        grads: Dict[str, np.ndarray],
        max_norm: float,
    ) -> Tuple[Dict[str, np.ndarray], float]:
    """
    Rescale `grads` so their global L2 norm is at most `max_norm`.

    Returns the (possibly rescaled) gradients and the norm before clipping.
    """
    norm = global_norm(grads)
    if max_norm is None or norm <= max_norm or norm == 0.0:
        return grads, norm
    scale = max_norm / norm
    return {name: g * scale for name, g in grads.items()}, norm


class Adam:
    """
    Adam with bias correction. Parameters that do not require a gradient,
    or that receive none, keep both their values and their moments.

    Parameters
    ----------
    params: Dict[str, Tensor]
        The named parameters to update in place.

    lr: float, default 1e-3
        The default learning rate; `step` may override it.
    """

    def __init__(
            self,
            params: Dict[str, 'kantele.autograd.Tensor'],
            lr: float = 1e-3,
            betas: Tuple[float, float] = (0.9, 0.999),
            eps: float = 1e-8,
        ):
        self.params = params
        self.lr = lr
        self.betas = betas
        self.eps = eps
        self.m: Dict[str, np.ndarray] = {}
        self.v: Dict[str, np.ndarray] = {}
        self.t: Dict[str, int] = {}

    def step(self, grads: Dict[str, np.ndarray], lr: Optional[float] = None) -> None:
        lr = self.lr if lr is None else lr
        b1, b2 = self.betas
        for name, param in self.params.items():
            if not param.requires_grad or name not in grads:
                continue
            g = grads[name]
            m = self.m.get(name, None)
            if m is None:
                m = np.zeros_like(param.data)
                self.v[name] = np.zeros_like(param.data)
            t = self.t.get(name, 0) + 1
            m = b1 * m + (1.0 - b1) * g
            v = b2 * self.v[name] + (1.0 - b2) * g * g
            m_hat = m / (1.0 - b1 ** t)
            v_hat = v / (1.0 - b2 ** t)
            param.data = (param.data - lr * m_hat / (np.sqrt(v_hat) + self.eps)).astype(
                param.data.dtype, copy=False,
            )
            self.m[name], self.v[name], self.t[name] = m.astype(param.data.dtype), v.astype(param.data.dtype), t

    def state_dict(self) -> Dict[str, Dict]:
        return {'m': dict(self.m), 'v': dict(self.v), 't': dict(self.t)}

    def load_state_dict(self, state: Dict[str, Dict]) -> None:
        self.m = {k: np.array(v) for k, v in state.get('m', {}).items()}
        self.v = {k: np.array(v) for k, v in state.get('v', {}).items()}
        self.t = {k: int(v) for k, v in state.get('t', {}).items()}
