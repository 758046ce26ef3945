#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
The `Tensor` class: a numpy array that records how it was computed.
"""

from __future__ import annotations
import contextlib
import numpy as np
from kantele.utils.typing import Any, Callable, Optional, Tuple, List

_grad_enabled: List[bool] = [True]


@contextlib.contextmanager
def no_grad():
    """Disable graph recording inside the block."""
    previous = _grad_enabled[0]
    _grad_enabled[0] = False
    try:
        yield
    finally:
        _grad_enabled[0] = previous


def is_grad_enabled() -> bool:
    return _grad_enabled[0]


def unbroadcast(grad: np.ndarray, shape: Tuple[int, ...]) -> np.ndarray:
    """Sum `grad` down to `shape`, undoing numpy broadcasting."""
    if grad.shape == shape:
        return grad
    extra = grad.ndim - len(shape)
    if extra > 0:
        grad = grad.sum(axis=tuple(range(extra)))
    axes = tuple(i for i, n in enumerate(shape) if n == 1 and grad.shape[i] != 1)
    if axes:
        grad = grad.sum(axis=axes, keepdims=True)
    return grad.reshape(shape)


class Tensor:
    """
    An array with an optional gradient.

    Leaves created with `requires_grad=True` accumulate `.grad` on `backward()`.
    Intermediate results keep references to their parents and a closure that maps
    the output gradient to one gradient per parent.
    """

    def __init__(
            self,
            data: Any,
            requires_grad: bool = False,
            name: Optional[str] = None,
            dtype: Optional[Any] = None,
            _parents: Tuple['Tensor', ...] = (),
            _backward: Optional[Callable[[np.ndarray], Tuple[Optional[np.ndarray], ...]]] = None,
        ):
        if isinstance(data, Tensor):
            data = data.data
        if dtype is None and not (isinstance(data, np.ndarray) and data.dtype.kind == 'f'):
            dtype = np.float64
        self.data = np.asarray(data, dtype=dtype)
        self.requires_grad = requires_grad
        self.name = name
        self.grad: Optional[np.ndarray] = None
        self._parents = _parents
        self._backward = _backward

    def __repr__(self) -> str:
        label = f", name='{self.name}'" if self.name else ''
        return f"Tensor(shape={self.shape}{label}, requires_grad={self.requires_grad})"

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.data.shape

    @property
    def ndim(self) -> int:
        return self.data.ndim

    @property
    def dtype(self):
        return self.data.dtype

    @property
    def T(self) -> 'Tensor':
        from kantele.autograd._ops import swapaxes
        return swapaxes(self, -1, -2)

    def numpy(self) -> np.ndarray:
        return self.data

    def item(self) -> float:
        return float(self.data)

    def zero_grad(self) -> None:
        self.grad = None

    def backward(self, grad: Optional[np.ndarray] = None) -> None:
        """Accumulate the gradient of this tensor into every reachable leaf."""
        if not self.requires_grad:
            return
        if grad is None:
            grad = np.ones_like(self.data)
        order = _topological_order(self)
        pending = {id(self): grad}
        for node in reversed(order):
            g = pending.pop(id(node), None)
            if g is None:
                continue
            if node._backward is None:
                node.grad = g.copy() if node.grad is None else node.grad + g
                continue
            for parent, pg in zip(node._parents, node._backward(g)):
                if pg is None or not parent.requires_grad:
                    continue
                key = id(parent)
                pending[key] = pg if key not in pending else pending[key] + pg

    from kantele.autograd._ops import (
        add as __add__,
        add as __radd__,
        sub as __sub__,
        rsub as __rsub__,
        mul as __mul__,
        mul as __rmul__,
        div as __truediv__,
        neg as __neg__,
        matmul as __matmul__,
        getitem as __getitem__,
        reshape,
        transpose,
        swapaxes,
        sum,
        mean,
        exp,
        log,
        tanh,
        relu,
    )


def _topological_order(root: Tensor) -> List[Tensor]:
    order, visited = [], set()
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in visited:
            continue
        visited.add(id(node))
        stack.append((node, True))
        for parent in node._parents:
            if parent.requires_grad and id(parent) not in visited:
                stack.append((parent, False))
    return order


def as_tensor(x: Any, dtype: Optional[Any] = None) -> Tensor:
    """Wrap constants; tensors pass through."""
    if isinstance(x, Tensor):
        return x
    return Tensor(x, dtype=dtype)


def make(data: np.ndarray, parents: Tuple[Tensor, ...], backward) -> Tensor:
    """Create an op result, recording the graph only when a parent needs it."""
    if _grad_enabled[0] and any(p.requires_grad for p in parents):
        return Tensor(data, requires_grad=True, _parents=parents, _backward=backward)
    return Tensor(data)
