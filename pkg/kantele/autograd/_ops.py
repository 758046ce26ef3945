#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Differentiable operations. Each returns a new `Tensor` whose backward closure
maps the output gradient to one gradient per input.
"""

from __future__ import annotations
import numpy as np
from kantele.autograd import _tensor as _t
from kantele.utils.typing import Any, Optional, Sequence, Tuple, Union

_GELU_C = np.sqrt(2.0 / np.pi)


def _pair(a, b):
    a, b = _t.as_tensor(a), _t.as_tensor(b)
    if a.dtype != b.dtype:
        if not a.requires_grad:
            a = _t.Tensor(a.data.astype(b.dtype))
        elif not b.requires_grad:
            b = _t.Tensor(b.data.astype(a.dtype))
    return a, b


def add(a, b):
    a, b = _pair(a, b)
    return _t.make(
        a.data + b.data, (a, b),
        lambda g: (_t.unbroadcast(g, a.shape), _t.unbroadcast(g, b.shape)),
    )


def sub(a, b):
    a, b = _pair(a, b)
    return _t.make(
        a.data - b.data, (a, b),
        lambda g: (_t.unbroadcast(g, a.shape), _t.unbroadcast(-g, b.shape)),
    )


def rsub(a, b):
    return sub(b, a)


def mul(a, b):
    a, b = _pair(a, b)
    return _t.make(
        a.data * b.data, (a, b),
        lambda g: (_t.unbroadcast(g * b.data, a.shape), _t.unbroadcast(g * a.data, b.shape)),
    )


def div(a, b):
    a, b = _pair(a, b)
    return _t.make(
        a.data / b.data, (a, b),
        lambda g: (
            _t.unbroadcast(g / b.data, a.shape),
            _t.unbroadcast(-g * a.data / (b.data ** 2), b.shape),
        ),
    )


def neg(a):
    a = _t.as_tensor(a)
    return _t.make(-a.data, (a,), lambda g: (-g,))


def matmul(a, b):
    """Batched matrix product; both operands must be at least 2-D."""
    a, b = _pair(a, b)

    def backward(g):
        ga = np.matmul(g, np.swapaxes(b.data, -1, -2))
        gb = np.matmul(np.swapaxes(a.data, -1, -2), g)
        return _t.unbroadcast(ga, a.shape), _t.unbroadcast(gb, b.shape)

    return _t.make(np.matmul(a.data, b.data), (a, b), backward)


def transpose(a, axes: Optional[Sequence[int]] = None):
    a = _t.as_tensor(a)
    axes = tuple(range(a.ndim))[::-1] if axes is None else tuple(axes)
    inverse = tuple(np.argsort(axes))
    return _t.make(np.transpose(a.data, axes), (a,), lambda g: (np.transpose(g, inverse),))


def swapaxes(a, axis1: int, axis2: int):
    a = _t.as_tensor(a)
    return _t.make(
        np.swapaxes(a.data, axis1, axis2), (a,),
        lambda g: (np.swapaxes(g, axis1, axis2),),
    )


def reshape(a, *shape):
    a = _t.as_tensor(a)
    if len(shape) == 1 and isinstance(shape[0], (tuple, list)):
        shape = tuple(shape[0])
    original = a.shape
    return _t.make(a.data.reshape(shape), (a,), lambda g: (g.reshape(original),))


def sum(a, axis: Union[int, Tuple[int, ...], None] = None, keepdims: bool = False):
    a = _t.as_tensor(a)
    out = a.data.sum(axis=axis, keepdims=keepdims)

    def backward(g):
        if axis is not None and not keepdims:
            g = np.expand_dims(g, axis)
        return (np.broadcast_to(g, a.shape).copy(),)

    return _t.make(out, (a,), backward)


def mean(a, axis: Union[int, Tuple[int, ...], None] = None, keepdims: bool = False):
    a = _t.as_tensor(a)
    count = a.data.size if axis is None else int(np.prod([a.shape[i] for i in np.atleast_1d(axis)]))
    return mul(sum(a, axis=axis, keepdims=keepdims), 1.0 / count)


def exp(a):
    a = _t.as_tensor(a)
    out = np.exp(a.data)
    return _t.make(out, (a,), lambda g: (g * out,))


def log(a):
    a = _t.as_tensor(a)
    return _t.make(np.log(a.data), (a,), lambda g: (g / a.data,))


def tanh(a):
    a = _t.as_tensor(a)
    out = np.tanh(a.data)
    return _t.make(out, (a,), lambda g: (g * (1.0 - out ** 2),))


def relu(a):
    a = _t.as_tensor(a)
    return _t.make(np.maximum(a.data, 0), (a,), lambda g: (g * (a.data > 0),))


def gelu(a):
    """The tanh approximation of GELU."""
    a = _t.as_tensor(a)
    x = a.data
    inner = _GELU_C * (x + 0.044715 * x ** 3)
    t = np.tanh(inner)
    out = 0.5 * x * (1.0 + t)

    def backward(g):
        d_inner = _GELU_C * (1.0 + 3 * 0.044715 * x ** 2)
        return (g * (0.5 * (1.0 + t) + 0.5 * x * (1.0 - t ** 2) * d_inner),)

    return _t.make(out, (a,), backward)


def softmax(a, axis: int = -1):
    a = _t.as_tensor(a)
    shifted = a.data - a.data.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    out = e / e.sum(axis=axis, keepdims=True)
    return _t.make(
        out, (a,),
        lambda g: (out * (g - (g * out).sum(axis=axis, keepdims=True)),),
    )


def layer_norm(x, weight, bias, eps: float = 1e-5):
    """Normalize over the last axis, then scale and shift."""
    x, weight, bias = _t.as_tensor(x), _t.as_tensor(weight), _t.as_tensor(bias)
    mu = x.data.mean(axis=-1, keepdims=True)
    centered = x.data - mu
    inv_std = 1.0 / np.sqrt((centered ** 2).mean(axis=-1, keepdims=True) + eps)
    xhat = centered * inv_std
    out = xhat * weight.data + bias.data
    n = x.shape[-1]

    def backward(g):
        dxhat = g * weight.data
        dx = inv_std / n * (
            n * dxhat
            - dxhat.sum(axis=-1, keepdims=True)
            - xhat * (dxhat * xhat).sum(axis=-1, keepdims=True)
        )
        return dx, _t.unbroadcast(g * xhat, weight.shape), _t.unbroadcast(g, bias.shape)

    return _t.make(out, (x, weight, bias), backward)


def getitem(a, index: Any):
    """Fancy or basic indexing; repeated indices accumulate their gradients."""
    a = _t.as_tensor(a)
    if isinstance(index, _t.Tensor):
        index = index.data.astype(np.int64)

    def backward(g):
        grad = np.zeros_like(a.data)
        np.add.at(grad, index, g)
        return (grad,)

    return _t.make(a.data[index], (a,), backward)


def embedding(weight, ids: np.ndarray):
    """Rows of `weight` selected by an integer array of any shape."""
    return getitem(weight, np.asarray(ids, dtype=np.int64))


def concat(tensors: Sequence[Any], axis: int = 0):
    tensors = [_t.as_tensor(x) for x in tensors]
    sizes = [x.shape[axis] for x in tensors]
    bounds = np.cumsum(sizes)[:-1]
    return _t.make(
        np.concatenate([x.data for x in tensors], axis=axis), tuple(tensors),
        lambda g: tuple(np.split(g, bounds, axis=axis)),
    )


def linear(x, weight, bias=None):
    """`x @ weight + bias` with `weight` shaped (in, out)."""
    out = matmul(x, weight)
    return out if bias is None else add(out, bias)


def cross_entropy(logits, targets: np.ndarray, ignore_index: int = -100):
    """
    Mean negative log-likelihood of `targets` under `softmax(logits)` over the last axis.

    Positions whose target equals `ignore_index` contribute nothing. With no
    remaining positions the loss is 0.
    """
    logits = _t.as_tensor(logits)
    targets = np.asarray(targets, dtype=np.int64)
    flat = logits.data.reshape(-1, logits.shape[-1])
    flat_targets = targets.reshape(-1)
    valid = flat_targets != ignore_index
    count = int(valid.sum())
    shifted = flat - flat.max(axis=-1, keepdims=True)
    log_z = np.log(np.exp(shifted).sum(axis=-1, keepdims=True))
    log_probs = shifted - log_z
    rows = np.nonzero(valid)[0]
    if count == 0:
        loss = np.zeros((), dtype=flat.dtype)
    else:
        loss = -log_probs[rows, flat_targets[rows]].sum() / count

    def backward(g):
        grad = np.zeros_like(flat)
        if count:
            grad[rows] = np.exp(log_probs[rows])
            grad[rows, flat_targets[rows]] -= 1.0
            grad *= g / count
        return (grad.reshape(logits.shape),)

    return _t.make(np.asarray(loss, dtype=flat.dtype), (logits,), backward)
