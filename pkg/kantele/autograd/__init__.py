#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
A small reverse-mode differentiation engine over numpy arrays.

```
>>> from kantele.autograd import Tensor, gradient
>>> x = Tensor(3.0, requires_grad=True)
>>> gradient(lambda: x * x, {'x': x})[1]['x']
array(6.)
```
"""

from kantele.autograd._tensor import Tensor, no_grad, is_grad_enabled, as_tensor, unbroadcast
from kantele.autograd._ops import (
    add,
    sub,
    mul,
    div,
    neg,
    matmul,
    transpose,
    swapaxes,
    reshape,
    sum,
    mean,
    exp,
    log,
    tanh,
    relu,
    gelu,
    softmax,
    layer_norm,
    getitem,
    embedding,
    concat,
    linear,
    cross_entropy,
)
from kantele.autograd._check import gradient, finite_difference_check
from kantele.autograd._optim import Adam, clip_grad_norm, global_norm
