#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

import numpy as np
import pytest
from kantele.autograd import (
    Tensor, no_grad, unbroadcast, gradient, finite_difference_check, Adam, clip_grad_norm,
    global_norm, gelu, softmax, layer_norm, embedding, concat, linear, cross_entropy,
)
from kantele.utils.exceptions import NonFiniteLossError


def _params(seed: int = 0, **shapes):
    rng = np.random.default_rng(seed)
    return {
        name: Tensor(rng.normal(size=shape), requires_grad=True, name=name)
        for name, shape in shapes.items()
    }


def test_square():
    x = Tensor(3.0, requires_grad=True)
    value, grads = gradient(lambda: x * x, {'x': x})
    assert value == 9.0
    assert grads['x'] == pytest.approx(6.0)


def test_default_dtype_is_float64():
    assert Tensor([1, 2, 3]).dtype == np.float64
    assert Tensor(np.zeros(2, dtype=np.float32)).dtype == np.float32


def test_unreached_parameter_gets_zero_gradient():
    p = _params(x=(3,), unused=(2, 2))
    value, grads = gradient(lambda: (p['x'] * 2.0).sum(), p)
    assert np.allclose(grads['x'], 2.0)
    assert np.array_equal(grads['unused'], np.zeros((2, 2)))


def test_gradients_accumulate_over_reuse():
    p = _params(x=(4,))
    _, grads = gradient(lambda: (p['x'] * p['x'] + p['x']).sum(), p)
    assert np.allclose(grads['x'], 2 * p['x'].data + 1)


def test_gradient_does_not_leave_state_behind():
    p = _params(x=(3,))
    gradient(lambda: p['x'].sum(), p)
    assert p['x'].grad is None


@pytest.mark.parametrize('shape,target', [
    ((2, 3), (3,)),
    ((2, 3), (1, 3)),
    ((4, 2, 3), (2, 1)),
    ((3,), (3,)),
])
def test_unbroadcast(shape, target):
    g = np.ones(shape)
    out = unbroadcast(g, target)
    assert out.shape == target
    assert out.sum() == g.sum()


def test_elementwise_ops():
    p = _params(a=(3, 4), b=(4,), c=(3, 1))

    def loss():
        a, b, c = p['a'], p['b'], p['c']
        x = (a + b) * c - a / (b * b + 1.0)
        y = (x.tanh() + x.exp() * 0.1 + (a * a + 1.0).log()).relu()
        return (-y).mean() + y.sum(axis=0).sum() * 0.01

    errors = finite_difference_check(loss, p, samples_per_block=8)
    assert max(errors.values()) < 1e-5


def test_shape_ops():
    p = _params(a=(2, 3, 4), w=(4, 5), bias=(5,))

    def loss():
        x = linear(p['a'], p['w'], p['bias'])
        x = x.transpose((1, 0, 2)).reshape(3, 10)
        x = x.swapaxes(0, 1)[2:7]
        x = concat([x, x[:, :1] * 2.0], axis=1)
        return (x * x).sum()

    errors = finite_difference_check(loss, p, samples_per_block=8)
    assert max(errors.values()) < 1e-5


def test_nonlinearities():
    p = _params(x=(3, 5), w=(5,), b=(5,))
    targets = np.array([0, 4, 2])

    def loss():
        h = layer_norm(gelu(p['x']), p['w'], p['b'])
        return cross_entropy(h, targets) + softmax(h, axis=-1)[:, 0].sum()

    errors = finite_difference_check(loss, p, samples_per_block=8)
    assert max(errors.values()) < 1e-5


def test_embedding_accumulates_repeated_rows():
    p = _params(table=(5, 3))
    ids = np.array([[1, 1], [3, 1]])
    _, grads = gradient(lambda: embedding(p['table'], ids).sum(), p)
    assert np.allclose(grads['table'][1], 3.0)
    assert np.allclose(grads['table'][3], 1.0)
    assert np.allclose(grads['table'][0], 0.0)


def test_cross_entropy_ignore_index():
    logits = Tensor(np.zeros((3, 4)), requires_grad=True)
    loss = cross_entropy(logits, np.array([1, -100, 2]))
    assert float(loss.data) == pytest.approx(np.log(4.0))
    empty = cross_entropy(logits, np.array([-100, -100, -100]))
    assert float(empty.data) == 0.0
    _, grads = gradient(lambda: cross_entropy(logits, np.array([1, -100, 2])), {'l': logits})
    assert np.allclose(grads['l'][1], 0.0)


def test_softmax_sums_to_one():
    out = softmax(Tensor(np.array([[1000.0, 1000.0], [0.0, -1000.0]])))
    assert np.allclose(out.data.sum(axis=-1), 1.0)
    assert np.allclose(out.data[0], 0.5)


def test_no_grad():
    x = Tensor(np.ones(3), requires_grad=True)
    with no_grad():
        y = x * 2.0
    assert not y.requires_grad
    assert (x * 2.0).requires_grad


def test_non_finite_loss():
    x = Tensor(1.0, requires_grad=True)
    with pytest.raises(NonFiniteLossError) as excinfo:
        gradient(lambda: x * float('nan'), {'x': x}, context={'step': 7})
    assert 'step=7' in str(excinfo.value)


def test_clip_grad_norm():
    grads = {'a': np.array([3.0, 4.0])}
    clipped, norm = clip_grad_norm(grads, 1.0)
    assert norm == pytest.approx(5.0)
    assert np.allclose(clipped['a'], [0.6, 0.8])
    same, norm = clip_grad_norm(grads, 10.0)
    assert same is grads
    assert global_norm({'a': np.array([3.0]), 'b': np.array([4.0])}) == pytest.approx(5.0)


def test_adam_minimizes_a_quadratic():
    p = {'x': Tensor(np.array([0.0, 10.0]), requires_grad=True)}
    target = np.array([3.0, -2.0])
    adam = Adam(p, lr=0.1)
    for _ in range(2_000):
        _, grads = gradient(lambda: ((p['x'] - target) * (p['x'] - target)).sum(), p)
        adam.step(grads)
    assert np.allclose(p['x'].data, target, atol=1e-2)


def test_adam_skips_frozen_parameters():
    p = _params(a=(2,), b=(2,))
    p['b'].requires_grad = False
    before = p['b'].data.copy()
    adam = Adam(p, lr=0.1)
    _, grads = gradient(lambda: (p['a'] * p['b']).sum(), p)
    assert 'b' not in grads
    adam.step(grads)
    assert np.array_equal(p['b'].data, before)
    assert 'b' not in adam.state_dict()['m']
