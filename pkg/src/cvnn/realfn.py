"""Scalar real activations and their derivatives, used by the split family.

Each function takes the real input first and keyword parameters after it.
Exponentials are arranged so no intermediate overflows for any finite input.
"""

from __future__ import annotations

import math


def sigmoid(t: float) -> float:
    if t >= 0:
        return 1.0 / (1.0 + math.exp(-t))
    e = math.exp(t)
    return e / (1.0 + e)


def sigmoid_d(t: float) -> float:
    s = sigmoid(t)
    return s * (1.0 - s)


def sech2(t: float) -> float:
    a = abs(t)
    if a < 1.0:
        return 1.0 - math.tanh(t) ** 2
    e = math.exp(-2.0 * a)
    return 4.0 * e / (1.0 + e) ** 2


def step(t: float) -> float:
    return 1.0 if t >= 0 else 0.0


def psigmoid(t: float, c1: float = 1.0, c2: float = 2.0) -> float:
    return 2.0 * c1 * sigmoid(c2 * t) - c1


def psigmoid_d(t: float, c1: float = 1.0, c2: float = 2.0) -> float:
    g = psigmoid(t, c1, c2)
    return c2 / (2.0 * c1) * (c1 * c1 - g * g)


def tanh(t: float) -> float:
    return math.tanh(t)


def tanh_d(t: float) -> float:
    return sech2(t)


def stanh(t: float) -> float:
    """tanh(t) / (1 - (t - 3) e^{-t}); rescaled by e^t for negative t."""
    if t >= 0:
        return math.tanh(t) / (1.0 - (t - 3.0) * math.exp(-t))
    e = math.exp(t)
    return math.tanh(t) * e / (e - (t - 3.0))


def stanh_d(t: float) -> float:
    th, s2 = math.tanh(t), sech2(t)
    if t >= 0:
        em = math.exp(-t)
        den = 1.0 - (t - 3.0) * em
        dden = (t - 4.0) * em
        return (s2 * den - th * dden) / den**2
    e = math.exp(t)
    den = e - (t - 3.0)
    num = th * e
    dnum = (s2 + th) * e
    return (dnum * den - num * (e - 1.0)) / den**2


def hard_tanh_abs_form(t: float) -> float:
    # Same function, but rounding can push it past +-1 for large |t|.
    return 0.5 * (abs(t + 1.0) - abs(t - 1.0))


def hard_tanh(t: float) -> float:
    if t < -1.0:
        return -1.0
    if t > 1.0:
        return 1.0
    return t


def hard_tanh_d(t: float) -> float:
    return 1.0 if -1.0 < t < 1.0 else 0.0


def relu(t: float) -> float:
    return max(t, 0.0)


def relu_d(t: float) -> float:
    return 1.0 if t > 0 else 0.0


def qam(t: float, alpha: float = 0.25) -> float:
    return t + alpha * math.sin(math.pi * t)


def qam_d(t: float, alpha: float = 0.25) -> float:
    return 1.0 + alpha * math.pi * math.cos(math.pi * t)


def elu(t: float, alpha: float = 1.0) -> float:
    return t if t > 0 else alpha * math.expm1(t)


def elu_d(t: float, alpha: float = 1.0) -> float:
    return 1.0 if t > 0 else alpha * math.exp(t)


def softplus(t: float) -> float:
    return max(t, 0.0) + math.log1p(math.exp(-abs(t)))


def softplus_d(t: float) -> float:
    return sigmoid(t)


def swish(t: float, beta: float = 1.0) -> float:
    return t * sigmoid(beta * t)


def swish_d(t: float, beta: float = 1.0) -> float:
    s = sigmoid(beta * t)
    return s + beta * t * s * (1.0 - s)


def mish(t: float) -> float:
    return t * math.tanh(softplus(t))


def mish_d(t: float) -> float:
    """omega e^t / delta^2 with omega, delta the usual Mish polynomials in e^t.

    For t > 0 numerator and denominator are divided by e^{4t} so the
    expression stays finite for large inputs.
    """
    if t <= 0:
        e = math.exp(t)
        omega = 4.0 * (t + 1.0) + 4.0 * e * e + e**3 + e * (4.0 * t + 6.0)
        delta = 2.0 * e + e * e + 2.0
        return omega * e / delta**2
    q = math.exp(-t)
    num = 4.0 * (t + 1.0) * q**3 + 4.0 * q + 1.0 + (4.0 * t + 6.0) * q * q
    den = 1.0 + 2.0 * q + 2.0 * q * q
    return num / den**2
