"""Complex backpropagation (four variants) and the online training loop.

All variants return the gradient of the canonical loss
``L = 0.5 * sum |d - o|^2`` in the form ``dL/dw_re + i dL/dw_im``, so the
descent step is always ``w <- w - lr * grad``.  They differ only in how the
signal ``p`` that multiplies ``-conj(input)`` is built from the error ``e``
arriving at a neuron's output:

* complex_derivative: ``p = e * sigma'(conj z)``
* partial_derivatives: ``p = (ux + i uy) Re e + (vx + i vy) Im e``
* cr_simplified: ``p = (ux - i vx) e``
* split: ``p = ux Re e + i vy Im e``

and the error passed back to the previous layer is ``conj(W)^T p``.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import activations as act
from .activations import ActivationSpec
from .cplx import conj
from .errors import (
    ActivationOverflowError,
    AlgorithmMismatchError,
    AssumptionViolationError,
    KinkError,
    NonDifferentiableError,
    SingularityError,
)
from .network import ForwardTrace, Network, forward, loss
from .tasks import Dataset

ALGORITHMS = ("complex_derivative", "partial_derivatives", "cr_simplified", "split")

CONJ_COMMUTE_TOL = 1e-8
CD_EXCLUSION = 0.05


@dataclass(frozen=True)
class TrainConfig:
    algorithm: str
    learning_rate: float
    epochs: int
    shuffle: bool = False
    seed: int = 0
    stop_loss: float = 0.0

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {self.algorithm!r}")
        if not (math.isfinite(self.learning_rate) and self.learning_rate >= 0):
            raise ValueError(f"learning_rate must be finite and >= 0, got {self.learning_rate}")
        if self.learning_rate == 0:
            warnings.warn("learning_rate is 0: weights will not change", stacklevel=3)
        if self.epochs < 0:
            raise ValueError(f"epochs must be >= 0, got {self.epochs}")
        if not self.stop_loss >= 0:
            raise ValueError(f"stop_loss must be >= 0, got {self.stop_loss}")


@dataclass
class GradientSet:
    weights: list[np.ndarray]
    bias: list[np.ndarray]
    deltas: list[np.ndarray]  # error arriving at each layer's outputs

    def max_abs_diff(self, other: "GradientSet") -> float:
        return max(
            float(np.max(np.abs(a - b)))
            for a, b in zip(self.weights + self.bias, other.weights + other.bias)
        )

    def flat(self) -> np.ndarray:
        return np.concatenate([np.ravel(a) for pair in zip(self.weights, self.bias) for a in pair])


# ---------------------------------------------------------------- compatibility

def incompatibility(spec: ActivationSpec, algorithm: str) -> str | None:
    """Reason ``algorithm`` cannot run on ``spec``, or None."""
    if algorithm not in ALGORITHMS:
        return f"unknown algorithm {algorithm!r}"
    if not spec.differentiable:
        return f"{spec.id} is not differentiable"
    if algorithm in ("complex_derivative", "cr_simplified") and not spec.holomorphic:
        return f"{algorithm} needs a holomorphic activation; {spec.id} is not"
    if algorithm == "split" and spec.category != "split-real-imaginary":
        return f"split needs a split-real-imaginary activation; {spec.id} is {spec.category}"
    return None


def compatible(net: Network, algorithm: str) -> bool:
    return all(incompatibility(l.activation, algorithm) is None for l in net.layers)


def check_compatible(net: Network, algorithm: str) -> None:
    for i, layer in enumerate(net.layers):
        why = incompatibility(layer.activation, algorithm)
        if why:
            raise AlgorithmMismatchError(f"layer {i}: {why}")


# ---------------------------------------------------------------- local rules

def _guard(spec: ActivationSpec, z: complex, exclusion: float, l: int, k: int) -> None:
    if exclusion <= 0:
        return
    d = act.singularity_distance(spec, z)
    if d <= exclusion:
        raise SingularityError(
            f"{spec.id}: z = {z!r} lies {d:.3g} from a singularity (exclusion {exclusion})"
        ).locate(l, k)
    d = act.kink_distance(spec, z)
    if d <= exclusion:
        raise KinkError(f"{spec.id}: z = {z!r} lies {d:.3g} from a kink (exclusion {exclusion})").locate(l, k)


def _rule_complex_derivative(spec: ActivationSpec, z: complex, e: complex) -> complex:
    fz = act.evaluate(spec, z)
    fzc = act.evaluate(spec, conj(z))
    if abs(fzc - conj(fz)) > CONJ_COMMUTE_TOL * max(1.0, abs(fz)):
        raise AssumptionViolationError(
            f"{spec.id}: sigma(conj z) != conj(sigma(z)) at z = {z!r} ({abs(fzc - conj(fz)):.3g})"
        )
    return e * act.complex_derivative(spec, conj(z))


def _rule_partial(spec: ActivationSpec, z: complex, e: complex) -> complex:
    j = act.partials(spec, z)
    return complex(j.ux, j.uy) * e.real + complex(j.vx, j.vy) * e.imag


def _rule_cr(spec: ActivationSpec, z: complex, e: complex) -> complex:
    j = act.partials(spec, z)
    return complex(j.ux, -j.vx) * e


def _rule_split(spec: ActivationSpec, z: complex, e: complex) -> complex:
    j = act.partials(spec, z)
    return complex(j.ux * e.real, j.vy * e.imag)


_RULES: dict[str, Callable[[ActivationSpec, complex, complex], complex]] = {
    "complex_derivative": _rule_complex_derivative,
    "partial_derivatives": _rule_partial,
    "cr_simplified": _rule_cr,
    "split": _rule_split,
}


def _backprop(net: Network, trace: ForwardTrace, d, algorithm: str, exclusion: float) -> GradientSet:
    check_compatible(net, algorithm)
    rule = _RULES[algorithm]
    d = np.asarray(d, dtype=complex).reshape(-1)
    if d.shape[0] != net.output_width:
        raise ValueError(f"target length {d.shape[0]} != output width {net.output_width}")
    n = len(net.layers)
    gw: list[np.ndarray] = [None] * n
    gb: list[np.ndarray] = [None] * n
    deltas: list[np.ndarray] = [None] * n
    e = d - trace.output
    for l in range(n - 1, -1, -1):
        layer = net.layers[l]
        z = trace.pre[l]
        deltas[l] = e
        p = np.empty_like(z)
        for k in range(z.shape[0]):
            zk = complex(z[k])
            _guard(layer.activation, zk, exclusion, l, k)
            try:
                p[k] = rule(layer.activation, zk, complex(e[k]))
            except (SingularityError, KinkError, NonDifferentiableError, ActivationOverflowError) as exc:
                raise exc.locate(l, k)
        a = trace.layer_input(l)
        gw[l] = -np.outer(p, np.conj(a))
        gb[l] = -p
        e = np.conj(layer.weights).T @ p
    return GradientSet(gw, gb, deltas)


def backward_complex_derivative(net: Network, trace: ForwardTrace, d,
                                exclusion: float = CD_EXCLUSION) -> GradientSet:
    """Gradient through the complex derivative, evaluated at the conjugated
    pre-activation.  Requires ``sigma(conj z) = conj(sigma(z))`` at every
    trace point (checked) so that ``sigma'(conj z) = conj(sigma'(z))``."""
    return _backprop(net, trace, d, "complex_derivative", exclusion)


def backward_partial_derivatives(net: Network, trace: ForwardTrace, d, exclusion: float = 0.0) -> GradientSet:
    return _backprop(net, trace, d, "partial_derivatives", exclusion)


def backward_cr_simplified(net: Network, trace: ForwardTrace, d, exclusion: float = 0.0) -> GradientSet:
    return _backprop(net, trace, d, "cr_simplified", exclusion)


def backward_split(net: Network, trace: ForwardTrace, d, exclusion: float = 0.0) -> GradientSet:
    return _backprop(net, trace, d, "split", exclusion)


BACKWARD = {
    "complex_derivative": backward_complex_derivative,
    "partial_derivatives": backward_partial_derivatives,
    "cr_simplified": backward_cr_simplified,
    "split": backward_split,
}


def backward(net: Network, trace: ForwardTrace, d, algorithm: str, exclusion: float | None = None) -> GradientSet:
    fn = BACKWARD[algorithm]
    return fn(net, trace, d) if exclusion is None else fn(net, trace, d, exclusion=exclusion)


def apply_update(net: Network, grads: GradientSet, lr: float) -> None:
    for layer, gw, gb in zip(net.layers, grads.weights, grads.bias):
        layer.weights -= lr * gw
        layer.bias -= lr * gb


# ---------------------------------------------------------------- training loop

STOP_EPOCHS = "epochs exhausted"
STOP_LOSS = "stop_loss reached"
STOP_FAILURE = "numeric failure"


@dataclass
class TrainReport:
    config: TrainConfig
    epoch_losses: list[float]  # entry k: mean loss after k epochs (entry 0 = before training)
    network: Network
    stop_reason: str
    epochs_run: int
    skipped_steps: int = 0
    skipped_evaluations: int = 0
    failure: dict | None = None
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "epoch_losses": self.epoch_losses,
            "stop_reason": self.stop_reason,
            "epochs_run": self.epochs_run,
            "skipped_steps": self.skipped_steps,
            "skipped_evaluations": self.skipped_evaluations,
            "failure": self.failure,
            "extras": self.extras,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def mean_loss(net: Network, data: Dataset) -> tuple[float, int]:
    """Mean loss over the samples that evaluate, and the number that did not."""
    total, ok, bad = 0.0, 0, 0
    for x, d in data:
        try:
            total += loss(forward(net, x), d)
            ok += 1
        except (SingularityError, KinkError):
            bad += 1
    return (total / ok if ok else math.nan), bad


def train(net: Network, data: Dataset, cfg: TrainConfig) -> TrainReport:
    """Online gradient descent; ``net`` is copied, never modified."""
    check_compatible(net, cfg.algorithm)
    net = net.copy()
    rng = np.random.default_rng(cfg.seed)
    skipped, skipped_eval = 0, 0

    def fail(epoch: int, sample: int | None, why: str) -> TrainReport:
        return TrainReport(cfg, losses, net, STOP_FAILURE, epoch, skipped, skipped_eval,
                           {"epoch": epoch, "sample": sample, "reason": why})

    losses: list[float] = []
    try:
        l0, bad = mean_loss(net, data)
    except ActivationOverflowError as exc:
        return fail(0, None, str(exc))
    skipped_eval += bad
    losses.append(l0)
    if l0 <= cfg.stop_loss:
        return TrainReport(cfg, losses, net, STOP_LOSS, 0, skipped, skipped_eval)

    n = len(data)
    for epoch in range(1, cfg.epochs + 1):
        order = rng.permutation(n) if cfg.shuffle else range(n)
        for idx in order:
            x, d = data.inputs[idx], data.targets[idx]
            try:
                trace = forward(net, x)
                grads = backward(net, trace, d, cfg.algorithm)
            except (SingularityError, KinkError):
                skipped += 1
                continue
            except (ActivationOverflowError, AssumptionViolationError) as exc:
                return fail(epoch, int(idx), str(exc))
            apply_update(net, grads, cfg.learning_rate)
            if not net.all_finite():
                return fail(epoch, int(idx), "non-finite weight after update")
        try:
            le, bad = mean_loss(net, data)
        except ActivationOverflowError as exc:
            return fail(epoch, None, str(exc))
        skipped_eval += bad
        losses.append(le)
        if not math.isfinite(le):
            return fail(epoch, None, "non-finite mean loss")
        if le <= cfg.stop_loss:
            return TrainReport(cfg, losses, net, STOP_LOSS, epoch, skipped, skipped_eval)
    return TrainReport(cfg, losses, net, STOP_EPOCHS, cfg.epochs, skipped, skipped_eval)
