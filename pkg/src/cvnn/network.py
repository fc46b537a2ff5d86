"""Fully connected complex multilayer perceptron."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import activations as act
from .activations import ActivationSpec
from .errors import CVNNError


@dataclass
class Layer:
    weights: np.ndarray  # (n_out, n_in) complex128
    bias: np.ndarray  # (n_out,) complex128
    activation: ActivationSpec

    def __post_init__(self):
        # A real-dtype array would silently drop the imaginary part of updates.
        self.weights = np.array(self.weights, dtype=complex)
        self.bias = np.array(self.bias, dtype=complex)

    @property
    def n_in(self) -> int:
        return self.weights.shape[1]

    @property
    def n_out(self) -> int:
        return self.weights.shape[0]

    def copy(self) -> "Layer":
        return Layer(self.weights.copy(), self.bias.copy(), self.activation)


@dataclass
class Network:
    layers: list[Layer]
    input_width: int

    def __post_init__(self):
        if not self.layers:
            raise ValueError("a network needs at least one layer")
        width = self.input_width
        for i, layer in enumerate(self.layers):
            if layer.weights.ndim != 2 or layer.n_in != width:
                raise ValueError(f"layer {i} expects {layer.weights.shape[1:]} inputs, previous width {width}")
            if layer.bias.shape != (layer.n_out,):
                raise ValueError(f"layer {i} bias shape {layer.bias.shape} != ({layer.n_out},)")
            if not (np.all(np.isfinite(layer.weights)) and np.all(np.isfinite(layer.bias))):
                raise ValueError(f"layer {i} has non-finite entries")
            width = layer.n_out

    @property
    def widths(self) -> list[int]:
        return [self.input_width] + [l.n_out for l in self.layers]

    @property
    def output_width(self) -> int:
        return self.layers[-1].n_out

    def copy(self) -> "Network":
        return Network([l.copy() for l in self.layers], self.input_width)

    def n_parameters(self) -> int:
        return sum(l.weights.size + l.bias.size for l in self.layers)

    def all_finite(self) -> bool:
        return all(np.all(np.isfinite(l.weights)) and np.all(np.isfinite(l.bias)) for l in self.layers)

    # -- serialisation

    def to_dict(self) -> dict:
        def pairs(a):
            return [[float(v.real), float(v.imag)] for v in np.ravel(a)]

        return {
            "widths": self.widths,
            "layers": [
                {
                    "activation": {"id": l.activation.id,
                                   "params": l.activation.record()["params"]},
                    "weights": pairs(l.weights),
                    "bias": pairs(l.bias),
                }
                for l in self.layers
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Network":
        widths = doc["widths"]
        layers = []
        for i, ld in enumerate(doc["layers"]):
            n_in, n_out = widths[i], widths[i + 1]
            w = np.array([complex(re, im) for re, im in ld["weights"]], dtype=complex).reshape(n_out, n_in)
            b = np.array([complex(re, im) for re, im in ld["bias"]], dtype=complex)
            layers.append(Layer(w, b, act.from_record(ld["activation"])))
        return cls(layers, widths[0])

    def dumps(self) -> str:
        # json writes floats with repr(), the shortest string that round-trips.
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def loads(cls, text: str) -> "Network":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class ForwardTrace:
    inputs: np.ndarray
    pre: tuple[np.ndarray, ...]  # z^(l) per layer
    post: tuple[np.ndarray, ...]  # a^(l) per layer

    @property
    def output(self) -> np.ndarray:
        return self.post[-1]

    def layer_input(self, l: int) -> np.ndarray:
        return self.inputs if l == 0 else self.post[l - 1]


def _disc_sample(rng: np.random.Generator, radius: float) -> complex:
    while True:
        u, v = rng.uniform(-1.0, 1.0, size=2)
        if u * u + v * v <= 1.0:
            return complex(radius * u, radius * v)


def init(widths: Sequence[int], activation: ActivationSpec | str | Sequence[ActivationSpec | str],
         init_radius: float = 0.1, seed: int = 0) -> Network:
    """Random network with every weight and bias uniform in a disc.

    Draws come from numpy's PCG64 generator seeded with ``seed``, one
    rejection-sampled point per parameter, layer by layer, weights in
    row-major order followed by the biases.
    """
    widths = list(widths)
    if len(widths) < 2:
        raise ValueError(f"widths needs at least input and output sizes, got {widths}")
    if any(int(w) != w or w < 1 for w in widths):
        raise ValueError(f"widths must be positive integers, got {widths}")
    if not (math.isfinite(init_radius) and init_radius > 0):
        raise ValueError(f"init_radius must be positive, got {init_radius}")
    n_layers = len(widths) - 1
    if isinstance(activation, (ActivationSpec, str)):
        specs = [activation] * n_layers
    else:
        specs = list(activation)
        if len(specs) != n_layers:
            raise ValueError(f"{len(specs)} activations given for {n_layers} layers")
    specs = [act.get(s) if isinstance(s, str) else s for s in specs]

    rng = np.random.default_rng(seed)
    layers = []
    for l in range(n_layers):
        n_in, n_out = widths[l], widths[l + 1]
        w = np.array([_disc_sample(rng, init_radius) for _ in range(n_in * n_out)]).reshape(n_out, n_in)
        b = np.array([_disc_sample(rng, init_radius) for _ in range(n_out)])
        layers.append(Layer(w, b, specs[l]))
    return Network(layers, widths[0])


def forward(net: Network, x) -> ForwardTrace:
    x = np.asarray(x, dtype=complex).reshape(-1)
    if x.shape[0] != net.input_width:
        raise ValueError(f"input length {x.shape[0]} != network input width {net.input_width}")
    pre, post = [], []
    a = x
    for l, layer in enumerate(net.layers):
        z = layer.weights @ a + layer.bias
        out = np.empty_like(z)
        for k in range(z.shape[0]):
            try:
                out[k] = act.evaluate(layer.activation, complex(z[k]))
            except CVNNError as exc:
                raise exc.locate(l, k)
        pre.append(z)
        post.append(out)
        a = out
    return ForwardTrace(x, tuple(pre), tuple(post))


def predict(net: Network, x) -> np.ndarray:
    return forward(net, x).output


def loss(trace_or_output, d) -> float:
    """Half the squared error norm, ``0.5 * sum |d - o|^2``."""
    o = trace_or_output.output if isinstance(trace_or_output, ForwardTrace) else trace_or_output
    o = np.asarray(o, dtype=complex).reshape(-1)
    d = np.asarray(d, dtype=complex).reshape(-1)
    if o.shape != d.shape:
        raise ValueError(f"target length {d.shape[0]} != output length {o.shape[0]}")
    e = d - o
    return 0.5 * float(np.sum(e.real**2 + e.imag**2))
