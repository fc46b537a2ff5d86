"""Seeded toy datasets: XOR, palindrome detection and QAM equalisation."""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

DEFAULT_TAPS = (1.0 + 0j, 0.3 + 0.2j)
DEFAULT_NOISE = 0.05


@dataclass
class Dataset:
    name: str
    inputs: np.ndarray  # (n, in_width) complex
    targets: np.ndarray  # (n, out_width) complex
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        self.inputs = np.atleast_2d(np.asarray(self.inputs, dtype=complex))
        self.targets = np.atleast_2d(np.asarray(self.targets, dtype=complex))
        if len(self.inputs) == 0:
            raise ValueError("dataset is empty")
        if len(self.inputs) != len(self.targets):
            raise ValueError("inputs and targets differ in length")

    def __len__(self) -> int:
        return len(self.inputs)

    def __iter__(self):
        return zip(self.inputs, self.targets)

    @property
    def input_width(self) -> int:
        return self.inputs.shape[1]

    @property
    def target_width(self) -> int:
        return self.targets.shape[1]

    def to_dict(self) -> dict:
        def rows(a):
            return [[[float(v.real), float(v.imag)] for v in row] for row in a]

        return {"name": self.name, "params": self.params,
                "inputs": rows(self.inputs), "targets": rows(self.targets)}

    @classmethod
    def from_dict(cls, doc: dict) -> "Dataset":
        def arr(rows):
            return np.array([[complex(re, im) for re, im in row] for row in rows], dtype=complex)

        return cls(doc["name"], arr(doc["inputs"]), arr(doc["targets"]), doc.get("params", {}))

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> "Dataset":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------- XOR

XOR_ENCODINGS = ("orthogonal", "real")


def gen_xor(encoding: str = "real") -> Dataset:
    """The four XOR points with input ``x1 + i x2``.

    ``real`` (default): target ``XOR(x1, x2) + 0i``, class ``Re o > 0.5``.
    A single split neuron cannot fit this one: ``Re o`` is a monotone
    function of a linear form in (x1, x2).

    ``orthogonal``: target ``x1 + i x2``; the class is read as
    ``[Re o > 0.5] xor [Im o > 0.5]``, i.e. from which of the four regions
    cut out by the two orthogonal decision lines the output lands in.
    """
    if encoding not in XOR_ENCODINGS:
        raise ValueError(f"unknown XOR encoding {encoding!r}; choose from {XOR_ENCODINGS}")
    xs, ds = [], []
    for x1, x2 in itertools.product((0, 1), repeat=2):
        xs.append([complex(x1, x2)])
        ds.append([complex(x1, x2)] if encoding == "orthogonal" else [complex(x1 ^ x2, 0)])
    return Dataset("xor", np.array(xs), np.array(ds), {"encoding": encoding})


def xor_label(x: complex) -> int:
    return int(round(x.real)) ^ int(round(x.imag))


def xor_decide(output: complex, encoding: str = "orthogonal") -> int:
    if encoding == "orthogonal":
        return int(output.real > 0.5) ^ int(output.imag > 0.5)
    return int(output.real > 0.5)


# ---------------------------------------------------------------- symmetry

SYMMETRY_ENUMERATION_LIMIT = 2**10


def gen_symmetry(bits: int, seed: int = 0) -> Dataset:
    """Palindrome detection on bit strings packed two bits per complex input.

    All ``2**bits`` strings are used up to 10 bits; for 12 bits a seeded
    subsample of 1024 distinct strings is drawn.
    """
    if bits % 2 or not 2 <= bits <= 12:
        raise ValueError(f"bits must be even and in [2, 12], got {bits}")
    total = 2**bits
    if total > SYMMETRY_ENUMERATION_LIMIT:
        rng = np.random.default_rng(seed)
        codes = np.sort(rng.choice(total, size=SYMMETRY_ENUMERATION_LIMIT, replace=False))
    else:
        codes = np.arange(total)
    xs, ds = [], []
    for code in codes:
        b = [(int(code) >> (bits - 1 - k)) & 1 for k in range(bits)]  # MSB first
        xs.append([complex(b[2 * k], b[2 * k + 1]) for k in range(bits // 2)])
        ds.append([complex(1.0 if b == b[::-1] else 0.0, 0)])
    return Dataset("symmetry", np.array(xs), np.array(ds), {"bits": bits, "seed": seed})


# ---------------------------------------------------------------- QAM

QAM_SCALES = ("unit", "lattice")


def qam_constellation(order: int, scale: str = "unit") -> np.ndarray:
    """Square QAM points.  ``lattice`` keeps odd-integer coordinates;
    ``unit`` rescales to unit average power."""
    if order not in (4, 16):
        raise ValueError(f"QAM order must be 4 or 16, got {order}")
    if scale not in QAM_SCALES:
        raise ValueError(f"unknown QAM scale {scale!r}")
    m = int(math.isqrt(order))
    levels = np.arange(-(m - 1), m, 2, dtype=float)
    pts = np.array([complex(a, b) for a in levels for b in levels])
    if scale == "unit":
        pts = pts / math.sqrt(np.mean(np.abs(pts) ** 2))
    return pts


def gen_qam(order: int = 4, n: int = 2000, noise_sigma: float = DEFAULT_NOISE,
            channel: Sequence[complex] = DEFAULT_TAPS, seed: int = 0, window: int = 1,
            scale: str = "unit") -> Dataset:
    """Equalisation data: received FIR-filtered noisy samples -> sent symbol.

    Input ``k`` of a sample holds ``r[t - k]`` for ``k < window``; the target
    is ``s[t]``.  Noise is circular Gaussian with ``E|n|^2 = noise_sigma^2``.
    Earlier symbols needed by the channel memory and window are generated
    too, so every sample sees a full history.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if noise_sigma < 0:
        raise ValueError(f"noise_sigma must be >= 0, got {noise_sigma}")
    taps = np.asarray(list(channel), dtype=complex)
    if taps.size == 0:
        raise ValueError("channel taps must be nonempty")
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    pts = qam_constellation(order, scale)
    rng = np.random.default_rng(seed)
    lead = taps.size - 1 + window - 1
    total = n + lead
    sym = pts[rng.integers(0, pts.size, size=total)]
    noise = (rng.standard_normal(total) + 1j * rng.standard_normal(total)) * (noise_sigma / math.sqrt(2))
    recv = np.convolve(sym, taps)[:total] + noise
    start = lead
    xs = np.array([[recv[t - k] for k in range(window)] for t in range(start, total)])
    ds = sym[start:total].reshape(-1, 1)
    params = {"order": order, "n": n, "noise_sigma": noise_sigma,
              "channel": [[float(t.real), float(t.imag)] for t in taps],
              "seed": seed, "window": window, "scale": scale}
    return Dataset("qam", xs, ds, params)
