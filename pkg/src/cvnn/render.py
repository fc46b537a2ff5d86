"""Domain colouring and per-part surface export.

Colour map: hue ``h = (arg f / 2pi) mod 1`` (so arg 0 is red, pi/2
yellow-green, pi cyan, -pi/2 violet), HLS lightness ``l = |f| / (1 + |f|)``
at full saturation.  Zeros are black, large moduli tend to white, and any
point where ``f`` raises or returns a non-finite value is pure white.
Image row 0 is the top of the window (``im_max``).
"""

from __future__ import annotations

import colorsys
import hashlib
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from . import activations as act
from .activations import ActivationSpec
from .cplx import arg, modulus
from .errors import CVNNError
from .verify import GridSpec

SHADINGS = ("arg-only", "log-abs-rings", "abs-arg-rings")
PARTS = ("re", "im", "abs", "arg")
WHITE = (255, 255, 255)
MISSING = "NA"

RING_DEPTH = 0.3  # a ring factor runs over [1 - RING_DEPTH, 1]
ARG_SECTORS = 12


def _fixture_z4m1_over_z2(z: complex) -> complex:
    return (z**4 - 1) / (z * z)


FIXTURES: dict[str, Callable[[complex], complex]] = {
    "z4m1-over-z2": _fixture_z4m1_over_z2,
    "identity": lambda z: z,
}
FIXTURE_GRID = GridSpec(-2.0, 2.0, -2.0, 2.0, 256, 256)


@dataclass(frozen=True)
class ImageBuffer:
    width: int
    height: int
    pixels: bytes  # row-major RGB, 3 bytes per pixel

    def __post_init__(self):
        if len(self.pixels) != 3 * self.width * self.height:
            raise ValueError(f"{len(self.pixels)} bytes for a {self.width}x{self.height} RGB image")

    def pixel(self, row: int, col: int) -> tuple[int, int, int]:
        k = 3 * (row * self.width + col)
        return tuple(self.pixels[k:k + 3])

    def array(self) -> np.ndarray:
        return np.frombuffer(self.pixels, dtype=np.uint8).reshape(self.height, self.width, 3)

    def ppm(self) -> bytes:
        return f"P6\n{self.width} {self.height}\n255\n".encode("ascii") + self.pixels

    def sha256(self) -> str:
        return hashlib.sha256(self.ppm()).hexdigest()

    def write(self, path: str | Path) -> None:
        Path(path).write_bytes(self.ppm())


def read_ppm(path: str | Path) -> ImageBuffer:
    data = Path(path).read_bytes()
    parts = data.split(b"\n", 3)
    if parts[0] != b"P6" or len(parts) < 4:
        raise ValueError(f"{path}: not a binary PPM")
    w, h = (int(v) for v in parts[1].split())
    return ImageBuffer(w, h, parts[3])


def _as_function(f) -> Callable[[complex], complex]:
    if isinstance(f, ActivationSpec):
        return lambda z: act.evaluate(f, z)
    if isinstance(f, str):
        if f in FIXTURES:
            return FIXTURES[f]
        spec = act.get(f)
        return lambda z: act.evaluate(spec, z)
    return f


def _safe(fn: Callable[[complex], complex], z: complex) -> complex | None:
    try:
        w = complex(fn(z))
    except (CVNNError, ArithmeticError, ValueError):
        return None
    return w if math.isfinite(w.real) and math.isfinite(w.imag) else None


def _frac(t: float) -> float:
    return t - math.floor(t)


def color_of(w: complex | None, shading: str = "arg-only") -> tuple[int, int, int]:
    """RGB triple for one value; ``None`` is the white sentinel."""
    if w is None:
        return WHITE
    r = modulus(w)
    if not math.isfinite(r):
        return WHITE
    phi = arg(w)
    hue = 0.0 if math.isnan(phi) else _frac(phi / (2 * math.pi))
    light = r / (1.0 + r)
    if shading != "arg-only" and r > 0:
        factor = 1.0 - RING_DEPTH * (1.0 - _frac(math.log2(r)))
        if shading == "abs-arg-rings":
            factor *= 1.0 - RING_DEPTH * (1.0 - _frac(hue * ARG_SECTORS))
        light *= factor
    rgb = colorsys.hls_to_rgb(hue, light, 1.0)
    return tuple(min(255, max(0, int(round(255 * c)))) for c in rgb)


def domain_color(f, grid: GridSpec, shading: str = "arg-only") -> ImageBuffer:
    if shading not in SHADINGS:
        raise ValueError(f"unknown shading {shading!r}; choose from {SHADINGS}")
    fn = _as_function(f)
    out = bytearray(3 * grid.nx * grid.ny)
    for j, i, z in grid.nodes():
        row = grid.ny - 1 - j
        k = 3 * (row * grid.nx + i)
        out[k:k + 3] = bytes(color_of(_safe(fn, z), shading))
    return ImageBuffer(grid.nx, grid.ny, bytes(out))


# ---------------------------------------------------------------- surfaces

def _part(w: complex | None, part: str) -> float:
    if w is None:
        return math.nan
    if part == "re":
        return w.real
    if part == "im":
        return w.imag
    if part == "abs":
        return modulus(w)
    return arg(w)


def surface_export(f, grid: GridSpec, part: str) -> np.ndarray:
    """``(ny, nx)`` array of one part of ``f`` at the grid nodes.

    Row ``j`` holds ``Im z = ys[j]`` (bottom of the window first), column
    ``i`` holds ``Re z = xs[i]``.  NaN marks undefined values: the argument
    at a zero, or a point where ``f`` is singular.
    """
    if part not in PARTS:
        raise ValueError(f"unknown part {part!r}; choose from {PARTS}")
    fn = _as_function(f)
    out = np.empty((grid.ny, grid.nx))
    for j, i, z in grid.nodes():
        out[j, i] = _part(_safe(fn, z), part)
    return out


def format_csv(values: np.ndarray, grid: GridSpec, part: str) -> str:
    lines = [f"grid,{grid}", f"part,{part}"]
    for row in values:
        lines.append(",".join(MISSING if math.isnan(v) else f"{v:.17g}" for v in row))
    return "\n".join(lines) + "\n"


def write_csv(path: str | Path, values: np.ndarray, grid: GridSpec, part: str) -> None:
    Path(path).write_text(format_csv(values, grid, part))


def read_csv(path: str | Path) -> tuple[GridSpec, str, np.ndarray]:
    lines = Path(path).read_text().splitlines()
    grid = GridSpec.parse(lines[0].split(",", 1)[1])
    part = lines[1].split(",", 1)[1]
    rows = [[math.nan if v == MISSING else float(v) for v in line.split(",")] for line in lines[2:]]
    return grid, part, np.array(rows)


# ---------------------------------------------------------------- analysis

def lightness(img: ImageBuffer) -> np.ndarray:
    """HLS lightness of each pixel, ``(max + min) / 2`` over the channels."""
    a = img.array().astype(float)
    return (a.max(axis=2) + a.min(axis=2)) / (2 * 255.0)


def count_regions(img: ImageBuffer, dark: float = 0.1, light: float = 0.95) -> tuple[int, int]:
    """Connected (4-neighbour) regions with lightness <= ``dark`` and >= ``light``."""
    from scipy import ndimage

    l = lightness(img)
    return ndimage.label(l <= dark)[1], ndimage.label(l >= light)[1]
