"""Complex scalar helpers, polar form and the finite-difference Wirtinger oracle.

Python's built-in ``complex`` is the scalar type throughout.  Its product is
the textbook ``(xu - yv) + i(xv + yu)`` in IEEE double precision, which keeps
results reproducible on any platform with round-to-nearest arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import OracleError

ARG_UNDEFINED = math.nan
"""Sentinel returned as the argument of 0."""

ComplexFn = Callable[[complex], complex]


def conj(z: complex) -> complex:
    return complex(z.real, -z.imag)


def modulus(z: complex) -> float:
    return math.hypot(z.real, z.imag)


def arg(z: complex) -> float:
    """Principal argument in (-pi, pi], built from arctan of y/x by quadrant.

    Returns ``ARG_UNDEFINED`` (NaN) at the origin.
    """
    x, y = z.real, z.imag
    if x > 0:
        return math.atan(y / x)
    if x < 0:
        if y >= 0:
            return math.atan(y / x) + math.pi
        return math.atan(y / x) - math.pi
    if y > 0:
        return math.pi / 2
    if y < 0:
        return -math.pi / 2
    return ARG_UNDEFINED


def polar(z: complex) -> tuple[float, float]:
    """Return ``(|z|, arg z)``; the argument of 0 is the NaN sentinel."""
    return modulus(z), arg(z)


def from_polar(r: float, phi: float) -> complex:
    return complex(r * math.cos(phi), r * math.sin(phi))


def is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def wrap_angle(a: float) -> float:
    """Map an angle difference into [-pi, pi)."""
    return (a + math.pi) % (2 * math.pi) - math.pi


@dataclass(frozen=True)
class WirtingerJet:
    """Value of ``f = u + iv`` at a point plus its four real partials."""

    value: complex
    ux: float
    uy: float
    vx: float
    vy: float

    @property
    def dz(self) -> complex:
        return complex(0.5 * (self.ux + self.vy), 0.5 * (self.vx - self.uy))

    @property
    def dzbar(self) -> complex:
        return complex(0.5 * (self.ux - self.vy), 0.5 * (self.vx + self.uy))

    def conjugate(self) -> "WirtingerJet":
        """Jet of conj(f)."""
        return WirtingerJet(conj(self.value), self.ux, self.uy, -self.vx, -self.vy)


def wirtinger_fd(f: ComplexFn, z: complex, h: float = 1e-5) -> WirtingerJet:
    """Central-difference jet of ``f`` at ``z``; the repo-wide derivative oracle."""
    if not h > 0:
        raise ValueError(f"step must be positive, got {h}")
    z = complex(z)
    stencil = {
        "z": z,
        "z+h": z + h,
        "z-h": z - h,
        "z+ih": complex(z.real, z.imag + h),
        "z-ih": complex(z.real, z.imag - h),
    }
    vals = {}
    for name, p in stencil.items():
        try:
            v = complex(f(p))
        except (OverflowError, ZeroDivisionError, ValueError) as exc:
            raise OracleError(f"f failed at stencil point {name} = {p!r}: {exc}", p) from exc
        if not is_finite(v):
            raise OracleError(f"non-finite value at stencil point {name} = {p!r}", p)
        vals[name] = v
    dx = (vals["z+h"] - vals["z-h"]) / (2 * h)
    dy = (vals["z+ih"] - vals["z-ih"]) / (2 * h)
    return WirtingerJet(vals["z"], dx.real, dy.real, dx.imag, dy.imag)


def cr_residual(jet: WirtingerJet) -> tuple[float, float]:
    """Cauchy-Riemann residuals ``(|ux - vy|, |uy + vx|)``."""
    return abs(jet.ux - jet.vy), abs(jet.uy + jet.vx)
