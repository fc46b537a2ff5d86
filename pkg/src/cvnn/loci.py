"""Numerically queryable point sets: where activations blow up or bend.

Every locus answers ``distance(z)``, so membership in an epsilon
neighbourhood is just ``distance(z) <= eps``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

KINDS = ("isolated-essential", "pole", "removable", "branch-cut", "countable-lattice")

# Kinds that make the function value itself undefined.
VALUE_SINGULAR = ("isolated-essential", "pole", "countable-lattice")


def _fmt(z: complex) -> str:
    return f"{z.real:.10g}{z.imag:+.10g}i"


@dataclass(frozen=True)
class Point:
    z: complex

    def distance(self, w: complex) -> float:
        return abs(w - self.z)

    def describe(self) -> str:
        return f"z = {_fmt(self.z)}"


@dataclass(frozen=True)
class Lattice:
    """Points ``base + n*step`` for every integer n."""

    base: complex
    step: complex

    def distance(self, w: complex) -> float:
        s2 = abs(self.step) ** 2
        t = ((w - self.base) * self.step.conjugate()).real / s2
        if not math.isfinite(t):
            return math.inf
        n0 = math.floor(t)
        return min(abs(w - (self.base + n * self.step)) for n in (n0 - 1, n0, n0 + 1, n0 + 2))

    def describe(self) -> str:
        return f"z = {_fmt(self.base)} + n*({_fmt(self.step)}), n integer"


@dataclass(frozen=True)
class Ray:
    """Half-line ``start + t*direction`` for t >= 0 (direction normalised)."""

    start: complex
    direction: complex

    def distance(self, w: complex) -> float:
        d = self.direction / abs(self.direction)
        t = ((w - self.start) * d.conjugate()).real
        if t <= 0:
            return abs(w - self.start)
        return abs(((w - self.start) * d.conjugate()).imag)

    def describe(self) -> str:
        return f"ray from {_fmt(self.start)} along {_fmt(self.direction)}"


@dataclass(frozen=True)
class Line:
    """Full line through ``point`` along ``direction``."""

    point: complex
    direction: complex

    def distance(self, w: complex) -> float:
        d = self.direction / abs(self.direction)
        return abs(((w - self.point) * d.conjugate()).imag)

    def describe(self) -> str:
        return f"line through {_fmt(self.point)} along {_fmt(self.direction)}"


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def distance(self, w: complex) -> float:
        return abs(abs(w - self.center) - self.radius)

    def describe(self) -> str:
        return f"|z - ({_fmt(self.center)})| = {self.radius:.10g}"


@dataclass(frozen=True)
class SingularityDescriptor:
    kind: str
    locus: Point | Lattice | Ray | Line | Circle

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown singularity kind {self.kind!r}")

    def distance(self, z: complex) -> float:
        return self.locus.distance(z)

    def describe(self) -> str:
        return f"{self.kind}: {self.locus.describe()}"


REAL_AXIS = Line(0j, 1 + 0j)
IMAG_AXIS = Line(0j, 1j)
