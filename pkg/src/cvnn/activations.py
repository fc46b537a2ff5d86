"""Catalog of complex-valued activation functions.

Every entry is an immutable :class:`ActivationSpec` carrying the function,
its analytic real partials, classification flags and the loci where it is
singular or non-differentiable.  Use :func:`get` to build one (optionally
with non-default parameters) and :func:`evaluate` / :func:`partials` to use
it.

Families:

* split-real-imaginary: ``f(x) + i f(y)`` for a real function ``f``;
* amplitude-phase: ``g(|z|) z/|z|``, written here as ``s(|z|) z`` with
  ``s = g(r)/r``, and defined as 0 at the origin;
* fully-complex: everything else (holomorphic elementary functions,
  quadrant-gated ReLU variants and the cardioid).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable

from . import realfn
from .cplx import WirtingerJet, arg, modulus
from .errors import (
    ActivationOverflowError,
    KinkError,
    NonDifferentiableError,
    SingularityError,
)
from .loci import (
    IMAG_AXIS,
    REAL_AXIS,
    VALUE_SINGULAR,
    Circle,
    Lattice,
    Line,
    Point,
    Ray,
    SingularityDescriptor,
)

CATEGORIES = ("split-real-imaginary", "split-phase-amplitude", "amplitude-phase", "fully-complex")

SINGULAR_TOL = 1e-12
KINK_TOL = 1e-12
EXP_CAP = 700.0

Partials = tuple[float, float, float, float]


@dataclass(frozen=True)
class ActivationSpec:
    id: str
    params: tuple[tuple[str, float | complex], ...]
    category: str
    differentiable: bool
    holomorphic: bool
    bounded_on: str
    singularities: tuple[SingularityDescriptor, ...] = ()
    kinks: tuple = ()
    # Non-holomorphic only through jumps on its kinks; CR holds elsewhere.
    piecewise_holomorphic: bool = False
    formula: str = ""
    fn: Callable[[complex], complex] = field(default=None, compare=False, repr=False)
    jet: Callable[[complex], Partials] | None = field(default=None, compare=False, repr=False)
    derivative: Callable[[complex], complex] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise ValueError(f"unknown category {self.category!r}")
        if self.holomorphic and self.category != "fully-complex":
            raise ValueError(f"{self.id}: holomorphic entries must be fully-complex")

    @property
    def param_dict(self) -> dict[str, float | complex]:
        return dict(self.params)

    def __call__(self, z: complex) -> complex:
        return evaluate(self, z)

    def record(self) -> dict:
        """Plain-data description, used for listings and serialisation."""
        def enc(v):
            return [v.real, v.imag] if isinstance(v, complex) else v

        return {
            "id": self.id,
            "category": self.category,
            "params": {k: enc(v) for k, v in self.params},
            "differentiable": self.differentiable,
            "holomorphic": self.holomorphic,
            "bounded_on": self.bounded_on,
            "singularities": [s.describe() for s in self.singularities],
            "kinks": [k.describe() for k in self.kinks],
            "formula": self.formula,
        }


# ---------------------------------------------------------------- distances

def singularity_distance(spec: ActivationSpec, z: complex) -> float:
    """Distance from ``z`` to the nearest declared singular locus (inf if none)."""
    return min((s.distance(z) for s in spec.singularities), default=math.inf)


def kink_distance(spec: ActivationSpec, z: complex) -> float:
    return min((k.distance(z) for k in spec.kinks), default=math.inf)


def exclusion_distance(spec: ActivationSpec, z: complex) -> float:
    """Distance to anything a finite-difference stencil must not straddle."""
    return min(singularity_distance(spec, z), kink_distance(spec, z))


def _nearest_singularity(spec: ActivationSpec, z: complex, kinds=None):
    best, best_d = None, math.inf
    for s in spec.singularities:
        if kinds is not None and s.kind not in kinds:
            continue
        d = s.distance(z)
        if d < best_d:
            best, best_d = s, d
    return best, best_d


# ---------------------------------------------------------------- public ops

def evaluate(spec: ActivationSpec, z: complex) -> complex:
    """sigma(z).  Raises near value singularities or on exponent overflow."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{spec.id}: non-finite input {z!r}")
    sing, d = _nearest_singularity(spec, z, VALUE_SINGULAR)
    if sing is not None and d <= SINGULAR_TOL:
        raise SingularityError(f"{spec.id} evaluated at singularity {sing.describe()}", sing)
    try:
        w = spec.fn(z)
    except (OverflowError, ZeroDivisionError, ValueError) as exc:
        near, dd = _nearest_singularity(spec, z)
        if near is not None and dd <= 1e-6:
            raise SingularityError(f"{spec.id} failed near {near.describe()}: {exc}", near) from exc
        raise ActivationOverflowError(f"{spec.id} overflowed at z = {z!r}: {exc}") from exc
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise ActivationOverflowError(f"{spec.id} produced non-finite value at z = {z!r}")
    return w


def partials(spec: ActivationSpec, z: complex) -> WirtingerJet:
    """Analytic jet of ``spec`` at ``z``."""
    z = complex(z)
    if not spec.differentiable or spec.jet is None:
        raise NonDifferentiableError(f"{spec.id} is not differentiable")
    sing, d = _nearest_singularity(spec, z)
    if sing is not None and d <= SINGULAR_TOL:
        raise SingularityError(f"{spec.id} differentiated at {sing.describe()}", sing)
    for k in spec.kinks:
        if k.distance(z) <= KINK_TOL:
            raise KinkError(f"{spec.id} differentiated on kink {k.describe()}", k)
    value = evaluate(spec, z)
    try:
        ux, uy, vx, vy = spec.jet(z)
    except (OverflowError, ZeroDivisionError, ValueError) as exc:
        raise ActivationOverflowError(f"{spec.id} partials failed at z = {z!r}: {exc}") from exc
    if not all(math.isfinite(p) for p in (ux, uy, vx, vy)):
        raise ActivationOverflowError(f"{spec.id} partials non-finite at z = {z!r}")
    return WirtingerJet(value, ux, uy, vx, vy)


def complex_derivative(spec: ActivationSpec, z: complex) -> complex:
    """sigma'(z) for holomorphic entries, i.e. dz of the analytic jet."""
    if not spec.holomorphic:
        raise NonDifferentiableError(f"{spec.id} has no complex derivative")
    return partials(spec, z).dz


def sigmoid_denominator(z: complex) -> complex:
    """``1 + e^{-z}``, whose zeros are the poles of the complex sigmoid and swish."""
    return 1 + cmath.exp(-z)


@dataclass(frozen=True)
class SuitabilityPoint:
    z: complex
    det: float
    exempt_x: bool  # ux = vx = 0, uy and vy nonzero
    exempt_y: bool  # uy = vy = 0, ux and vx nonzero
    suitable: bool


def suitability_report(spec: ActivationSpec | Callable, points: Iterable[complex],
                       tol: float = 1e-10) -> list[SuitabilityPoint]:
    """Evaluate ``D = ux vy - uy vx`` and the two exemption predicates per point.

    ``spec`` may also be any callable returning a :class:`WirtingerJet`,
    which lets tests probe fixtures outside the catalog.
    """
    jet_of = partial(partials, spec) if isinstance(spec, ActivationSpec) else spec
    out = []
    for z in points:
        j = jet_of(z)
        det = j.ux * j.vy - j.uy * j.vx
        zero = lambda t: abs(t) <= tol  # noqa: E731
        ex = zero(j.ux) and zero(j.vx) and not zero(j.uy) and not zero(j.vy)
        ey = zero(j.uy) and zero(j.vy) and not zero(j.ux) and not zero(j.vx)
        out.append(SuitabilityPoint(complex(z), det, ex, ey, not zero(det) or ex or ey))
    return out


# ---------------------------------------------------------------- builders

def _split(id_, f, df, *, kinks=(), bounded_on="unbounded", formula="", differentiable=True,
           piecewise_holomorphic=False, **params) -> ActivationSpec:
    f1 = partial(f, **params) if params else f
    df1 = partial(df, **params) if (params and df) else df

    def fn(z: complex) -> complex:
        return complex(f1(z.real), f1(z.imag))

    def jet(z: complex) -> Partials:
        return df1(z.real), 0.0, 0.0, df1(z.imag)

    loci = []
    for t in kinks:
        loci.append(Line(complex(t, 0), 1j))
        loci.append(Line(complex(0, t), 1 + 0j))
    return ActivationSpec(
        id=id_, params=tuple(params.items()), category="split-real-imaginary",
        differentiable=differentiable, holomorphic=False, bounded_on=bounded_on,
        kinks=tuple(loci), piecewise_holomorphic=piecewise_holomorphic, formula=formula, fn=fn,
        jet=jet if differentiable else None,
    )


def _amp_phase(id_, scale, scale_d, slope0, *, kinks=(), bounded_on="unbounded", formula="",
               series=None, **params) -> ActivationSpec:
    """``s(r) z`` with ``s = g(r)/r``.

    ``scale_d`` is ds/dr, ``slope0`` is g'(0) (the jet at the origin) and
    ``series`` optionally supplies ``(s, s')`` for small r where the closed
    forms cancel.
    """
    s_fn = partial(scale, **params)
    sd_fn = partial(scale_d, **params)

    def fn(z: complex) -> complex:
        r = modulus(z)
        if r == 0:
            return 0j
        s = series(r)[0] if (series and r < 1e-4) else s_fn(r)
        return complex(s * z.real, s * z.imag)

    def jet(z: complex) -> Partials:
        x, y = z.real, z.imag
        r = modulus(z)
        if r < 1e-150:
            g0 = slope0(**params)
            return g0, 0.0, 0.0, g0
        if series and r < 1e-4:
            s, sd = series(r)
        else:
            s, sd = s_fn(r), sd_fn(r)
        c = sd / r
        return s + c * x * x, c * x * y, c * x * y, s + c * y * y

    return ActivationSpec(
        id=id_, params=tuple(params.items()), category="amplitude-phase",
        differentiable=True, holomorphic=False, bounded_on=bounded_on,
        kinks=tuple(kinks), formula=formula, fn=fn, jet=jet,
    )


def _guarded(f, cap=True):
    def g(z: complex) -> complex:
        if cap and abs(z.real) > EXP_CAP:
            raise OverflowError(f"|Re z| = {abs(z.real):g} exceeds {EXP_CAP:g}")
        return f(z)
    return g


def _holo(id_, f, df, *, singularities=(), bounded_on="unbounded", formula="", cap=False,
          **params) -> ActivationSpec:
    f1, df1 = _guarded(f, cap), _guarded(df, cap)

    def jet(z: complex) -> Partials:
        d = df1(z)
        return d.real, -d.imag, d.imag, d.real

    return ActivationSpec(
        id=id_, params=tuple(params.items()), category="fully-complex",
        differentiable=True, holomorphic=True, bounded_on=bounded_on,
        singularities=tuple(singularities), formula=formula, fn=f1, jet=jet, derivative=df1,
    )


def _gated(id_, factor, kinks, formula, **params) -> ActivationSpec:
    """Piecewise-linear ``c(z) z`` with a region-dependent complex factor."""
    def fn(z: complex) -> complex:
        return factor(z) * z

    def jet(z: complex) -> Partials:
        c = complex(factor(z))
        return c.real, -c.imag, c.imag, c.real

    return ActivationSpec(
        id=id_, params=tuple(params.items()), category="fully-complex",
        differentiable=True, holomorphic=False, bounded_on="unbounded",
        kinks=tuple(kinks), piecewise_holomorphic=True, formula=formula, fn=fn, jet=jet,
    )


# ---------------------------------------------------------------- split family

def _split_step():
    # Locally constant, so CR holds trivially away from the axes.
    return _split("split_step", realfn.step, None, differentiable=False, piecewise_holomorphic=True,
                  kinks=(0.0,), bounded_on="Re, Im in {0, 1}",
                  formula="step(x) + i step(y), step(u) = 1 if u >= 0 else 0")


def _split_sigmoid():
    return _split("split_sigmoid", realfn.sigmoid, realfn.sigmoid_d,
                  bounded_on="Re, Im in (0, 1)", formula="1/(1+e^-x) + i/(1+e^-y)")


def _split_psigmoid(c1=1.0, c2=2.0):
    return _split("split_psigmoid", realfn.psigmoid, realfn.psigmoid_d, c1=float(c1), c2=float(c2),
                  bounded_on="Re, Im in (-c1, c1)", formula="2 c1/(1+e^(-c2 u)) - c1 per part")


def _split_tanh():
    return _split("split_tanh", realfn.tanh, realfn.tanh_d,
                  bounded_on="Re, Im in (-1, 1)", formula="tanh(x) + i tanh(y)")


def _split_stanh():
    return _split("split_stanh", realfn.stanh, realfn.stanh_d,
                  bounded_on="Re, Im in [-0.0716, 1.0181]",
                  formula="tanh(u)/(1 - (u-3) e^-u) per part")


def _split_hard_tanh():
    return _split("split_hard_tanh", realfn.hard_tanh, realfn.hard_tanh_d, kinks=(-1.0, 1.0),
                  bounded_on="Re, Im in [-1, 1]", formula="(|u+1| - |u-1|)/2 per part")


def _split_crelu():
    return _split("split_crelu", realfn.relu, realfn.relu_d, kinks=(0.0,),
                  bounded_on="unbounded", formula="max(x,0) + i max(y,0)")


def _split_qam(alpha=0.25):
    return _split("split_qam", realfn.qam, realfn.qam_d, alpha=float(alpha),
                  formula="u + alpha sin(pi u) per part")


def _split_elu(alpha=1.0):
    return _split("split_elu", realfn.elu, realfn.elu_d, kinks=(0.0,), alpha=float(alpha),
                  bounded_on="Re, Im >= -alpha",
                  formula="u if u > 0 else alpha (e^u - 1), per part")


def _split_mish():
    return _split("split_mish", realfn.mish, realfn.mish_d, bounded_on="Re, Im >= -0.3088",
                  formula="u tanh(log(1 + e^u)) per part")


def _split_softplus():
    return _split("split_softplus", realfn.softplus, realfn.softplus_d,
                  bounded_on="Re, Im > 0", formula="log(1 + e^u) per part")


def _split_swish(beta=1.0):
    return _split("split_swish", realfn.swish, realfn.swish_d, beta=float(beta),
                  formula="u sigmoid(beta u) per part")


# ---------------------------------------------------------------- amplitude-phase

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)


def _aptf():
    return _amp_phase(
        "aptf",
        lambda r: math.tanh(r) / r,
        lambda r: (realfn.sech2(r) * r - math.tanh(r)) / (r * r),
        lambda: 1.0,
        series=lambda r: (1 - r * r / 3 + 2 * r**4 / 15, -2 * r / 3 + 8 * r**3 / 15),
        bounded_on="|sigma| < 1", formula="tanh(|z|) z/|z|",
    )


def _apsf(a=1.0, b=1.0):
    a, b = float(a), float(b)

    def fn(z: complex) -> complex:
        s = b / (a * b + modulus(z))
        return complex(s * z.real, s * z.imag)

    def jet(z: complex) -> Partials:
        x, y = z.real, z.imag
        r = modulus(z)
        if r == 0:
            return 1 / a, 0.0, 0.0, 1 / a
        den = r * (a * b + r) ** 2
        ux = b * (y * y + a * b * r) / den
        uy = -b * x * y / den
        # u_y = v_x for every radial scaling s(|z|) z.
        vx = -b * x * y / den
        vy = b * (x * x + a * b * r) / den
        return ux, uy, vx, vy

    return ActivationSpec(
        id="apsf", params=(("a", a), ("b", b)), category="amplitude-phase",
        differentiable=True, holomorphic=False, bounded_on="|sigma| < b",
        formula="b z/(a b + |z|)", fn=fn, jet=jet,
    )


def _siglog():
    return _amp_phase("siglog", lambda r: 1.0 / (1.0 + r), lambda r: -1.0 / (1.0 + r) ** 2,
                      lambda: 1.0, bounded_on="|sigma| < 1", formula="z/(1 + |z|)")


def _modrelu(b=-0.7):
    b = float(b)

    def scale(r, b):
        return (r + b) / r if r + b >= 0 else 0.0

    def scale_d(r, b):
        return -b / (r * r) if r + b >= 0 else 0.0

    def slope0(b):
        return 0.0 if b < 0 else 1.0

    kinks = []
    if b < 0:
        kinks.append(Circle(0j, -b))
    elif b > 0:
        kinks.append(Point(0j))
    return _amp_phase("modrelu", scale, scale_d, slope0, kinks=kinks, b=b,
                      formula="max(|z| + b, 0) z/|z|")


def _cap_pls(a=1.0):
    def scale(r, a):
        return 1.0 if r < a else a / r

    def scale_d(r, a):
        return 0.0 if r < a else -a / (r * r)

    return _amp_phase("cap_pls", scale, scale_d, lambda a: 1.0, kinks=[Circle(0j, float(a))],
                      a=float(a), bounded_on="|sigma| <= a", formula="min(|z|, a) z/|z|")


def _cap_es():
    return _amp_phase(
        "cap_es",
        lambda r: -math.expm1(-r) / r,
        lambda r: (r * math.exp(-r) + math.expm1(-r)) / (r * r),
        lambda: 1.0,
        series=lambda r: (1 - r / 2 + r * r / 6 - r**3 / 24, -0.5 + r / 3 - r * r / 8),
        bounded_on="|sigma| < 1", formula="(1 - e^-|z|) z/|z|",
    )


def _cap_arctans():
    return _amp_phase(
        "cap_arctans",
        lambda r: math.atan(r) / r,
        lambda r: (r / (1 + r * r) - math.atan(r)) / (r * r),
        lambda: 1.0,
        series=lambda r: (1 - r * r / 3 + r**4 / 5, -2 * r / 3 + 4 * r**3 / 5),
        bounded_on="|sigma| < pi/2", formula="arctan(|z|) z/|z|",
    )


def _cap_erfa():
    k = _TWO_OVER_SQRT_PI
    return _amp_phase(
        "cap_erfa",
        lambda r: math.erf(r) / r,
        lambda r: (k * math.exp(-r * r) * r - math.erf(r)) / (r * r),
        lambda: k,
        series=lambda r: (k * (1 - r * r / 3 + r**4 / 10), k * (-2 * r / 3 + 2 * r**3 / 5)),
        bounded_on="|sigma| < 1", formula="erf(|z|) z/|z|",
    )


def _cap_softplus(a=1.0):
    def scale(r, a):
        return realfn.softplus(r - a) / r

    def scale_d(r, a):
        return (realfn.sigmoid(r - a) * r - realfn.softplus(r - a)) / (r * r)

    return _amp_phase("cap_softplus", scale, scale_d, lambda a: 0.0, kinks=[Point(0j)],
                      a=float(a), formula="log(1 + e^(|z| - a)) z/|z|")


def _cap_elu(alpha=1.0, b=-1.0):
    alpha, b = float(alpha), float(b)

    def mag(r, alpha, b):
        if r < -b:
            return r + b, 1.0
        e = math.exp(r + b)
        return alpha * (e - 1.0), alpha * e

    def scale(r, alpha, b):
        return mag(r, alpha, b)[0] / r

    def scale_d(r, alpha, b):
        m, dm = mag(r, alpha, b)
        return (dm * r - m) / (r * r)

    kinks = [Point(0j)] if b != 0 else []
    if b < 0:
        kinks.append(Circle(0j, -b))
    return _amp_phase("cap_elu", scale, scale_d, lambda alpha, b: 1.0 if b >= 0 else 0.0,
                      kinks=kinks, alpha=alpha, b=b,
                      formula="(|z|+b) z/|z| if |z| < -b else alpha (e^(|z|+b) - 1) z/|z|")


def _cap_swish(b=1.0):
    return _amp_phase(
        "cap_swish",
        lambda r, b: realfn.sigmoid(r - b),
        lambda r, b: realfn.sigmoid_d(r - b),
        lambda b: realfn.sigmoid(-b),
        b=float(b), formula="|z|/(1 + e^(-|z|+b)) z/|z|",
    )


# ---------------------------------------------------------------- fully complex

def _cardioid():
    def fn(z: complex) -> complex:
        if z == 0:
            return 0j
        return 0.5 * (1.0 + math.cos(arg(z))) * z

    def jet(z: complex) -> Partials:
        x, y = z.real, z.imag
        r = modulus(z)
        c, s = x / r, y / r
        ux = 0.5 + c - 0.5 * c**3
        uy = -0.5 * c * c * s
        vx = 0.5 * s**3
        vy = 0.5 + 0.5 * c**3
        return ux, uy, vx, vy

    return ActivationSpec(
        id="cardioid", params=(), category="fully-complex", differentiable=True,
        holomorphic=False, bounded_on="unbounded", kinks=(Point(0j),),
        formula="(1 + cos(arg z)) z / 2", fn=fn, jet=jet,
    )


def _sig(z: complex) -> complex:
    return 1 / (1 + cmath.exp(-z))


def _mish_ratio(z: complex) -> tuple[complex, complex]:
    # tanh(log s) = (s^2 - 1)/(s^2 + 1) for s = 1 + e^z; this form has no log branch cut.
    e = cmath.exp(z)
    s = 1 + e
    s2 = s * s
    return (s2 - 1) / (s2 + 1), 4 * s * e / (s2 + 1) ** 2


def _lat(kind, base, step):
    return SingularityDescriptor(kind, Lattice(complex(base), complex(step)))


def _cut(start, direction):
    return SingularityDescriptor("branch-cut", Ray(complex(start), complex(direction)))


def _pole(z):
    return SingularityDescriptor("pole", Point(complex(z)))


_PI = math.pi
_HALF_PI_I = complex(0, _PI / 2)


def _fc_tanh():
    return _holo("fc_tanh", cmath.tanh, lambda z: 1 / cmath.cosh(z) ** 2,
                 singularities=[_lat("pole", _HALF_PI_I, 1j * _PI)],
                 bounded_on="bounded on real axis only", formula="tanh(z)")


def _fc_sigmoid():
    return _holo("fc_sigmoid", _sig, lambda z: _sig(z) * (1 - _sig(z)), cap=True,
                 singularities=[_lat("pole", 1j * _PI, 2j * _PI)],
                 bounded_on="bounded on real axis only", formula="1/(1 + e^-z)")


def _fc_tan():
    return _holo("fc_tan", cmath.tan, lambda z: 1 + cmath.tan(z) ** 2,
                 singularities=[_lat("pole", _PI / 2, _PI)], formula="tan(z)")


def _fc_sin():
    return _holo("fc_sin", cmath.sin, cmath.cos, formula="sin(z)")


def _fc_sinh():
    return _holo("fc_sinh", cmath.sinh, cmath.cosh, formula="sinh(z)")


def _fc_exp():
    return _holo("fc_exp", cmath.exp, cmath.exp, cap=True, formula="e^z")


def _fc_arctan():
    return _holo("fc_arctan", cmath.atan, lambda z: 1 / (1 + z * z),
                 singularities=[_cut(1j, 1j), _cut(-1j, -1j), _pole(1j), _pole(-1j)],
                 formula="arctan(z), principal branch")


def _fc_arcsin():
    return _holo("fc_arcsin", cmath.asin, lambda z: 1 / cmath.sqrt(1 - z * z),
                 singularities=[_cut(1, 1), _cut(-1, -1)], formula="arcsin(z), principal branch")


def _fc_arccos():
    return _holo("fc_arccos", cmath.acos, lambda z: -1 / cmath.sqrt(1 - z * z),
                 singularities=[_cut(1, 1), _cut(-1, -1)], formula="arccos(z), principal branch")


def _fc_arctanh():
    return _holo("fc_arctanh", cmath.atanh, lambda z: 1 / (1 - z * z),
                 singularities=[_cut(1, 1), _cut(-1, -1), _pole(1), _pole(-1)],
                 formula="arctanh(z), principal branch")


def _fc_arcsinh():
    return _holo("fc_arcsinh", cmath.asinh, lambda z: 1 / cmath.sqrt(1 + z * z),
                 singularities=[_cut(1j, 1j), _cut(-1j, -1j)], formula="arcsinh(z), principal branch")


def _fc_swish():
    def d(z):
        s = _sig(z)
        return s + z * s * (1 - s)

    return _holo("fc_swish", lambda z: z * _sig(z), d, cap=True,
                 singularities=[_lat("pole", 1j * _PI, 2j * _PI)], formula="z/(1 + e^-z)")


def _fc_mish():
    def f(z):
        return z * _mish_ratio(z)[0]

    def d(z):
        t, dt = _mish_ratio(z)
        return t + z * dt

    return _holo("fc_mish", f, d, cap=True,
                 singularities=[_lat("pole", cmath.log(-1 + 1j), 2j * _PI),
                                _lat("pole", cmath.log(-1 - 1j), 2j * _PI)],
                 formula="z tanh(log(1 + e^z))")


def _closed_q1(z: complex) -> bool:
    # arg z in [0, pi/2], origin excluded
    return z != 0 and z.real >= 0 and z.imag >= 0


_Q1_EDGES = (Ray(0j, 1 + 0j), Ray(0j, 1j))


def _zrelu():
    return _gated("zrelu", lambda z: 1.0 if _closed_q1(z) else 0.0, _Q1_EDGES,
                  "z if arg z in [0, pi/2] else 0")


def _z3relu():
    return _gated("z3relu", lambda z: 1.0 if (z.real > 0 or z.imag > 0) else 0.0,
                  (Ray(0j, -1 + 0j), Ray(0j, -1j)), "z if Re z > 0 or Im z > 0 else 0")


def _zprelu(alpha=0.1 + 0j):
    alpha = complex(alpha)
    return _gated("zprelu", lambda z: 1.0 if _closed_q1(z) else alpha, _Q1_EDGES,
                  "z if arg z in [0, pi/2] else alpha z", alpha=alpha)


def _z3prelu(alpha1=0.1 + 0j, alpha2=0.1 + 0j, alpha3=0.1 + 0j):
    a1, a2, a3 = complex(alpha1), complex(alpha2), complex(alpha3)

    def factor(z: complex) -> complex:
        # Quadrant test in the [0, 2 pi) convention: [0, pi/2], (pi/2, pi],
        # (pi, 3pi/2], (3pi/2, 2pi).  The origin gets factor 1 (output 0 anyway).
        x, y = z.real, z.imag
        if z == 0 or (x >= 0 and y >= 0):
            return 1.0
        if y >= 0:
            return a1
        if x <= 0:
            return a2
        return a3

    return _gated("z3prelu", factor, (REAL_AXIS, IMAG_AXIS),
                  "z, a1 z, a2 z, a3 z on successive quadrants", alpha1=a1, alpha2=a2, alpha3=a3)


# ---------------------------------------------------------------- registry

_BUILDERS: dict[str, Callable[..., ActivationSpec]] = {
    "split_step": _split_step,
    "split_sigmoid": _split_sigmoid,
    "split_psigmoid": _split_psigmoid,
    "split_tanh": _split_tanh,
    "split_stanh": _split_stanh,
    "split_hard_tanh": _split_hard_tanh,
    "split_crelu": _split_crelu,
    "split_qam": _split_qam,
    "split_elu": _split_elu,
    "split_mish": _split_mish,
    "split_softplus": _split_softplus,
    "split_swish": _split_swish,
    "aptf": _aptf,
    "apsf": _apsf,
    "siglog": _siglog,
    "modrelu": _modrelu,
    "cap_pls": _cap_pls,
    "cap_es": _cap_es,
    "cap_arctans": _cap_arctans,
    "cap_erfa": _cap_erfa,
    "cap_softplus": _cap_softplus,
    "cap_elu": _cap_elu,
    "cap_swish": _cap_swish,
    "cardioid": _cardioid,
    "fc_tanh": _fc_tanh,
    "fc_sigmoid": _fc_sigmoid,
    "fc_tan": _fc_tan,
    "fc_sin": _fc_sin,
    "fc_arctan": _fc_arctan,
    "fc_arcsin": _fc_arcsin,
    "fc_arccos": _fc_arccos,
    "fc_sinh": _fc_sinh,
    "fc_arctanh": _fc_arctanh,
    "fc_arcsinh": _fc_arcsinh,
    "fc_exp": _fc_exp,
    "fc_swish": _fc_swish,
    "fc_mish": _fc_mish,
    "zrelu": _zrelu,
    "z3relu": _z3relu,
    "zprelu": _zprelu,
    "z3prelu": _z3prelu,
}

CATALOG_IDS: tuple[str, ...] = tuple(_BUILDERS)

_DEFAULTS: dict[str, ActivationSpec] = {}


def get(id_: str, **params) -> ActivationSpec:
    """Catalog entry by id, with optional parameter overrides."""
    try:
        builder = _BUILDERS[id_]
    except KeyError:
        raise KeyError(f"unknown activation id {id_!r}") from None
    if params:
        return builder(**params)
    if id_ not in _DEFAULTS:
        _DEFAULTS[id_] = builder()
    return _DEFAULTS[id_]


def catalog(category: str | None = None) -> list[ActivationSpec]:
    specs = [get(i) for i in CATALOG_IDS]
    if category is not None:
        specs = [s for s in specs if s.category == category]
    return specs


def from_record(rec: dict) -> ActivationSpec:
    """Inverse of :meth:`ActivationSpec.record` (only id and params are used)."""
    params = {k: complex(*v) if isinstance(v, list) else v for k, v in rec.get("params", {}).items()}
    return get(rec["id"], **params)
