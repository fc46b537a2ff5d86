"""Numeric property checks: holomorphy, growth, gradients, symmetry, bounds.

Every check returns a :class:`CheckReport`.  Pass/fail thresholds live in
:data:`THRESHOLDS` and nowhere else.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

import numpy as np
from scipy.special import log_ndtr

from . import activations as act
from . import realfn
from .activations import ActivationSpec
from .cplx import arg, cr_residual, wirtinger_fd, wrap_angle
from .errors import (
    ActivationOverflowError,
    AssumptionViolationError,
    CVNNError,
    KinkError,
    OracleError,
    SingularityError,
)
from .network import Network, forward, init, loss
from .train import backward, compatible, incompatibility, ALGORITHMS

THRESHOLDS: dict[str, float] = {
    "cr_holomorphic": 1e-5,  # max CR residual for "holomorphic on the window"
    "cr_witness": 1e-3,  # residual that counts as a CR violation witness
    "cr_fd_step": 1e-6,
    "grad_rel": 1e-4,
    "grad_abs": 1e-7,
    "grad_fd_step": 1e-6,
    "equiv_holomorphic": 1e-10,
    "equiv_split": 1e-12,
    "symmetry": 1e-10,
    "rotation": 1e-12,
    "exclusion": 0.05,
}

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class GridSpec:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError(f"empty grid window {self}")
        if self.nx < 1 or self.ny < 1:
            raise ValueError(f"grid needs nx, ny >= 1, got {self.nx}x{self.ny}")

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Parse ``remin:remax:immin:immax:NXxNY``."""
        m = re.fullmatch(r"\s*([^:]+):([^:]+):([^:]+):([^:]+):(\d+)[xX](\d+)\s*", text)
        if not m:
            raise ValueError(f"grid must look like remin:remax:immin:immax:NXxNY, got {text!r}")
        a, b, c, d = (float(m.group(i)) for i in range(1, 5))
        return cls(a, b, c, d, int(m.group(5)), int(m.group(6)))

    def __str__(self) -> str:
        return f"{self.re_min!r}:{self.re_max!r}:{self.im_min!r}:{self.im_max!r}:{self.nx}x{self.ny}"

    def xs(self) -> np.ndarray:
        return np.linspace(self.re_min, self.re_max, self.nx) if self.nx > 1 else np.array([0.5 * (self.re_min + self.re_max)])

    def ys(self) -> np.ndarray:
        return np.linspace(self.im_min, self.im_max, self.ny) if self.ny > 1 else np.array([0.5 * (self.im_min + self.im_max)])

    def nodes(self):
        """Yield ``(row, col, z)`` with rows running along the imaginary axis."""
        xs, ys = self.xs(), self.ys()
        for j, y in enumerate(ys):
            for i, x in enumerate(xs):
                yield j, i, complex(float(x), float(y))


@dataclass
class CheckReport:
    check: str
    subject: str
    status: str
    worst: float
    witness: list = field(default_factory=list)
    samples: int = 0
    skipped: int = 0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIP):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError(f"{self.check}/{self.subject}: a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def record(self) -> dict:
        return {"check": self.check, "subject": self.subject, "status": self.status,
                "worst": _plain(self.worst), "witness": _plain(self.witness), "samples": self.samples,
                "skipped": self.skipped, "details": _plain(self.details)}


def _plain(v: Any) -> Any:
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, np.generic):
        return _plain(v.item())
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


def _name(f) -> str:
    return f.id if isinstance(f, ActivationSpec) else getattr(f, "__name__", "fixture")


def _disc_points(rng: np.random.Generator, n: int, radius: float) -> list[complex]:
    out = []
    while len(out) < n:
        u, v = rng.uniform(-1.0, 1.0, size=2)
        if u * u + v * v <= 1.0:
            out.append(complex(radius * u, radius * v))
    return out


# ---------------------------------------------------------------- holomorphy

def cr_scan(f: ActivationSpec | Callable[[complex], complex], grid: GridSpec,
            exclusion_radius: float = THRESHOLDS["exclusion"],
            fd_step: float = THRESHOLDS["cr_fd_step"]) -> CheckReport:
    """Finite-difference Cauchy-Riemann residuals over a grid.

    Passes iff the largest residual is below the holomorphy threshold.  Grid
    nodes within ``exclusion_radius`` of a declared singularity or kink are
    skipped, as are nodes where the stencil cannot be evaluated.
    """
    worst, where, n, skipped = -1.0, None, 0, 0
    for _, _, z in grid.nodes():
        if isinstance(f, ActivationSpec) and act.exclusion_distance(f, z) <= exclusion_radius:
            skipped += 1
            continue
        try:
            jet = wirtinger_fd(f, z, fd_step)
        except (OracleError, CVNNError):
            skipped += 1
            continue
        r = max(cr_residual(jet))
        n += 1
        if r > worst:
            worst, where = r, z
    if n == 0:
        return CheckReport("cr_scan", _name(f), SKIP, math.nan, samples=0, skipped=skipped)
    status = PASS if worst < THRESHOLDS["cr_holomorphic"] else FAIL
    return CheckReport("cr_scan", _name(f), status, worst, [where], n, skipped,
                       {"grid": str(grid), "fd_step": fd_step})


def holomorphy_classification(spec: ActivationSpec, grid: GridSpec,
                              exclusion_radius: float = THRESHOLDS["exclusion"]) -> CheckReport:
    """Does the CR scan agree with the entry's holomorphic flag?

    Holomorphic and piecewise-holomorphic entries must scan clean; all others
    must show a residual above the witness threshold.
    """
    scan = cr_scan(spec, grid, exclusion_radius)
    expect_clean = spec.holomorphic or spec.piecewise_holomorphic
    if expect_clean:
        ok = scan.status == PASS
        expectation = "residual < %g" % THRESHOLDS["cr_holomorphic"]
    else:
        ok = scan.worst > THRESHOLDS["cr_witness"]
        expectation = "witness residual > %g" % THRESHOLDS["cr_witness"]
    return CheckReport("cr_classification", spec.id, PASS if ok else FAIL, scan.worst, scan.witness,
                       scan.samples, scan.skipped,
                       {"holomorphic_flag": spec.holomorphic, "expectation": expectation,
                        "scan_status": scan.status, "grid": str(grid)})


def liouville_probe(spec: ActivationSpec, radii: Sequence[float], points: int = 720) -> CheckReport:
    """Max |sigma| on circles; a holomorphic entry must grow or have a singularity inside."""
    radii = sorted(float(r) for r in radii)
    maxima, skipped = [], 0
    worst_pt = None
    for r in radii:
        best = 0.0
        for k in range(points):
            z = cmath.rect(r, 2 * math.pi * k / points)
            try:
                v = abs(act.evaluate(spec, z))
            except (SingularityError, ActivationOverflowError):
                skipped += 1
                continue
            if v > best:
                best, worst_pt = v, z
        maxima.append(best)
    sing_inside = act.singularity_distance(spec, 0j) <= radii[-1]
    growing = all(b > a for a, b in zip(maxima, maxima[1:])) and len(maxima) > 1
    if not spec.holomorphic:
        ok, reason = True, "not holomorphic: Liouville places no constraint"
    elif sing_inside:
        ok, reason = True, "declared singularity inside the largest circle"
    elif growing:
        ok, reason = True, "max |sigma| grows with the radius"
    else:
        ok, reason = False, "holomorphic, no singularity inside and no growth"
    return CheckReport("liouville_probe", spec.id, PASS if ok else FAIL, max(maxima),
                       [] if ok else [worst_pt], len(radii) * points - skipped, skipped,
                       {"radii": radii, "max_abs": maxima, "reason": reason})


# ---------------------------------------------------------------- gradients

def fd_gradient(net: Network, x, d, step: float = THRESHOLDS["grad_fd_step"]) -> np.ndarray:
    """Central differences of the loss, assembled as dL/dw_re + i dL/dw_im."""
    out = []
    for layer in net.layers:
        for arr in (layer.weights, layer.bias):
            for idx in np.ndindex(arr.shape):
                parts = []
                for dv in (step, 1j * step):
                    old = arr[idx]
                    arr[idx] = old + dv
                    lp = loss(forward(net, x), d)
                    arr[idx] = old - dv
                    lm = loss(forward(net, x), d)
                    arr[idx] = old
                    parts.append((lp - lm) / (2 * step))
                out.append(complex(parts[0], parts[1]))
    return np.array(out)


def _trace_clear(net: Network, trace, radius: float) -> bool:
    for layer, z in zip(net.layers, trace.pre):
        for zk in z:
            if act.exclusion_distance(layer.activation, complex(zk)) <= radius:
                return False
    return True


def grad_check(net: Network, algorithm: str, sample, fd_step: float = THRESHOLDS["grad_fd_step"],
               exclusion: float = THRESHOLDS["exclusion"]) -> CheckReport:
    """Analytic gradient of ``algorithm`` against finite differences."""
    x, d = sample
    subject = f"{'-'.join(l.activation.id for l in net.layers)}/{algorithm}"
    why = [incompatibility(l.activation, algorithm) for l in net.layers]
    if any(why):
        raise ValueError(f"{algorithm} incompatible: {[w for w in why if w]}")
    try:
        trace = forward(net, x)
        if not _trace_clear(net, trace, exclusion):
            raise SingularityError("trace point inside exclusion radius")
        analytic = backward(net, trace, d, algorithm).flat()
        numeric = fd_gradient(net, x, d, fd_step)
    except (SingularityError, KinkError, ActivationOverflowError) as exc:
        return CheckReport("grad_check", subject, SKIP, math.nan, samples=0, skipped=1,
                           details={"reason": str(exc)})
    a = np.concatenate([analytic.real, analytic.imag])
    f = np.concatenate([numeric.real, numeric.imag])
    err = np.abs(a - f)
    tol = np.maximum(THRESHOLDS["grad_rel"] * np.abs(f), THRESHOLDS["grad_abs"])
    ratio = err / tol
    k = int(np.argmax(ratio))
    status = PASS if np.all(err <= tol) else FAIL
    return CheckReport("grad_check", subject, status, float(err[k]), [complex(x[0])] if status == FAIL else [],
                       samples=a.size, details={"worst_param": k, "analytic": float(a[k]),
                                                "numeric": float(f[k]), "worst_ratio": float(ratio[k])})


def equivalence_check(net: Network, sample, algorithms: Sequence[str]) -> CheckReport:
    """Pairwise max deviation between gradients from several algorithms."""
    x, d = sample
    usable = [a for a in algorithms if compatible(net, a)]
    rejected = {a: next(w for w in (incompatibility(l.activation, a) for l in net.layers) if w)
                for a in algorithms if a not in usable}
    subject = "-".join(l.activation.id for l in net.layers)
    if len(usable) < 2:
        return CheckReport("equivalence", subject, SKIP, math.nan, details={"incompatible": rejected})
    try:
        trace = forward(net, x)
        grads = {a: backward(net, trace, d, a) for a in usable}
    except (SingularityError, KinkError, ActivationOverflowError, AssumptionViolationError) as exc:
        return CheckReport("equivalence", subject, SKIP, math.nan, skipped=1,
                           details={"reason": str(exc), "incompatible": rejected})
    split_pair = set(usable) <= {"split", "partial_derivatives"}
    tol = THRESHOLDS["equiv_split"] if split_pair else THRESHOLDS["equiv_holomorphic"]
    worst, pair = 0.0, None
    for i, a in enumerate(usable):
        for b in usable[i + 1:]:
            dev = grads[a].max_abs_diff(grads[b])
            if dev >= worst:
                worst, pair = dev, (a, b)
    status = PASS if worst <= tol else FAIL
    return CheckReport("equivalence", subject, status, worst, [complex(x[0])] if status == FAIL else [],
                       samples=len(usable), details={"compared": usable, "worst_pair": pair,
                                                     "tolerance": tol, "incompatible": rejected})


# ---------------------------------------------------------------- symmetry

SYMMETRY_PROPERTIES = ("line-re", "line-im", "point", "rotation", "phase-preserve")

PHASE_PRESERVING = ("aptf", "apsf", "siglog", "cap_es", "cap_arctans", "cap_erfa", "cap_pls",
                    "cap_softplus", "cap_swish", "modrelu")


def symmetry_applicable(spec: ActivationSpec, prop: str) -> bool:
    if prop in ("line-re", "line-im"):
        return spec.category == "split-real-imaginary"
    if prop in ("point", "rotation"):
        return spec.category == "amplitude-phase"
    if prop == "phase-preserve":
        return spec.id in PHASE_PRESERVING
    raise ValueError(f"unknown symmetry property {prop!r}")


def symmetry_check(spec: ActivationSpec, prop: str, samples: int = 50, seed: int = 0,
                   radius: float = 3.0) -> CheckReport:
    if not symmetry_applicable(spec, prop):
        raise ValueError(f"property {prop!r} does not apply to {spec.id} ({spec.category})")
    rng = np.random.default_rng(seed)
    pts = _disc_points(rng, samples, radius)
    thetas = rng.uniform(-math.pi, math.pi, size=samples)
    tol = THRESHOLDS["rotation"] if prop == "rotation" else THRESHOLDS["symmetry"]
    ev = lambda z: act.evaluate(spec, z)  # noqa: E731
    worst, where, used = 0.0, None, 0
    for z, th in zip(pts, thetas):
        a, b = z.real, z.imag
        if prop == "line-re":
            v = abs(ev(complex(a, b)).real - ev(complex(a, -b)).real)
        elif prop == "line-im":
            v = abs(ev(complex(a, b)).imag - ev(complex(-a, b)).imag)
        elif prop == "point":
            v = abs(ev(-z) + ev(z))
        elif prop == "rotation":
            rot = cmath.exp(1j * th)
            v = abs(ev(rot * z) - rot * ev(z))
        else:
            w = ev(z)
            if w == 0 or z == 0:  # argument undefined (e.g. modrelu dead zone)
                continue
            v = abs(wrap_angle(arg(w) - arg(z)))
        used += 1
        if v >= worst:
            worst, where = v, z
    status = PASS if worst < tol else FAIL
    return CheckReport(f"symmetry:{prop}", spec.id, status, worst, [where] if status == FAIL else [],
                       used, samples - used, {"tolerance": tol, "seed": seed, "radius": radius})


# ---------------------------------------------------------------- bounds

@dataclass(frozen=True)
class BoundClaim:
    """``lo < value < hi`` (or closed) for each real part, or for the modulus.

    ``log_gap`` returns the log of the exact distance from the value to the
    nearer bound, computed without cancellation or underflow.  Where the
    float value rounds onto a strict bound, a finite log gap certifies
    strictness.
    """

    target: str  # "parts" or "modulus"
    lo: float
    hi: float
    strict: bool
    log_gap: Callable[[float], float] | None = None


BOUND_CLAIMS: dict[str, BoundClaim] = {
    "split_sigmoid": BoundClaim("parts", 0.0, 1.0, True, lambda t: -realfn.softplus(abs(t))),
    "split_tanh": BoundClaim("parts", -1.0, 1.0, True, lambda t: math.log(2.0) - realfn.softplus(2.0 * abs(t))),
    "split_hard_tanh": BoundClaim("parts", -1.0, 1.0, False),
    "aptf": BoundClaim("modulus", 0.0, 1.0, False),
    "apsf": BoundClaim("modulus", 0.0, 1.0, True),  # hi is the b parameter; see bounds_check
    "siglog": BoundClaim("modulus", 0.0, 1.0, True),
    "cap_es": BoundClaim("modulus", 0.0, 1.0, True, lambda r: -r),
    "cap_arctans": BoundClaim("modulus", 0.0, math.pi / 2, True),
    "cap_erfa": BoundClaim("modulus", 0.0, 1.0, True, lambda r: float(log_ndtr(-math.sqrt(2.0) * r)) + math.log(2.0)),
}

# |w| is itself a rounded quantity: scaling z by a factor and taking hypot
# can land a few ulps above a bound the exact value stays below.
MODULUS_ROUNDING_ULPS = 4


def bounds_check(spec: ActivationSpec, samples: int = 10_000, radius: float = 50.0, seed: int = 0) -> CheckReport:
    """Verify the declared bound of ``spec`` on seeded samples in a disc.

    Real parts are compared exactly.  A modulus within
    ``MODULUS_ROUNDING_ULPS`` ulps of its bound counts as lying on it.  A
    value on a strict bound passes only if the exact gap is positive; when
    no log gap is known it is counted as ``unresolved_in_double``.
    """
    claim = BOUND_CLAIMS.get(spec.id)
    if claim is None:
        raise ValueError(f"no boundedness claim recorded for {spec.id}")
    lo, hi = claim.lo, claim.hi
    if spec.id == "apsf":
        hi = spec.param_dict["b"]
    slack = MODULUS_ROUNDING_ULPS * math.ulp(hi) if claim.target == "modulus" else 0.0
    rng = np.random.default_rng(seed)
    pts = _disc_points(rng, samples, radius)
    worst, where, bad = -math.inf, None, None
    unresolved, on_bound = 0, 0

    def within(val: float, arg_: float) -> bool:
        nonlocal unresolved, on_bound
        if lo < val < hi - slack:
            return True
        if val < lo or val > hi + slack:
            return False
        if val == lo and claim.target == "modulus":
            return True  # the modulus bound below is always closed
        on_bound += 1
        if not claim.strict:
            return True
        if claim.log_gap is not None:
            return math.isfinite(claim.log_gap(arg_))
        unresolved += 1
        return True

    for z in pts:
        w = act.evaluate(spec, z)
        items = [(w.real, z.real), (w.imag, z.imag)] if claim.target == "parts" else [(abs(w), abs(z))]
        for val, a in items:
            excess = max(val - hi, lo - val)
            if excess > worst:
                worst, where = excess, z
            if not within(val, a) and bad is None:
                bad = z
    status = PASS if bad is None else FAIL
    return CheckReport("bounds", spec.id, status, worst, [bad] if bad is not None else [], samples,
                       details={"target": claim.target, "lo": lo, "hi": hi, "strict": claim.strict,
                                "radius": radius, "rounding_slack": slack, "on_bound": on_bound,
                                "unresolved_in_double": unresolved})


def stanh_extrema(lo: float = -10.0, hi: float = 10.0) -> dict[str, float]:
    """Locate the max and min of the split-STanh real part on [lo, hi]."""
    from scipy.optimize import minimize_scalar

    xs = np.linspace(lo, hi, 20001)
    ys = np.array([realfn.stanh(float(x)) for x in xs])
    out = {}
    for key, sign, k in (("max", -1.0, int(np.argmax(ys))), ("min", 1.0, int(np.argmin(ys)))):
        a, b = xs[max(k - 1, 0)], xs[min(k + 1, len(xs) - 1)]
        res = minimize_scalar(lambda t: sign * realfn.stanh(t), bounds=(a, b), method="bounded",
                              options={"xatol": 1e-10})
        out[f"{key}_x"] = float(res.x)
        out[f"{key}_value"] = float(realfn.stanh(res.x))
    return out


# ---------------------------------------------------------------- suites

CR_GRID = GridSpec(-2.0, 2.0, -2.0, 2.0, 41, 41)
LIOUVILLE_RADII = (1.0, 2.0, 5.0, 10.0)


def net_for(spec: ActivationSpec, seed: int, radius: float = 1.0) -> Network:
    """Test network shape: 1-1 for fully-complex entries, 2-2-1 otherwise."""
    widths = [1, 1] if spec.category == "fully-complex" else [2, 2, 1]
    return init(widths, spec, radius, seed)


def random_sample(rng: np.random.Generator, n_in: int, n_out: int) -> tuple[np.ndarray, np.ndarray]:
    return np.array(_disc_points(rng, n_in, 1.0)), np.array(_disc_points(rng, n_out, 1.0))


def grad_matrix(specs: Iterable[ActivationSpec], samples: int = 3, seed: int = 0,
                max_tries: int = 40) -> list[CheckReport]:
    """One report per compatible (activation, algorithm) cell.

    A cell passes when ``samples`` clean samples (trace off every exclusion
    zone) all pass; skipped draws are retried up to ``max_tries`` times.
    """
    reports = []
    for spec in specs:
        if not spec.differentiable:
            continue
        for algo in ALGORITHMS:
            if incompatibility(spec, algo):
                continue
            rng = np.random.default_rng(seed)
            done, tries, worst, failed, skipped = 0, 0, 0.0, None, 0
            while done < samples and tries < max_tries:
                tries += 1
                net = net_for(spec, int(rng.integers(2**31)))
                x, d = random_sample(rng, net.input_width, net.output_width)
                rep = grad_check(net, algo, (x, d))
                if rep.status == SKIP:
                    skipped += 1
                    continue
                done += 1
                worst = max(worst, rep.details["worst_ratio"])
                if rep.status == FAIL and failed is None:
                    failed = rep
            if failed is not None:
                status, witness = FAIL, failed.witness
            elif done < samples:
                status, witness = SKIP, []
            else:
                status, witness = PASS, []
            reports.append(CheckReport("grad_cell", f"{spec.id}/{algo}", status, worst, witness, done, skipped,
                                       {"widths": net_for(spec, 0).widths, "worst_ratio": worst}))
    return reports


def coverage_check(reports: Sequence[CheckReport], ids: Sequence[str] = act.CATALOG_IDS) -> CheckReport:
    """Every catalog entry needs a CR scan, a growth probe and (if differentiable) a gradient cell."""
    have: dict[str, set[str]] = {}
    for r in reports:
        spec_id = r.subject.split("/")[0]
        have.setdefault(spec_id, set()).add(r.check)
    missing = []
    for i in ids:
        need = {"cr_classification", "liouville_probe"}
        if act.get(i).differentiable:
            need.add("grad_cell")
        lacking = need - have.get(i, set())
        if lacking:
            missing.append(f"{i}: {sorted(lacking)}")
    return CheckReport("coverage", "catalog", FAIL if missing else PASS, float(len(missing)), missing,
                       len(ids), details={"missing": missing})


SUITES = ("cr", "grad", "equiv", "symmetry", "bounds", "coverage", "all")


def run_suite(suite: str, ids: Sequence[str] | None = None, seed: int = 0) -> list[CheckReport]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    specs = [act.get(i) for i in (ids or act.CATALOG_IDS)]
    out: list[CheckReport] = []
    if suite in ("cr", "all", "coverage"):
        out += [holomorphy_classification(s, CR_GRID) for s in specs]
    if suite in ("bounds", "all", "coverage"):
        out += [liouville_probe(s, LIOUVILLE_RADII) for s in specs]
        if suite != "coverage":
            out += [bounds_check(s, seed=seed) for s in specs if s.id in BOUND_CLAIMS]
    if suite in ("grad", "all", "coverage"):
        out += grad_matrix(specs, seed=seed)
    if suite in ("equiv", "all"):
        rng = np.random.default_rng(seed)
        for s in specs:
            algos = [a for a in ALGORITHMS if not incompatibility(s, a)]
            if len(algos) < 2:
                continue
            for k in range(20):
                net = init([2, 2, 1], s, 0.5, int(rng.integers(2**31)))
                out.append(equivalence_check(net, random_sample(rng, 2, 1), algos))
    if suite in ("symmetry", "all"):
        for s in specs:
            for p in SYMMETRY_PROPERTIES:
                if symmetry_applicable(s, p):
                    out.append(symmetry_check(s, p, seed=seed))
    if suite in ("all", "coverage"):
        out.append(coverage_check(out, [s.id for s in specs]))
    return out


def summary_table(reports: Sequence[CheckReport]) -> str:
    rows = [("check", "subject", "status", "worst", "samples", "skipped")]
    for r in reports:
        rows.append((r.check, r.subject, r.status, f"{r.worst:.3g}" if isinstance(r.worst, float) else str(r.worst),
                     str(r.samples), str(r.skipped)))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    n_fail = sum(r.status == FAIL for r in reports)
    n_skip = sum(r.status == SKIP for r in reports)
    lines.append(f"{len(reports)} checks, {len(reports) - n_fail - n_skip} pass, {n_fail} fail, {n_skip} skip")
    return "\n".join(lines)
