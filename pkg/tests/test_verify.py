import json
import math

import numpy as np
import pytest

from cvnn import activations as act
from cvnn.cplx import conj
from cvnn.network import Layer, Network, forward, init
from cvnn.verify import (
    BOUND_CLAIMS, CR_GRID, FAIL, PASS, SKIP, THRESHOLDS, CheckReport, GridSpec, bounds_check, coverage_check,
    cr_scan, equivalence_check, grad_check, grad_matrix, holomorphy_classification, liouville_probe, run_suite,
    stanh_extrema, summary_table, symmetry_check,
)


def test_thresholds_table():
    assert THRESHOLDS["cr_holomorphic"] == 1e-5
    assert THRESHOLDS["grad_rel"] == 1e-4 and THRESHOLDS["grad_abs"] == 1e-7
    assert THRESHOLDS["equiv_holomorphic"] == 1e-10 and THRESHOLDS["equiv_split"] == 1e-12
    assert THRESHOLDS["exclusion"] == 0.05


def test_grid_parse_and_echo():
    g = GridSpec.parse("-3:3:-2.5:2.5:64x32")
    assert (g.re_min, g.re_max, g.im_min, g.im_max, g.nx, g.ny) == (-3, 3, -2.5, 2.5, 64, 32)
    assert GridSpec.parse(str(g)) == g
    nodes = list(g.nodes())
    assert len(nodes) == 64 * 32 and nodes[0] == (0, 0, complex(-3, -2.5))
    for bad in ("1:0:0:1:2x2", "0:1:0:1:0x2", "0:1:0:1", "a:b:c:d:1x1"):
        with pytest.raises(ValueError):
            GridSpec.parse(bad)


def test_report_needs_witness_on_failure():
    with pytest.raises(ValueError):
        CheckReport("x", "y", FAIL, 1.0)
    r = CheckReport("x", "y", FAIL, 1.0, [1 + 2j])
    assert json.loads(json.dumps(r.record()))["witness"] == [[1.0, 2.0]]


def test_cr_scan_examples():
    assert cr_scan(act.get("fc_exp"), CR_GRID).status == PASS
    r = cr_scan(act.get("split_tanh"), CR_GRID)
    assert r.status == FAIL and r.witness
    # at 1+0i the residual is |sech^2(1) - 1|
    one = cr_scan(act.get("split_tanh"), GridSpec(0.999, 1.001, -0.001, 0.001, 3, 3))
    assert one.worst == pytest.approx(1 - 1 / math.cosh(1) ** 2, abs=1e-3)
    r = cr_scan(conj, GridSpec(-2, 2, -2, 2, 9, 9))
    assert r.status == FAIL and r.worst == pytest.approx(2.0, abs=1e-8)


def test_cr_scan_respects_exclusions():
    r = cr_scan(act.get("fc_tanh"), GridSpec(-0.1, 0.1, 1.5, 1.65, 9, 9))
    assert r.skipped > 0 and r.status == PASS


def test_holomorphy_classification_all_entries():
    for spec in act.catalog():
        rep = holomorphy_classification(spec, CR_GRID)
        assert rep.status == PASS, (spec.id, rep.worst)


def test_liouville_examples():
    r = liouville_probe(act.get("fc_exp"), [1, 5, 10])
    assert r.status == PASS
    assert r.details["max_abs"] == pytest.approx([math.e, math.exp(5), math.exp(10)], rel=1e-9)
    r = liouville_probe(act.get("split_tanh"), [1, 5, 10])
    assert r.status == PASS and max(r.details["max_abs"]) <= math.sqrt(2)
    r = liouville_probe(act.get("fc_tanh"), [2])
    assert r.status == PASS and "singularity" in r.details["reason"]


def test_liouville_flags_a_bounded_holomorphic_claim():
    fake = act.ActivationSpec("bounded_fake", (), "fully-complex", True, True, "|sigma| <= 1",
                              fn=lambda z: 0.5 + 0j, jet=lambda z: (0.0, 0.0, 0.0, 0.0))
    r = liouville_probe(fake, [1, 2, 4])
    assert r.status == FAIL and r.witness


def test_grad_check_examples():
    net = init([2, 2, 1], "split_sigmoid", 1.0, 3)
    x = np.array([0.2 + 0.1j, -0.4 + 0.3j])
    assert grad_check(net, "split", (x, np.array([0.3 + 0.3j]))).status == PASS
    o = forward(net, x).output
    r = grad_check(net, "partial_derivatives", (x, o))
    assert r.status == PASS and r.worst < 1e-12  # analytic side is exactly 0
    near = Network([Layer(np.array([[1 + 0j]]), np.array([0j]), act.get("fc_tanh"))], 1)
    r = grad_check(near, "cr_simplified", (np.array([complex(0.02, math.pi / 2)]), np.array([0j])))
    assert r.status == SKIP and r.skipped == 1


def test_equivalence_examples():
    rng = np.random.default_rng(1)
    x, d = np.array([0.3 + 0.4j]), np.array([0.1 - 0.2j])
    net = init([1, 1], "fc_tanh", 0.8, 2)
    r = equivalence_check(net, (x, d), ["complex_derivative", "partial_derivatives", "cr_simplified"])
    assert r.status == PASS and r.worst <= 1e-10
    split = init([2, 2, 1], "split_tanh", 0.8, 2)
    xs = rng.normal(size=2) + 1j * rng.normal(size=2)
    r = equivalence_check(split, (xs, d), ["partial_derivatives", "split", "cr_simplified"])
    assert r.status == PASS and r.details["tolerance"] == 1e-12
    assert "cr_simplified" in r.details["incompatible"]


def test_symmetry_examples():
    assert symmetry_check(act.get("split_tanh"), "line-re").status == PASS
    assert symmetry_check(act.get("aptf"), "point").status == PASS
    assert symmetry_check(act.get("cap_es"), "rotation").status == PASS
    assert symmetry_check(act.get("modrelu"), "phase-preserve").status == PASS
    with pytest.raises(ValueError):
        symmetry_check(act.get("split_tanh"), "rotation")
    with pytest.raises(ValueError):
        symmetry_check(act.get("fc_tanh"), "point")


def test_symmetry_detects_a_violation():
    # Re sigma depends on the sign of Im z, so reflecting in the real axis changes it
    fake = act.ActivationSpec("tilted", (), "split-real-imaginary", True, False, "unbounded",
                              fn=lambda z: complex(z.real + 0.1 * z.imag, z.imag),
                              jet=lambda z: (1.0, 0.1, 0.0, 1.0))
    r = symmetry_check(fake, "line-re", samples=10)
    assert r.status == FAIL and r.witness


@pytest.mark.parametrize("spec_id", sorted(BOUND_CLAIMS))
def test_bounds_claims(spec_id):
    r = bounds_check(act.get(spec_id))
    assert r.status == PASS, r.details
    assert r.details["unresolved_in_double"] == 0


def test_bounds_apsf_uses_b():
    r = bounds_check(act.get("apsf", a=0.5, b=3.0), samples=2000)
    assert r.status == PASS and r.details["hi"] == 3.0


def test_bounds_check_catches_a_violation():
    BOUND_CLAIMS["__loose"] = BOUND_CLAIMS["aptf"]
    try:
        fake = act.ActivationSpec("__loose", (), "amplitude-phase", True, False, "",
                                  fn=lambda z: 1.5 * z / (1 + abs(z)) if z else 0j)
        r = bounds_check(fake, samples=500)
        assert r.status == FAIL and r.witness
    finally:
        del BOUND_CLAIMS["__loose"]


def test_stanh_extrema():
    e = stanh_extrema()
    assert e["max_value"] == pytest.approx(1.01802, abs=1e-3) and e["max_x"] == pytest.approx(4.06725, abs=1e-2)
    assert e["min_value"] == pytest.approx(-0.0715838, abs=1e-3) and e["min_x"] == pytest.approx(-0.67288, abs=1e-2)


def test_grad_matrix_cells():
    cells = grad_matrix([act.get("fc_tanh"), act.get("split_tanh"), act.get("split_step")])
    subjects = {c.subject for c in cells}
    assert subjects == {"fc_tanh/complex_derivative", "fc_tanh/partial_derivatives", "fc_tanh/cr_simplified",
                        "split_tanh/partial_derivatives", "split_tanh/split"}
    assert all(c.status == PASS for c in cells)


def test_coverage_detects_gaps():
    r = coverage_check([], ["split_tanh"])
    assert r.status == FAIL and "grad_cell" in r.witness[0]
    reps = run_suite("coverage", ["split_tanh", "split_step"])
    assert reps[-1].check == "coverage" and reps[-1].status == PASS


def test_run_suite_is_deterministic():
    a = [r.record() for r in run_suite("all", ["fc_tanh", "aptf", "split_sigmoid"], seed=3)]
    b = [r.record() for r in run_suite("all", ["fc_tanh", "aptf", "split_sigmoid"], seed=3)]
    assert json.dumps(a) == json.dumps(b)
    assert all(r["status"] != FAIL for r in a)


def test_summary_table():
    reps = run_suite("cr", ["fc_exp", "split_tanh"])
    text = summary_table(reps)
    assert "fc_exp" in text and text.splitlines()[-1].startswith("2 checks, 2 pass")
