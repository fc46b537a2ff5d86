import cmath
import math

import numpy as np
import pytest

from cvnn.cplx import (
    ARG_UNDEFINED, WirtingerJet, arg, conj, cr_residual, from_polar, modulus, polar, wirtinger_fd, wrap_angle,
)
from cvnn.errors import OracleError


@pytest.mark.parametrize("z, r, phi", [
    (1 + 0j, 1.0, 0.0),
    (1j, 1.0, math.pi / 2),
    (-1 - 1j, math.sqrt(2), -3 * math.pi / 4),
    (-1 + 0j, 1.0, math.pi),
    (-1j, 1.0, -math.pi / 2),
    (complex(-1, -0.0), 1.0, math.pi),  # negative real axis belongs to +pi whatever the zero's sign
])
def test_polar_branch_table(z, r, phi):
    m, a = polar(z)
    assert m == pytest.approx(r, abs=1e-15)
    assert a == pytest.approx(phi, abs=1e-15)


def test_arg_of_origin_is_sentinel():
    assert math.isnan(arg(0j))
    assert math.isnan(ARG_UNDEFINED)
    assert polar(0j)[0] == 0.0


def test_arg_matches_cmath_off_the_cut():
    rng = np.random.default_rng(3)
    for x, y in rng.uniform(-5, 5, size=(200, 2)):
        assert arg(complex(x, y)) == pytest.approx(cmath.phase(complex(x, y)), abs=1e-15)


def test_modulus_and_conjugate_product():
    rng = np.random.default_rng(4)
    for x, y in rng.uniform(-3, 3, size=(100, 2)):
        z = complex(x, y)
        r2 = x * x + y * y
        assert abs((z * conj(z)).real - r2) <= 4 * math.ulp(r2)
        assert (z * conj(z)).imag == 0.0
        assert modulus(z) == pytest.approx(math.sqrt(r2), rel=1e-15)


def test_de_moivre_and_conjugate_of_product():
    rng = np.random.default_rng(5)
    for _ in range(100):
        z1, z2 = (from_polar(*p) for p in zip(rng.uniform(0.01, 2, 2), rng.uniform(-math.pi, math.pi, 2)))
        m, a = polar(z1 * z2)
        assert m == pytest.approx(modulus(z1) * modulus(z2), rel=1e-12)
        assert abs(wrap_angle(a - arg(z1) - arg(z2))) < 1e-12
        assert conj(z1 * z2) == pytest.approx(conj(z1) * conj(z2), abs=1e-15)


def test_wrap_angle_range():
    for a in (-7.0, -math.pi, 0.0, math.pi, 9.5):
        w = wrap_angle(a)
        assert -math.pi <= w < math.pi
        assert math.isclose(math.cos(w), math.cos(a), abs_tol=1e-12)


def test_jet_wirtinger_assembly():
    jet = WirtingerJet(0j, 1.0, 2.0, 3.0, 4.0)
    assert jet.dz == complex(0.5 * (1 + 4), 0.5 * (3 - 2))
    assert jet.dzbar == complex(0.5 * (1 - 4), 0.5 * (3 + 2))
    # conj of d/dz f equals d/dzbar of conj f
    assert conj(jet.dz) == jet.conjugate().dzbar


def test_fd_identity_and_conjugate():
    j = wirtinger_fd(lambda z: z, 3 + 2j)
    assert abs(j.dz - 1) < 1e-8 and abs(j.dzbar) < 1e-8
    j = wirtinger_fd(conj, 1 + 1j)
    assert abs(j.dz) < 1e-8 and abs(j.dzbar - 1) < 1e-8


def test_fd_square():
    j = wirtinger_fd(lambda z: z * z, 1 + 1j)
    assert abs(j.dz - (2 + 2j)) < 1e-6
    assert abs(j.dzbar) < 1e-6
    assert max(cr_residual(j)) < 1e-6


def test_cr_residual_non_holomorphic():
    r1, r2 = cr_residual(wirtinger_fd(conj, 0.3 - 0.7j))
    assert r1 == pytest.approx(2.0, abs=1e-8) and r2 < 1e-8
    r1, _ = cr_residual(wirtinger_fd(lambda z: complex(z.real, 0), 2 + 1j))
    assert r1 == pytest.approx(1.0, abs=1e-8)


def test_product_rule():
    rng = np.random.default_rng(11)
    for x, y in rng.uniform(-2, 2, size=(20, 2)):
        z = complex(x, y)
        jf = wirtinger_fd(lambda w: w * w, z)
        jg = wirtinger_fd(conj, z)
        jfg = wirtinger_fd(lambda w: w * w * conj(w), z)
        assert abs(jfg.dz - (jf.dz * jg.value + jf.value * jg.dz)) < 1e-6
        assert abs(jfg.dzbar - (jf.dzbar * jg.value + jf.value * jg.dzbar)) < 1e-6


def test_fd_oracle_names_bad_stencil_point():
    def f(z):
        if z.real > 0:
            return complex(math.inf, 0)
        return z

    with pytest.raises(OracleError) as info:
        wirtinger_fd(f, 0j, 1e-3)
    assert "z+h" in str(info.value)
    assert info.value.point == pytest.approx(1e-3)


def test_fd_rejects_bad_step():
    with pytest.raises(ValueError):
        wirtinger_fd(lambda z: z, 0j, 0.0)
