import json
import math
from pathlib import Path

import numpy as np
import pytest

from cvnn import activations as act
from cvnn import render
from cvnn.verify import GridSpec

GOLDEN = json.loads((Path(__file__).parent / "golden" / "render_hashes.json").read_text())


def _hls_oracle(h, l):
    # textbook HSL -> RGB at full saturation
    q = l + min(l, 1 - l)
    p = 2 * l - q

    def channel(t):
        t %= 1.0
        if t < 1 / 6:
            return p + (q - p) * 6 * t
        if t < 1 / 2:
            return q
        if t < 2 / 3:
            return p + (q - p) * (2 / 3 - t) * 6
        return p

    return tuple(int(round(255 * channel(h + k))) for k in (1 / 3, 0.0, -1 / 3))


@pytest.mark.parametrize("w", [1 + 0j, 1j, -2 - 0.5j, 0.3 - 4j, -0.1 + 0j, 50 + 50j])
def test_color_map_against_oracle(w):
    h = (math.atan2(w.imag, w.real) / (2 * math.pi)) % 1.0
    l = abs(w) / (1 + abs(w))
    got = render.color_of(w)
    assert all(abs(a - b) <= 1 for a, b in zip(got, _hls_oracle(h, l)))


def test_color_extremes():
    assert render.color_of(0j) == (0, 0, 0)
    assert render.color_of(None) == render.WHITE
    assert render.color_of(complex(math.inf, 0)) == render.WHITE
    assert render.color_of(1 + 0j)[0] == 255  # arg 0 is red


def test_identity_center_black_and_hue_winds_once():
    g = GridSpec(-1, 1, -1, 1, 65, 65)
    img = render.domain_color(lambda z: z, g)
    assert img.pixel(32, 32) == (0, 0, 0)
    # walk the boundary counter-clockwise and accumulate hue changes
    a = img.array().astype(float) / 255
    ring = [(64, i) for i in range(65)] + [(j, 64) for j in range(63, -1, -1)] + \
           [(0, i) for i in range(63, -1, -1)] + [(j, 0) for j in range(1, 64)]
    import colorsys

    hues = [colorsys.rgb_to_hls(*a[r, c])[0] for r, c in ring]
    total = sum(((h2 - h1 + 0.5) % 1.0) - 0.5 for h1, h2 in zip(hues, hues[1:] + hues[:1]))
    assert total == pytest.approx(1.0, abs=1e-6)


def test_top_row_is_im_max():
    img = render.domain_color(lambda z: z, GridSpec(-1, 1, -1, 1, 3, 3))
    top_mid, bottom_mid = img.pixel(0, 1), img.pixel(2, 1)
    assert top_mid == render.color_of(1j) and bottom_mid == render.color_of(-1j)


def test_fixture_zeros_and_pole():
    img = render.domain_color("z4m1-over-z2", render.FIXTURE_GRID)
    assert img.sha256() == GOLDEN["fixture z4m1-over-z2, -2:2:-2:2:256x256, arg-only"]
    dark, light = render.count_regions(img)
    assert (dark, light) == (4, 1)
    # the near-black spots sit at the fourth roots of unity
    from scipy import ndimage

    lab, n = ndimage.label(render.lightness(img) <= 0.1)
    xs, ys = render.FIXTURE_GRID.xs(), render.FIXTURE_GRID.ys()[::-1]
    centres = sorted(
        (round(float(np.mean(xs[np.nonzero(lab == k)[1]])), 1), round(float(np.mean(ys[np.nonzero(lab == k)[0]])), 1))
        for k in range(1, n + 1))
    assert centres == [(-1.0, 0.0), (0.0, -1.0), (0.0, 1.0), (1.0, 0.0)]


def test_fixture_pole_exactly_on_a_node_is_white():
    img = render.domain_color("z4m1-over-z2", GridSpec(-1, 1, -1, 1, 5, 5))
    assert img.pixel(2, 2) == render.WHITE


def test_aptf_golden():
    img = render.domain_color(act.get("aptf"), GridSpec.parse("-3:3:-3:3:256x256"))
    assert img.sha256() == GOLDEN["aptf, -3:3:-3:3:256x256, arg-only"]


def test_determinism_and_singular_points():
    g = GridSpec(-1, 1, 0.5, 2.5, 33, 33)
    a = render.domain_color("fc_tanh", g)
    b = render.domain_color(act.get("fc_tanh"), g)
    assert a.pixels == b.pixels
    # the grid passes within reach of i pi/2 but never on it; a pole on a node is white
    g2 = GridSpec(-1, 1, 0, math.pi, 3, 3)
    assert render.domain_color("fc_tanh", g2).pixel(1, 1) == render.WHITE


@pytest.mark.parametrize("shading", render.SHADINGS)
def test_shadings_keep_zeros_black(shading):
    img = render.domain_color(lambda z: z, GridSpec(-1, 1, -1, 1, 9, 9), shading)
    assert img.pixel(4, 4) == (0, 0, 0)
    with pytest.raises(ValueError):
        render.domain_color(lambda z: z, GridSpec(-1, 1, -1, 1, 9, 9), "plasma")


def test_rings_darken_by_log_modulus():
    plain = render.color_of(1.5 + 0j)
    ringed = render.color_of(1.5 + 0j, "log-abs-rings")
    assert sum(ringed) < sum(plain)
    # each ring starts dark at a power of two and brightens towards the next one
    base = 2 / 3
    assert render.color_of(2 + 0j, "log-abs-rings") == _hls_oracle(0.0, base * (1 - render.RING_DEPTH))
    assert sum(render.color_of(3.9 + 0j, "log-abs-rings")) > sum(render.color_of(2.1 + 0j, "log-abs-rings"))


def test_ppm_round_trip(tmp_path):
    img = render.domain_color(lambda z: z * z, GridSpec(-1, 1, -1, 1, 7, 5))
    p = tmp_path / "a.ppm"
    img.write(p)
    data = p.read_bytes()
    assert data.startswith(b"P6\n7 5\n255\n") and len(data) == len(b"P6\n7 5\n255\n") + 7 * 5 * 3
    assert render.read_ppm(p) == img
    with pytest.raises(ValueError):
        render.ImageBuffer(2, 2, b"\x00" * 11)


def test_surface_export_values():
    g = GridSpec(0, 2, 0, 1, 3, 2)  # nodes x in {0,1,2}, y in {0,1}
    re = render.surface_export(lambda z: z * z, g, "re")
    im = render.surface_export(lambda z: z * z, g, "im")
    assert re[1, 2] == 3.0 and im[1, 2] == 4.0
    ab = render.surface_export(act.get("split_sigmoid"), GridSpec(-5, 5, -5, 5, 21, 21), "abs")
    assert np.all(ab <= math.sqrt(2))
    ar = render.surface_export(lambda z: z, GridSpec(-1, 1, -1, 1, 3, 3), "arg")
    assert math.isnan(ar[1, 1]) and ar[1, 2] == 0.0
    with pytest.raises(ValueError):
        render.surface_export(lambda z: z, g, "phase")


def test_surface_parts_reconstruct_values():
    spec = act.get("fc_tanh")
    g = GridSpec(-2, 2, -1, 1, 9, 7)
    re = render.surface_export(spec, g, "re")
    im = render.surface_export(spec, g, "im")
    for j, i, z in g.nodes():
        assert complex(re[j, i], im[j, i]) == act.evaluate(spec, z)


def test_csv_round_trip(tmp_path):
    g = GridSpec(-1, 1, -1, 1, 5, 3)
    vals = render.surface_export(lambda z: z / 3, g, "arg")
    p = tmp_path / "s.csv"
    render.write_csv(p, vals, g, "arg")
    lines = p.read_text().splitlines()
    assert lines[0] == f"grid,{g}" and lines[1] == "part,arg" and "NA" in lines[3]
    g2, part, back = render.read_csv(p)
    assert g2 == g and part == "arg"
    assert np.array_equal(np.isnan(back), np.isnan(vals))
    assert np.array_equal(back[~np.isnan(back)], vals[~np.isnan(vals)])
