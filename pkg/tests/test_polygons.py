import pytest

from thetafuchs import polygons as pg
from thetafuchs.modgroup import INFINITY, V_TABLE, mobius_real
from thetafuchs.numerics import NumericsError


def test_make_parabolic_translation():
    m = pg.make_parabolic(INFINITY, 0.0, 3.0)
    assert m == (1.0, 3.0, 0.0, 1.0)


def test_make_parabolic_finite_fix():
    m = pg.make_parabolic(0.0, -1.0, 0.5)
    a, b, c, d = m
    assert abs((a + d) ** 2 - 4 * (a * d - b * c)) < 1e-12
    assert abs(mobius_real(m, -1.0) - 0.5) < 1e-12
    assert abs(mobius_real(m, 0.0)) < 1e-12


def test_default_polygon_matches_level4_generators():
    poly = pg.default_polygon(2)
    assert poly.n_sides == 10
    named = {p.name: p.matrix for p in poly.pairings}
    for idx, v in enumerate(V_TABLE):
        got = named[f"V{idx}"]
        target = (v.a, v.b, v.c, v.d)
        flipped = tuple(-x for x in target)
        assert (all(abs(g - t) < 1e-9 for g, t in zip(got, target))
                or all(abs(g - t) < 1e-9 for g, t in zip(got, flipped)))


def test_polygon_cycles_and_genus():
    poly = pg.default_polygon(2)
    cycles = poly.cycles()
    assert len(cycles) == 6
    assert pg.genus_of(poly) == 0
    doubled = pg.double_polygon(poly)
    assert doubled.n_sides == 18
    assert len(doubled.cycles()) == 6
    assert doubled.side_pair_count() == 9
    assert pg.genus_of(poly, doubled=True) == 2


def test_genus_range():
    for g in range(1, 6):
        poly = pg.default_polygon(g)
        assert poly.n_sides == 4 * g + 2
        assert pg.genus_of(poly, doubled=True) == g
        assert pg.double_polygon(poly).n_sides == 8 * g + 2


def test_free_parameter_count():
    # 4g+2 boundary reals, one eaten by the closure relation and three by
    # the global real Mobius normalization: 4g - 2 free parameters
    for g in (1, 2, 3):
        boundary_data = (2 * g + 2) + 2 * g
        assert boundary_data - 1 - 3 == 4 * g - 2


def test_custom_polygon_closure():
    poly = pg.build_polygon([-0.7, 0.0, 1.1, 2.4, 3.0, INFINITY],
                            [0.4, 1.8, 2.6, 3.4])
    assert poly.n_sides == 10
    assert pg.genus_of(poly, doubled=True) == 2


def test_degenerate_ordering_rejected():
    with pytest.raises(NumericsError):
        pg.build_polygon([-0.5, 0.0, 0.5, 1.0, 1.5, INFINITY],
                         [0.5, 1.2, 1.6, 2.0])  # eps1 touches omega3


def test_pairings_are_parabolic_and_map_sides():
    poly = pg.default_polygon(3)
    for pr in poly.pairings:
        a, b, c, d = pr.matrix
        assert abs((a + d) ** 2 - 4 * (a * d - b * c)) < 1e-12
