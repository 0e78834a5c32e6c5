import math

import pytest

from satgeom import kernel
from satgeom import projgeom as pg
from satgeom import saturate, verify
from satgeom.errors import BadParams, NotSaturating, SizeLimit
from satgeom.gftower import build_tower, field_spec

GF4 = field_spec(2, 2)


# ---------- the certifier -------------------------------------------------------

def test_whole_space_has_radius_zero():
    pts = pg.enumerate_points(2, GF4)
    cert = verify.saturation_radius(pts, 2, GF4)
    assert cert.radius == 0
    assert cert.witness_uncovered is None


def test_baer_subplane_radius_one():
    from satgeom import subgeom as sg

    tower = build_tower(2, 1, 2)
    f = sg.subgeometry_through_frame(pg.standard_frame(2), tower)
    cert = verify.saturation_radius(f.points, 2, GF4)
    assert cert.radius == 1
    assert cert.witness_uncovered is not None
    # the witness really is uncovered at level 0
    assert cert.witness_uncovered not in set(f.points)


def test_constructed_set_pg38():
    s = saturate.build_saturating_set(3, 2, 2)
    cert = verify.saturation_radius(s.points, 3, s.gf)
    assert cert.radius == 2
    # witness uncovered at level 1: not on any line through two set points
    w = cert.witness_uncovered
    cov = kernel.cover_level(list(s.points), 3, s.gf, 1)
    assert cov[pg.point_index(w, s.gf)] == 0


def test_monotone_coverage():
    s = saturate.build_saturating_set(3, 2, 2)
    prev = None
    for t in range(3):
        cov = kernel.cover_level(list(s.points), 3, s.gf, t)
        if prev is not None:
            assert all(b >= a for a, b in zip(prev, cov))
        prev = cov


def test_not_saturating():
    with pytest.raises(NotSaturating):
        verify.saturation_radius([(1, 0, 0)], 2, GF4, max_rho=0)


def test_size_limit():
    gf8 = field_spec(2, 3)
    with pytest.raises(SizeLimit):
        verify.saturation_radius([(1,) + (0,) * 9], 9, gf8, cap=10**4)


def test_certificate_serialization():
    s = saturate.build_saturating_set(2, 1, 2)
    cert = verify.saturation_radius(s.points, 2, s.gf)
    doc = cert.to_dict()
    assert doc["radius"] == 1
    assert isinstance(doc["witness"], list)
    assert doc["sizes"]["1"] == pg.theta(2, 4)


def test_saturates_outside_whole_space_vacuous():
    full = pg.span(pg.standard_frame(2)[:3], GF4)
    assert verify.saturates_outside([(1, 0, 0)], full, 0, 2, GF4)


# ---------- bounds ----------------------------------------------------------------

def test_lower_bound_values():
    assert verify.lower_bound(3, 2, 8) == pytest.approx(3 / math.e * 2 + 1, abs=1e-12)
    assert verify.lower_bound(3, 2, 8) == pytest.approx(3.2072766, abs=1e-6)
    assert verify.lower_bound(2, 1, 4) == pytest.approx(2 / math.e * 2 + 0.5, abs=1e-12)
    assert verify.lower_bound(2, 1, 4) == pytest.approx(1.9715178, abs=1e-6)
    for q in (2, 4, 9, 64):
        assert verify.lower_bound(1, 1, q) == pytest.approx(2 / math.e + 0.5, abs=1e-12)


def test_size_pj_values():
    assert [verify.size_pj(5, 2, 2, j) for j in (1, 2, 3)] == [8, 21, 25]
    assert verify.size_total(5, 2, 2) == 54 == 48 + 12 - 6
    for qs in (2, 3, 4, 7):
        assert verify.size_pj(2, 1, qs, 2) == 2 * qs - 1
    assert verify.size_p1_prime(2, 1, 2) == 0
    assert verify.size_p1_prime(3, 2, 2) == 0
    assert verify.size_p1_prime(4, 2, 2) == 2
    assert verify.size_p1_prime(5, 2, 2) == 4


def test_main_bound_values():
    assert verify.main_bound(4, 2, 2) == 26
    assert verify.main_bound(3, 2, 2) == 9
    for qs in (2, 3, 4, 5):
        assert verify.main_bound(2, 1, qs) == 3 * qs - 1
    assert verify.main_bound(5, 2, 2) == 27  # delegation to the baseline
    assert verify.main_bound(4, 3, 2) == 14
    assert verify.main_bound(3, 2, 3) == 15


def test_main_bound_plane_formula():
    # n = rho + 1 gives n(n+1)/2 * q' - n(n-1)/2
    for n in (2, 3, 4, 5):
        rho = n - 1
        for qs in (2, 3, 4):
            want = n * (n + 1) // 2 * qs - n * (n - 1) // 2
            assert verify.main_bound(n, rho, qs) == want


def test_simple_bound_values():
    assert verify.simple_bound(3, 2, 2) == 18
    with pytest.raises(BadParams):
        verify.simple_bound(3, 1, 2)


def test_simple_bound_dominates_main():
    for qs in (2, 3, 4, 5):
        for n in range(3, 13):
            for rho in range(2, n):
                if (n + 1) % (rho + 1) == 0:
                    continue
                assert verify.simple_bound(n, rho, qs) >= verify.main_bound(n, rho, qs)


def test_coefficient_sanity():
    # quadratic coefficient caps from the closed-form bound
    for rho in range(1, 13):
        cap = rho * (2 * rho + 1) / 3
        for j in range(1, rho):
            assert verify.a_tilde(rho, j) <= cap
        for n in range(rho + 1, 3 * rho + 4):
            if (n + 1) % (rho + 1) == 0:
                continue
            for j in range(1, verify.ell(n, rho)):
                assert verify.a_bar(n, rho, j) <= verify.a_tilde(rho, j)


def test_constructed_sets_respect_bounds():
    for n, rho, qs in [(2, 1, 2), (2, 1, 3), (3, 2, 2), (4, 2, 2), (4, 3, 2)]:
        s = saturate.build_saturating_set(n, rho, qs)
        q = qs ** (rho + 1)
        assert len(s.points) == verify.main_bound(n, rho, qs)
        assert verify.lower_bound(n, rho, q) < len(s.points)
        if rho > 1:
            assert len(s.points) <= verify.simple_bound(n, rho, qs)


def test_bad_params():
    with pytest.raises(BadParams):
        verify.main_bound(2, 2, 2)
    with pytest.raises(BadParams):
        verify.size_pj(3, 2, 2, 5)
    with pytest.raises(BadParams):
        verify.trivial_bound(4, 2, 8)
