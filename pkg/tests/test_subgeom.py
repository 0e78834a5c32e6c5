import itertools
import random

import pytest

from satgeom import projgeom as pg
from satgeom import subgeom as sg
from satgeom import verify
from satgeom.errors import BadConfiguration, BadIncidence
from satgeom.gftower import build_tower, field_spec

T42 = build_tower(2, 1, 2)  # GF(4) over GF(2)
T93 = build_tower(3, 1, 2)  # GF(9) over GF(3)
T82 = build_tower(2, 1, 3)  # GF(8) over GF(2)


def fano():
    return sg.subgeometry_through_frame(pg.standard_frame(2), T42)


# ---------- construction through a frame -------------------------------------

def test_fano_subplane_is_subfield_points():
    f = fano()
    gf = T42.big
    oracle = sorted(
        p for p in pg.enumerate_points(2, gf) if all(c in (0, 1) for c in p)
    )
    assert list(f.points) == oracle
    assert len(f.points) == 7


def test_point_count_any_frame():
    rng = random.Random(11)
    gf = T42.big
    pts = pg.enumerate_points(2, gf)
    built = 0
    while built < 10:
        cand = rng.sample(pts, 4)
        if not pg.is_frame(cand, 2, gf):
            continue
        s = sg.subgeometry_through_frame(cand, T42)
        assert len(s.points) == 7
        built += 1


def _random_frames_from(points, dim, gf, rng, count):
    out = []
    while len(out) < count:
        cand = rng.sample(points, dim + 2)
        if pg.is_frame(cand, dim, gf):
            out.append(cand)
    return out


@pytest.mark.parametrize(
    "tower,n", [(T42, 2), (T93, 2), (T82, 3)], ids=["PG(2,4)", "PG(2,9)", "PG(3,8)"]
)
def test_uniqueness_through_frames(tower, n):
    # frames sampled from one subgeometry's point set regenerate it exactly
    rng = random.Random(n * 1000 + tower.big.q)
    base = sg.subgeometry_through_frame(pg.standard_frame(n), tower)
    for cand in _random_frames_from(list(base.points), n, tower.big, rng, 67):
        again = sg.subgeometry_through_frame(cand, tower)
        assert again.points == base.points


# ---------- affine parts ------------------------------------------------------

def test_affine_part_m1():
    c = sg.subgeometry_through_frame([(0, 1)], T42) if False else None
    # 0-dimensional hyperplane subgeometry: the single point (0,1)
    from satgeom.ylines import _point_subgeometry

    c = _point_subgeometry((0, 1), T42)
    pts = sg.affine_part_points(c, (1, 0), (1, 1))
    assert sorted(pts) == [(1, 0), (1, 1)]


def test_affine_part_contains_p():
    f = fano()
    trace = sg.subgeometry_through_frame(
        [p for p in f.points if p[0] == 0], T42
    )
    pts = sg.affine_part_points(trace, (1, 0, 0), (1, 1, 1))
    assert (1, 0, 0) in pts
    assert len(pts) == 4


def test_affine_part_m2_matches_fano():
    f = fano()
    trace = sg.subgeometry_through_frame([p for p in f.points if p[0] == 0], T42)
    pts = sg.affine_part_points(trace, (1, 0, 0), (1, 1, 1))
    assert sorted(pts) == sorted(p for p in f.points if p[0] != 0)


def test_affine_part_bad_configuration():
    f = fano()
    trace = sg.subgeometry_through_frame([p for p in f.points if p[0] == 0], T42)
    with pytest.raises(BadConfiguration):
        sg.affine_part_points(trace, (0, 1, 0), (1, 1, 1))  # p on the span
    gf = T42.big
    alpha = T42.alpha
    # the line through these two meets X0=0 in (0,1,inv(alpha)), off the subgeometry
    with pytest.raises(BadConfiguration):
        sg.affine_part_points(trace, (1, 0, 0), (1, alpha, 1))


# ---------- extension by a subline --------------------------------------------

def _subline_through(tower, p1, p2, xpt):
    return sg.subgeometry_through_frame([xpt, p1, p2], tower)


def test_extend_by_subline_regenerates_fano():
    f = fano()
    gf = T42.big
    trace = sg.subgeometry_through_frame([p for p in f.points if p[0] == 0], T42)
    x = pg.meet(pg.span([(1, 0, 0), (1, 1, 1)], gf), trace.span, gf)
    sub = _subline_through(T42, (1, 0, 0), (1, 1, 1), pg.normalize(x.rows[0], gf))
    ext = sg.extend_by_subline(trace, sub)
    assert ext.points == f.points


def test_extend_contains_generators():
    gf = T82.big
    base = sg.subgeometry_through_frame(
        [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 1, 1, 1)], T82
    )
    p, q = (1, 0, 0, 0), (1, 1, 1, 1)
    x = pg.meet(pg.span([p, q], gf), base.span, gf)
    sub = _subline_through(T82, p, q, pg.normalize(x.rows[0], gf))
    ext = sg.extend_by_subline(base, sub)
    assert base.pset <= ext.pset
    assert sub.pset <= ext.pset
    assert len(ext.points) == pg.theta(3, 2)


def test_extend_point_count_dim2():
    f = fano()
    assert len(f.points) == pg.theta(2, 2) == 7


def test_extend_bad_incidence():
    f = fano()
    gf = T42.big
    trace = sg.subgeometry_through_frame([p for p in f.points if p[0] == 0], T42)
    inside = sg.subgeometry_through_frame(
        [(0, 0, 1), (0, 1, 0), (0, 1, 1)], T42
    )  # subline inside the trace's span
    with pytest.raises(BadIncidence):
        sg.extend_by_subline(trace, inside)


def test_affine_part_equals_extension_randomized():
    # affine part plus the base subgeometry equals the extended subgeometry
    rng = random.Random(99)
    for tower, n in [(T42, 2), (T82, 3)]:
        gf = tower.big
        base = sg.subgeometry_through_frame(
            [p for p in pg.standard_frame(n) if p[0] == 0] + [(0,) + (1,) * n], tower
        )
        affine = [p for p in pg.enumerate_points(n, gf) if p[0] != 0]
        done = 0
        while done < 50:
            p1, p2 = rng.sample(affine, 2)
            x = pg.meet(pg.span([p1, p2], gf), base.span, gf)
            xpt = pg.normalize(x.rows[0], gf)
            if xpt not in base.pset:
                continue
            part = sg.affine_part_points(base, p1, p2)
            sub = _subline_through(tower, p1, p2, xpt)
            ext = sg.extend_by_subline(base, sub)
            assert set(part) | base.pset == ext.pset
            done += 1


# ---------- hyperplane traces ---------------------------------------------------

def test_hyperplane_trace_classification_pg24():
    # exhaust all 21 lines of PG(2,4) against one Fano subplane
    f = fano()
    gf = T42.big
    hits = []
    for a in pg.enumerate_points(2, gf):  # lines of PG(2,4) via duality
        line = pg.nullspace([a], gf, 3)
        h = pg.Subspace(2, line)
        cnt = sum(1 for p in f.points if pg.contains_point(h, p, gf))
        ok = sg.hyperplane_trace_is_max_subgeometry(f, h)
        assert cnt in (1, 3)
        assert ok == (cnt == 3)
        hits.append(ok)
    assert sum(hits) == 7  # the Fano subplane has 7 lines


def test_trace_true_for_extended_subframe():
    f = fano()
    gf = T42.big
    h = pg.span([(0, 0, 1), (0, 1, 0)], gf)
    assert sg.hyperplane_trace_is_max_subgeometry(f, h)


def test_trace_count_through_codim2_sub():
    # hyperplanes through a fixed point of the subplane giving a full trace: q'+1
    f = fano()
    gf = T42.big
    fixed = (1, 0, 0)
    cnt = 0
    for a in pg.enumerate_points(2, gf):
        line = pg.Subspace(2, pg.nullspace([a], gf, 3))
        if not pg.contains_point(line, fixed, gf):
            continue
        if sg.hyperplane_trace_is_max_subgeometry(f, line):
            cnt += 1
    assert cnt == 3  # q' + 1


# ---------- saturation of full subgeometries -----------------------------------

@pytest.mark.parametrize(
    "tower,n,rho",
    [(T42, 2, 1), (T93, 2, 1), (T82, 3, 2)],
    ids=["baer-PG(2,4)", "baer-PG(2,9)", "PG(3,8)"],
)
def test_full_subgeometry_saturates(tower, n, rho):
    s = sg.subgeometry_through_frame(pg.standard_frame(n), tower)
    cert = verify.saturation_radius(s.points, n, tower.big, max_rho=rho)
    assert cert.radius <= rho
