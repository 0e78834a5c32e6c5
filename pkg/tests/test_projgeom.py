import random

import pytest

from satgeom import projgeom as pg
from satgeom.errors import NotAFrame, SizeLimit, WrongCount
from satgeom.gftower import field_spec

GF2 = field_spec(2, 1)
GF4 = field_spec(2, 2)
GF8 = field_spec(2, 3)


# ---------- enumeration -----------------------------------------------------

def test_enumerate_fano_line():
    assert pg.enumerate_points(1, GF2) == [(0, 1), (1, 0), (1, 1)]


def test_enumerate_counts():
    assert len(pg.enumerate_points(2, GF4)) == 21
    assert pg.theta(5, 8) == 37449


@pytest.mark.parametrize(
    "n,p,e",
    [(2, 2, 2), (3, 2, 3), (4, 2, 3), (2, 2, 4), (3, 2, 4), (5, 2, 1), (9, 2, 1), (4, 3, 1), (3, 3, 2), (2, 3, 3), (5, 2, 3)],
)
def test_enumerate_distinct_and_complete(n, p, e):
    gf = field_spec(p, e)
    pts = pg.enumerate_points(n, gf)
    assert len(pts) == pg.theta(n, gf.q)
    assert len(set(pts)) == len(pts)
    for i, pt in enumerate(pts):
        assert pg.point_index(pt, gf) == i
    assert pg.point_unindex(len(pts) - 1, n, gf) == pts[-1]


def test_enumerate_cap():
    with pytest.raises(SizeLimit):
        pg.enumerate_points(9, GF8, cap=1000)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("SATGEOM_SIZE_CAP", "5")
    with pytest.raises(SizeLimit):
        pg.enumerate_points(2, GF4)


def test_normalization_canonical_exhaustive_pg24():
    import itertools

    for vec in itertools.product(range(4), repeat=3):
        if not any(vec):
            continue
        base = pg.normalize(vec, GF4)
        for lam in range(1, 4):
            scaled = tuple(GF4.mul(lam, v) for v in vec)
            assert pg.normalize(scaled, GF4) == base


# ---------- span and meet ---------------------------------------------------

def test_span_single_point():
    s = pg.span([(1, 2, 3)], GF4)
    assert s.dim == 0
    assert s.rows == (pg.normalize((1, 2, 3), GF4),)


def test_span_of_three_frame_points_is_plane():
    fr = pg.standard_frame(2)
    for drop in range(4):
        pts = fr[:drop] + fr[drop + 1 :]
        assert pg.span(pts, GF4).dim == 2


def test_span_collinear():
    a, b = (1, 0, 0), (0, 1, 0)
    c = (1, 1, 0)
    assert pg.span([a, b, c], GF4).dim == 1


def test_meet_idempotent():
    u = pg.span([(1, 0, 0, 0), (0, 1, 2, 3)], GF4)
    assert pg.meet(u, u, GF4).rows == u.rows


def test_meet_two_lines_of_plane():
    u = pg.span([(1, 0, 0), (0, 1, 0)], GF4)
    v = pg.span([(1, 0, 1), (0, 1, 1)], GF4)
    m = pg.meet(u, v, GF4)
    assert m.dim == 0


def test_meet_two_hyperplanes_through_common_codim2():
    sigma = pg.span([(0, 0, 1, 0), (0, 0, 0, 1)], GF8)
    h1 = pg.span_of([sigma, (1, 0, 0, 0)], GF8, 3)
    h2 = pg.span_of([sigma, (0, 1, 0, 0)], GF8, 3)
    assert pg.meet(h1, h2, GF8).rows == sigma.rows


def test_grassmann_random_pairs_pg48():
    rng = random.Random(20240817)
    pts = pg.enumerate_points(4, GF8)
    for _ in range(1000):
        u = pg.span(rng.sample(pts, rng.randint(1, 4)), GF8)
        v = pg.span(rng.sample(pts, rng.randint(1, 4)), GF8)
        s = pg.span_of([u, v], GF8, 4)
        m = pg.meet(u, v, GF8)
        assert u.dim + v.dim == s.dim + m.dim


def test_empty_subspace_is_first_class():
    e = pg.Subspace(2, ())
    assert e.dim == -1
    u = pg.span([(1, 0, 0)], GF4)
    assert pg.meet(e, u, GF4).rows == ()


# ---------- frames and projectivities ---------------------------------------

def test_standard_frame_is_frame():
    assert pg.is_frame(pg.standard_frame(3), 3, GF4)


def test_repeated_point_is_not_frame():
    fr = pg.standard_frame(2)
    fr[3] = fr[0]
    assert not pg.is_frame(fr, 2, GF4)


def test_wrong_count():
    with pytest.raises(WrongCount):
        pg.is_frame(pg.standard_frame(2)[:3], 2, GF4)


def test_projective_image_of_frame_is_frame():
    rng = random.Random(7)
    n = 2
    while True:
        mat = [[rng.randrange(4) for _ in range(n + 1)] for _ in range(n + 1)]
        if len(pg.rref(mat, GF4)) == n + 1:
            break
    g = pg.projectivity(mat, GF4)
    img = [pg.apply(g, x, GF4) for x in pg.standard_frame(n)]
    assert pg.is_frame(img, n, GF4)


def test_apply_identity_and_scalar():
    ident = pg.projectivity([(1, 0, 0), (0, 1, 0), (0, 0, 1)], GF4)
    x = (1, 2, 3)
    assert pg.apply(ident, x, GF4) == pg.normalize(x, GF4)
    lam = 3
    scal = pg.projectivity([(lam, 0, 0), (0, lam, 0), (0, 0, lam)], GF4)
    assert pg.apply(scal, x, GF4) == pg.normalize(x, GF4)


def test_apply_affine_stretch_matrix():
    # bordered matrix (first row 1,0,...,0; first column x_i; diagonal y_i - x_i)
    # maps (1, k_1, ..., k_m) onto (1, x_1 + k_1(y_1-x_1), ...)
    gf = GF4
    m = 2
    x = (2, 3)
    y = (1, 2)
    rows = [(1, 0, 0)]
    for i in range(m):
        row = [x[i]] + [0] * m
        row[i + 1] = gf.sub(y[i], x[i])
        rows.append(tuple(row))
    g = pg.projectivity(rows, gf)
    for k1 in range(4):
        for k2 in range(4):
            img = pg.apply(g, (1, k1, k2), gf)
            want = (
                1,
                gf.add(x[0], gf.mul(k1, gf.sub(y[0], x[0]))),
                gf.add(x[1], gf.mul(k2, gf.sub(y[1], x[1]))),
            )
            assert img == pg.normalize(want, gf)


def test_frame_map_identity():
    fr = pg.standard_frame(2)
    g = pg.frame_map(fr, fr, GF4)
    assert g.matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_frame_map_moves_frame_pointwise():
    rng = random.Random(3)
    pts = pg.enumerate_points(2, GF4)
    while True:
        dst = rng.sample(pts, 4)
        try:
            if pg.is_frame(dst, 2, GF4):
                break
        except WrongCount:
            continue
    g = pg.frame_map(pg.standard_frame(2), dst, GF4)
    for src, want in zip(pg.standard_frame(2), dst):
        assert pg.apply(g, src, GF4) == pg.normalize(want, GF4)


def test_frame_map_round_trip():
    rng = random.Random(5)
    pts = pg.enumerate_points(2, GF4)
    frames = []
    while len(frames) < 2:
        cand = rng.sample(pts, 4)
        if pg.is_frame(cand, 2, GF4):
            frames.append(cand)
    a, b = frames
    gab = pg.frame_map(a, b, GF4)
    gba = pg.frame_map(b, a, GF4)
    comp = pg.compose(gba, gab, GF4)
    for x in a:
        assert pg.apply(comp, x, GF4) == pg.normalize(x, GF4)


def test_frame_map_rejects_non_frames():
    fr = pg.standard_frame(2)
    bad = fr[:3] + [fr[0]]
    with pytest.raises(NotAFrame):
        pg.frame_map(bad, fr, GF4)
