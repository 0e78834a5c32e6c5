"""The point-line geometry on affine parts of subgeometries through a fixed
hyperplane subgeometry, and its coordinate isomorphism onto the linear
representation of a canonical subgeometry at infinity.

Fix an (m-1)-dimensional GF(q')-subgeometry C of PG(m, q), q = (q')^(rho+1),
spanning a hyperplane.  The geometry's points are the points off that
hyperplane; its lines are the affine parts B \\ C of the m-dimensional
subgeometries B containing C.  Mapping each affine coordinate z_i through
its alpha-expansion over GF(q') and regrouping along a beta-basis of
GF((q')^m) sends points bijectively onto the affine points of
PG(rho+1, (q')^m) and lines onto affine lines whose infinity point lies in
the canonical rho-dimensional subgeometry D of the hyperplane at infinity.

Lines are identified by that infinity point, their "direction": equal
directions = parallel lines, and concurrent lines are independent when
their direction vectors are linearly independent over GF(q').  All maps
work in ambient coordinates; a normalizing projectivity stored on the
config moves the configuration into canonical position internally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import projgeom as pg
from . import subgeom as sg
from .errors import (
    BadDirection,
    ConfigMismatch,
    DegenerateConfig,
    NotConcurrent,
    PointOnHyperplane,
)
from .gftower import FieldTower, build_tower, split_prime_power


@dataclass(frozen=True)
class YConfig:
    rho: int
    m: int
    tower: FieldTower  # GF(q) over GF(q'), q = (q')^(rho+1)
    ttower: FieldTower  # GF((q')^m) over GF(q')
    c: sg.Subgeometry
    sigma_c: pg.Subspace
    normalizer: pg.Projectivity  # None = already canonical
    norm_inv: pg.Projectivity
    d_points: tuple
    d_set: frozenset = field(repr=False)

    @property
    def gf(self):
        return self.tower.big

    @property
    def tgf(self):
        return self.ttower.big

    @property
    def q_sub(self):
        return self.tower.q_sub


def _canonical_c(rho: int, m: int, tower: FieldTower) -> sg.Subgeometry:
    if m == 1:
        return _point_subgeometry((0, 1), tower)
    frame = []
    for i in range(1, m + 1):
        frame.append(tuple(1 if j == i else 0 for j in range(m + 1)))
    frame.append((0,) + (1,) * m)
    return sg.subgeometry_through_frame(frame, tower)


def _point_subgeometry(pt, tower: FieldTower) -> sg.Subgeometry:
    pt = pg.normalize(pt, tower.big)
    return sg.Subgeometry(
        ambient=len(pt) - 1,
        tower=tower,
        frame=(pt,),
        points=(pt,),
        span=pg.span([pt], tower.big),
        pset=frozenset((pt,)),
    )


def _d_points(rho: int, ttower: FieldTower) -> tuple:
    out = []
    for ap in pg.enumerate_points(rho, ttower.sub):
        out.append((0,) + tuple(ttower.embed(c) for c in ap))
    return tuple(out)


_CANONICAL_CACHE: dict = {}


def canonical_config(rho: int, m: int, q_sub: int) -> YConfig:
    """The configuration in canonical coordinates: C runs through
    E_1, ..., E_m and (0, 1, ..., 1) inside the hyperplane X0 = 0."""
    key = (rho, m, q_sub)
    if key in _CANONICAL_CACHE:
        return _CANONICAL_CACHE[key]
    p, e_sub = split_prime_power(q_sub)
    tower = build_tower(p, e_sub, rho + 1)
    ttower = build_tower(p, e_sub, m)
    c = _canonical_c(rho, m, tower)
    cfg = YConfig(
        rho=rho,
        m=m,
        tower=tower,
        ttower=ttower,
        c=c,
        sigma_c=c.span,
        normalizer=None,
        norm_inv=None,
        d_points=_d_points(rho, ttower),
        d_set=frozenset(_d_points(rho, ttower)),
    )
    _CANONICAL_CACHE[key] = cfg
    return cfg


def config_from_subgeometry(c: sg.Subgeometry, rho: int) -> YConfig:
    """Configuration for an arbitrary hyperplane subgeometry; computes the
    normalizing projectivity carrying it to canonical position."""
    tower = c.tower
    m = c.ambient
    if tower.k != rho + 1:
        raise DegenerateConfig("tower degree does not match rho + 1")
    if c.dim != m - 1:
        raise DegenerateConfig("subgeometry must have codimension 1 in the ambient space")
    p = tower.big.p
    ttower = build_tower(p, tower.sub.e, m)
    if c.dim == 0:
        gf = tower.big
        w = c.points[0]
        v0 = next(
            tuple(1 if j == i else 0 for j in range(m + 1))
            for i in range(m + 1)
            if not pg.contains_point(c.span, tuple(1 if j == i else 0 for j in range(m + 1)), gf)
        )
        a = [[v0[i], w[i]] for i in range(m + 1)]
        nu = pg.inverse(pg.projectivity(a, gf), gf)
    else:
        nu = sg.normalizer_to_canonical(c)
    return YConfig(
        rho=rho,
        m=m,
        tower=tower,
        ttower=ttower,
        c=c,
        sigma_c=c.span,
        normalizer=nu,
        norm_inv=pg.inverse(nu, tower.big),
        d_points=_d_points(rho, ttower),
        d_set=frozenset(_d_points(rho, ttower)),
    )


def _to_canonical(x, cfg: YConfig):
    if cfg.normalizer is None:
        return pg.normalize(x, cfg.gf)
    return pg.apply(cfg.normalizer, x, cfg.gf)


def _from_canonical(x, cfg: YConfig):
    if cfg.norm_inv is None:
        return x
    return pg.apply(cfg.norm_inv, x, cfg.gf)


def phi(x, cfg: YConfig) -> tuple:
    """Image of an affine point in PG(rho+1, (q')^m)."""
    gf, tgf = cfg.gf, cfg.tgf
    y = _to_canonical(x, cfg)
    if y[0] == 0:
        raise PointOnHyperplane(f"{x} lies on the hyperplane subgeometry's span")
    if y[0] != 1:
        f = gf.inv(y[0])
        y = tuple(gf.mul(f, v) for v in y)
    # digits[i][j] = coefficient of alpha^j in z_i, as abstract GF(q') elements
    digits = [cfg.tower.decompose_sub(z) for z in y[1:]]
    out = [1]
    for j in range(cfg.rho + 1):
        out.append(cfg.ttower.recompose([cfg.ttower.embed(d[j]) for d in digits]))
    return tuple(out)


def phi_inverse(y, cfg: YConfig) -> tuple:
    tgf = cfg.tgf
    y = pg.normalize(y, tgf)
    if y[0] == 0:
        raise PointOnHyperplane(f"{y} lies on the hyperplane at infinity")
    if y[0] != 1:
        f = tgf.inv(y[0])
        y = tuple(tgf.mul(f, v) for v in y)
    digits = [cfg.ttower.decompose_sub(w) for w in y[1:]]
    x = [1]
    for i in range(cfg.m):
        x.append(cfg.tower.recompose([cfg.tower.embed(digits[j][i]) for j in range(cfg.rho + 1)]))
    return _from_canonical(tuple(x), cfg)


@dataclass(frozen=True)
class YLine:
    cfg: YConfig = field(repr=False)
    points: tuple
    direction: tuple


def y_line(cfg: YConfig, f_point, direction) -> YLine:
    """The line through f_point whose image has the given infinity point."""
    direction = pg.normalize(direction, cfg.tgf)
    if direction not in cfg.d_set:
        raise BadDirection(f"{direction} is not a point of the canonical subgeometry")
    tgf = cfg.tgf
    base = phi(f_point, cfg)
    pts = []
    for t in range(tgf.q):
        img = (1,) + tuple(
            tgf.add(base[l], tgf.mul(t, direction[l])) for l in range(1, cfg.rho + 2)
        )
        pts.append(phi_inverse(img, cfg))
    return YLine(cfg=cfg, points=tuple(sorted(pts)), direction=direction)


def line_direction(cfg: YConfig, p1, p2) -> tuple:
    """Infinity point of the image line through two affine points."""
    tgf = cfg.tgf
    w1, w2 = phi(p1, cfg), phi(p2, cfg)
    diff = (0,) + tuple(tgf.sub(a, b) for a, b in zip(w2[1:], w1[1:]))
    return pg.normalize(diff, tgf)


def line_from_points(cfg: YConfig, points, validate: bool = True) -> YLine:
    """Reconstruct a line from its point set (e.g. a collineation image)."""
    pts = sorted(pg.normalize(p, cfg.gf) for p in points)
    d = line_direction(cfg, pts[0], pts[1])
    if validate:
        if d not in cfg.d_set:
            raise BadDirection("points do not map to a line with direction in the subgeometry")
        expect = y_line(cfg, pts[0], d)
        if expect.points != tuple(pts):
            raise BadDirection("point set is not a line of the geometry")
    return YLine(cfg=cfg, points=tuple(pts), direction=d)


def are_parallel(a: YLine, b: YLine) -> bool:
    if a.cfg is not b.cfg:
        raise ConfigMismatch("lines belong to different configurations")
    return a.direction == b.direction


def direction_sub_vector(cfg: YConfig, direction) -> tuple:
    """Direction point as a coordinate vector over the abstract GF(q')."""
    return tuple(cfg.ttower.to_sub(v) for v in direction[1:])


def are_independent(lines) -> bool:
    """Concurrent lines are independent iff their images span a subspace of
    dimension len(lines): rank of the direction vectors over GF(q')."""
    lines = list(lines)
    cfg = lines[0].cfg
    if any(l.cfg is not cfg for l in lines):
        raise ConfigMismatch("lines belong to different configurations")
    common = set(lines[0].points)
    for l in lines[1:]:
        common &= set(l.points)
    if len(lines) > 1 and len(common) != 1:
        raise NotConcurrent(f"lines share {len(common)} points")
    vecs = [direction_sub_vector(cfg, l.direction) for l in lines]
    return len(pg.rref(vecs, cfg.tower.sub)) == len(lines)


# --- affine subspaces of the line geometry ---

@dataclass(frozen=True)
class AffineSubspace:
    """d independent directions through a base point, expanded on demand."""

    cfg: YConfig = field(repr=False)
    base: tuple
    directions: tuple

    @property
    def dim(self) -> int:
        return len(self.directions)

    def points(self) -> list:
        cfg = self.cfg
        tgf = cfg.tgf
        img0 = phi(self.base, cfg)
        out = []
        for ts in itertools.product(range(tgf.q), repeat=len(self.directions)):
            img = (1,) + tuple(
                _dot_shift(tgf, img0[l], self.directions, ts, l)
                for l in range(1, cfg.rho + 2)
            )
            out.append(phi_inverse(img, cfg))
        return out


def _dot_shift(tgf, base_coord, directions, ts, l):
    acc = base_coord
    for t, d in zip(ts, directions):
        acc = tgf.add(acc, tgf.mul(t, d[l]))
    return acc


def is_affine_subspace(points, cfg: YConfig, d: int) -> bool:
    """True iff the point set is a d-dimensional affine subspace: the image
    is a coset of a rank-d subspace spanned by directions of the canonical
    infinity subgeometry."""
    pts = set(pg.normalize(p, cfg.gf) for p in points)
    if len(pts) != cfg.q_sub ** (d * cfg.m):
        return False
    imgs = [phi(p, cfg) for p in sorted(pts)]
    tgf = cfg.tgf
    base = imgs[0]
    diffs = [tuple(tgf.sub(a, b) for a, b in zip(img[1:], base[1:])) for img in imgs[1:]]
    if len(pg.rref(diffs, tgf)) != d:
        return False
    sub_dirs = []
    for v in diffs:
        nv = pg.normalize(v, tgf)
        if all(x in cfg.ttower.image_set for x in nv):
            sub_dirs.append(tuple(cfg.ttower.to_sub(x) for x in nv))
    return len(pg.rref(sub_dirs, cfg.tower.sub)) == d


# --- exhaustive certification of the line-geometry isomorphism ---

def affine_points(cfg: YConfig) -> list:
    gf = cfg.gf
    return [
        p
        for p in pg.enumerate_points(cfg.m, gf)
        if not pg.contains_point(cfg.sigma_c, p, gf)
    ]


def enumerate_lines_by_pairs(cfg: YConfig) -> list:
    """All line point sets, built pair-by-pair through the hyperplane
    subgeometry; independent of the direction parametrisation."""
    gf = cfg.gf
    out = {}
    for p1, p2 in itertools.combinations(affine_points(cfg), 2):
        x = pg.meet(pg.span([p1, p2], gf), cfg.sigma_c, gf)
        xpt = pg.normalize(x.rows[0], gf)
        if xpt not in cfg.c.pset:
            continue
        subline = sg.subgeometry_through_frame([xpt, p1, p2], cfg.tower)
        if cfg.m == 1:
            big = subline
        else:
            big = sg.extend_by_subline(cfg.c, subline)
        aff = tuple(sorted(big.pset - cfg.c.pset))
        out[aff] = True
    return list(out)


def certify_isomorphism(rho: int, m: int, q_sub: int) -> dict:
    """Exhaustively check the correspondence with the linear representation:
    point bijection, every line an affine line with direction in the
    canonical subgeometry, and the parallel-class partition."""
    cfg = canonical_config(rho, m, q_sub)
    pts = affine_points(cfg)
    images = [phi(p, cfg) for p in pts]
    expected_points = cfg.gf.q**m
    bijection = (
        len(pts) == expected_points
        and len(set(images)) == expected_points
        and all(phi_inverse(img, cfg) == p for img, p in zip(images, pts))
    )
    line_sets = enumerate_lines_by_pairs(cfg)
    expected_lines = cfg.gf.q**m * pg.theta(rho, q_sub) // q_sub**m
    lines = []
    lines_ok = len(line_sets) == expected_lines
    for pts_of_line in line_sets:
        try:
            lines.append(line_from_points(cfg, pts_of_line, validate=True))
        except BadDirection:
            lines_ok = False
    classes = {}
    for ln in lines:
        classes.setdefault(ln.direction, []).append(ln)
    class_size = cfg.gf.q**m // q_sub**m
    classes_ok = len(classes) == pg.theta(rho, q_sub) and all(
        len(v) == class_size for v in classes.values()
    )
    return {
        "points": len(pts),
        "bijection": bijection,
        "lines": len(line_sets),
        "lines_expected": expected_lines,
        "lines_ok": lines_ok,
        "classes": len(classes),
        "classes_expected": pg.theta(rho, q_sub),
        "classes_ok": classes_ok,
    }


# --- three concurrent hyperplanes: projection and shadow maps ---

@dataclass(frozen=True)
class ThreeHyperplaneConfig:
    """Three distinct hyperplanes through the span of a codimension-2
    subgeometry, each carrying its own line geometry."""

    rho: int
    c: sg.Subgeometry
    planes: tuple
    configs: tuple  # YConfig per plane, in plane-local coordinates

    @property
    def gf(self):
        return self.c.tower.big


def three_hyperplane_config(c: sg.Subgeometry, planes, rho: int) -> ThreeHyperplaneConfig:
    gf = c.tower.big
    m = c.ambient
    planes = tuple(planes)
    if len(planes) != 3 or len(set(planes)) != 3:
        raise DegenerateConfig("need three distinct hyperplanes")
    if c.dim != m - 2:
        raise DegenerateConfig("subgeometry must have codimension 2")
    for pl in planes:
        if pl.dim != m - 1 or not pg.contains_subspace(pl, c.span, gf):
            raise DegenerateConfig("hyperplanes must contain the subgeometry's span")
    configs = []
    for pl in planes:
        local_frame = [pg.local_coords(pl, f, gf) for f in c.frame]
        if c.dim == 0:
            c_local = _point_subgeometry(local_frame[0], c.tower)
        else:
            c_local = sg.subgeometry_through_frame(local_frame, c.tower)
        configs.append(config_from_subgeometry(c_local, rho))
    return ThreeHyperplaneConfig(rho=rho, c=c, planes=planes, configs=tuple(configs))


def plane_line(cfg3: ThreeHyperplaneConfig, i: int, global_points) -> YLine:
    gf = cfg3.gf
    local = [pg.local_coords(cfg3.planes[i], p, gf) for p in global_points]
    return line_from_points(cfg3.configs[i], local)


def _unique_extension(cfg3, b_line: YLine, s):
    gf = cfg3.gf
    pl1, pl2, pl3 = cfg3.planes
    s = pg.normalize(s, gf)
    if not pg.contains_point(pl2, s, gf) or pg.contains_point(cfg3.c.span, s, gf):
        raise DegenerateConfig("projection point must lie in the second plane, off the pistil")
    r = pg.from_local(pl1, b_line.points[0], gf)
    t_sub = pg.meet(pg.span([r, s], gf), pl3, gf)
    if t_sub.rank != 1:
        raise DegenerateConfig("line rs does not meet the third plane in a point")
    t = pg.normalize(t_sub.rows[0], gf)
    subline = sg.subgeometry_through_frame([r, s, t], cfg3.c.tower)
    b_global = [pg.from_local(pl1, p, gf) for p in b_line.points]
    b_full = sorted(set(b_global) | cfg3.c.pset)
    frame_b = sg._greedy_frame_through(b_full, b_global[0], len(pl1.rows) - 1, gf)
    b_sub = sg.subgeometry_through_frame(frame_b, cfg3.c.tower)
    if not set(b_full) <= b_sub.pset:
        raise AssertionError("anchored frame does not regenerate the line's subgeometry")
    return sg.extend_by_subline(b_sub, subline)


def shadow(cfg3: ThreeHyperplaneConfig, b_line: YLine, s) -> YLine:
    """Trace on the second plane of the unique subgeometry through the line
    and the projection point that also meets the third plane."""
    big = _unique_extension(cfg3, b_line, s)
    gf = cfg3.gf
    trace = [p for p in big.points if pg.contains_point(cfg3.planes[1], p, gf)]
    affine = [p for p in trace if p not in cfg3.c.pset]
    return plane_line(cfg3, 1, affine)


def project(cfg3: ThreeHyperplaneConfig, b_line: YLine, s) -> YLine:
    """Trace on the third plane, the projection of the line from s."""
    big = _unique_extension(cfg3, b_line, s)
    gf = cfg3.gf
    trace = [p for p in big.points if pg.contains_point(cfg3.planes[2], p, gf)]
    affine = [p for p in trace if p not in cfg3.c.pset]
    return plane_line(cfg3, 2, affine)
