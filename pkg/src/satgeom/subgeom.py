"""Subgeometries of PG(m, q) defined over the subfield GF(q').

A subgeometry is anchored on a frame of its span: by the uniqueness of the
subgeometry through a frame, the enumerated point set is a pure function of
the frame and the tower.  Point sets are cached on the object, so identity
and membership are cheap after construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import projgeom as pg
from .errors import BadConfiguration, BadIncidence, NotAFrame
from .gftower import FieldTower


@dataclass(frozen=True)
class Subgeometry:
    ambient: int
    tower: FieldTower
    frame: tuple
    points: tuple
    span: pg.Subspace
    pset: frozenset = field(repr=False)

    @property
    def dim(self) -> int:
        return self.span.dim

    @property
    def q_sub(self) -> int:
        return self.tower.q_sub


def subgeometry_through_frame(frame, tower: FieldTower) -> Subgeometry:
    """The unique GF(q')-subgeometry containing every point of the frame."""
    gf = tower.big
    frame = [pg.normalize(p, gf) for p in frame]
    d = len(frame) - 2
    spn = pg.span(frame, gf)
    if spn.rank != d + 1:
        raise NotAFrame(f"{d + 2} points spanning a rank-{spn.rank} space")
    local_frame = [pg.local_coords(spn, p, gf) for p in frame]
    if not pg.is_frame(local_frame, d, gf):
        raise NotAFrame("input points are not a frame of their span")
    g = pg.frame_map(pg.standard_frame(d), local_frame, gf)
    pts = []
    for ap in pg.enumerate_points(d, tower.sub):
        embedded = tuple(tower.embed(c) for c in ap)
        pts.append(pg.from_local(spn, pg.apply(g, embedded, gf), gf))
    pts = tuple(sorted(pts))
    return Subgeometry(
        ambient=spn.ambient,
        tower=tower,
        frame=tuple(frame),
        points=pts,
        span=spn,
        pset=frozenset(pts),
    )


def real_subgeometry(n: int, tower: FieldTower) -> Subgeometry:
    """The subgeometry of PG(n, q) whose points have subfield coordinates."""
    return subgeometry_through_frame(pg.standard_frame(n), tower)


def _frame_with_unit(points, unit, m, gf):
    """A basis of m subgeometry points in which `unit` has no zero coordinate."""
    for combo in itertools.combinations(points, m):
        sub = pg.span(combo, gf)
        if sub.rank != m:
            continue
        lam = _solve_combination(combo, unit, gf)
        if lam is not None and all(lam):
            return list(combo), lam
    raise BadConfiguration("no frame of the subgeometry has the required unit point")


def _solve_combination(basis, target, gf):
    """Coefficients lam with sum lam_j basis_j = target exactly, or None."""
    w = len(target)
    m = len(basis)
    aug = [[basis[j][i] for j in range(m)] + [target[i]] for i in range(w)]
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, w) if aug[i][c]), None)
        if piv is None:
            return None
        aug[r], aug[piv] = aug[piv], aug[r]
        f = gf.inv(aug[r][c])
        aug[r] = [gf.mul(f, v) for v in aug[r]]
        for i in range(w):
            if i != r and aug[i][c]:
                g = aug[i][c]
                aug[i] = [gf.sub(vi, gf.mul(g, vr)) for vi, vr in zip(aug[i], aug[r])]
        r += 1
    for i in range(r, w):
        if aug[i][m]:
            return None
    return [aug[i][m] for i in range(m)]


def normalizer_to_canonical(c: Subgeometry, unit=None) -> pg.Projectivity:
    """A projectivity of the ambient space mapping c into canonical position.

    The span of c is carried to the hyperplane X0 = 0 with the chosen frame
    going to E_1, ..., E_m, E' = (0,1,...,1).  If `unit` is given it becomes
    the frame's unit point (it must be a point of c seeing a zero-free
    coordinate vector in some basis of c's points).
    """
    gf = c.tower.big
    m = c.ambient
    if c.span.dim != m - 1:
        raise BadConfiguration("subgeometry does not span a hyperplane")
    if unit is None:
        # the stored frame's unit point has no zero coordinate in its basis
        basis = list(c.frame[:-1])
        lam = _solve_combination(basis, c.frame[-1], gf)
        if lam is None or not all(lam):
            raise AssertionError("stored frame is not a frame")
    else:
        if unit not in c.pset:
            raise BadConfiguration("unit point does not belong to the subgeometry")
        basis, lam = _frame_with_unit(c.points, unit, m, gf)
    cols = [[gf.mul(l, coord) for coord in b] for l, b in zip(lam, basis)]
    v0 = next(
        tuple(1 if j == i else 0 for j in range(m + 1))
        for i in range(m + 1)
        if not pg.contains_point(c.span, tuple(1 if j == i else 0 for j in range(m + 1)), gf)
    )
    a = [[v0[i]] + [col[i] for col in cols] for i in range(m + 1)]
    return pg.inverse(pg.projectivity(a, gf), gf)


def affine_part_points(c: Subgeometry, p, q) -> list:
    """Points of the unique subgeometry through c, p, q that lie off span(c).

    p and q must avoid span(c) and their line must meet span(c) in a point
    of c; the result is the (q')^m affine points, p among them.
    """
    tower = c.tower
    gf = tower.big
    m = c.ambient
    p = pg.normalize(p, gf)
    q = pg.normalize(q, gf)
    if p == q:
        raise BadConfiguration("p and q coincide")
    if pg.contains_point(c.span, p, gf) or pg.contains_point(c.span, q, gf):
        raise BadConfiguration("p and q must lie off the subgeometry's span")
    line = pg.span([p, q], gf)
    x = pg.meet(line, c.span, gf)
    if x.rank != 1 or pg.normalize(x.rows[0], gf) not in c.pset:
        raise BadConfiguration("the line pq misses the subgeometry")
    nu = normalizer_to_canonical(c, unit=pg.normalize(x.rows[0], gf))
    nu_inv = pg.inverse(nu, gf)
    pl = pg.apply(nu, p, gf)
    ql = pg.apply(nu, q, gf)
    pl = tuple(gf.mul(gf.inv(pl[0]), v) for v in pl)
    ql = tuple(gf.mul(gf.inv(ql[0]), v) for v in ql)
    delta = gf.sub(ql[1], pl[1])
    if any(gf.sub(qi, pi) != delta for qi, pi in zip(ql[1:], pl[1:])):
        raise BadConfiguration("normalized difference is not constant")
    out = []
    for ks in itertools.product(tower.subfield_image, repeat=m):
        img = (1,) + tuple(
            gf.add(pl[i + 1], gf.mul(ks[i], delta)) for i in range(m)
        )
        out.append(pg.apply(nu_inv, img, gf))
    return out


def extend_by_subline(c: Subgeometry, line: Subgeometry) -> Subgeometry:
    """The unique subgeometry one dimension above c containing c and the subline."""
    gf = c.tower.big
    m = c.dim + 1
    common = c.pset & line.pset
    if len(common) != 1:
        raise BadIncidence(f"subline meets the subgeometry in {len(common)} points")
    if pg.contains_subspace(c.span, line.span, gf):
        raise BadIncidence("subline lies inside the subgeometry's span")
    p = next(iter(common))
    frame_c = _greedy_frame_through(c.points, p, c.dim, gf)
    qs = [pt for pt in line.points if pt != p][:2]
    big_frame = frame_c[1:] + qs
    result = subgeometry_through_frame(big_frame, c.tower)
    if not (c.pset <= result.pset and line.pset <= result.pset):
        raise AssertionError("extension does not contain its generators")
    return result


def _greedy_frame_through(points, first, d, gf):
    """A frame of the span of `points` whose first member is `first`."""
    basis = [first]
    for pt in points:
        if len(basis) == d + 1:
            break
        if len(pg.rref(basis + [pt], gf)) > len(basis):
            basis.append(pt)
    if len(basis) != d + 1:
        raise NotAFrame("points do not span the expected dimension")
    for pt in points:
        if pt in basis:
            continue
        cand = basis + [pt]
        if pg.is_frame([pg.local_coords(pg.span(basis, gf), x, gf) for x in cand], d, gf):
            return cand
    raise NotAFrame("no frame completion found")


def hyperplane_trace_is_max_subgeometry(b: Subgeometry, h: pg.Subspace) -> bool:
    """True iff h cuts b in a subgeometry of dimension dim(b) - 1 spanning h."""
    gf = b.tower.big
    trace = [p for p in b.points if pg.contains_point(h, p, gf)]
    expected = pg.theta(b.dim - 1, b.q_sub)
    if len(trace) != expected:
        return False
    return pg.span(trace, gf).rows == h.rows
