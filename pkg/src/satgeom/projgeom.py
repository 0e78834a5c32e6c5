"""Projective geometry over GF(q): points, subspaces, frames, projectivities.

A point of PG(n, q) is a normalized coordinate tuple of length n+1 (ints,
encoded per ``gftower.FieldSpec``), scaled so the leftmost nonzero entry
is 1.  A subspace is held in reduced row echelon form, which makes it a
canonical value: two subspaces are equal iff their row tuples are equal.
The empty subspace (rank 0, projective dimension -1) is a valid value.

Points are indexed by their rank in the lexicographic enumeration; the
index is computable in O(n) without materialising the point list, which
the exhaustive coverage checker relies on.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .errors import NotAFrame, SizeLimit, WrongCount
from .gftower import FieldSpec

DEFAULT_POINT_CAP = 10**7


def point_cap() -> int:
    return int(os.environ.get("SATGEOM_SIZE_CAP", DEFAULT_POINT_CAP))


def theta(n: int, q: int) -> int:
    """Number of points of PG(n, q); theta(-1) = 0."""
    if n < 0:
        return 0
    return (q ** (n + 1) - 1) // (q - 1)


def normalize(vec, gf: FieldSpec) -> tuple:
    """Scale so the leftmost nonzero coordinate is 1; None for the zero vector."""
    for c in vec:
        if c:
            if c == 1:
                return tuple(vec)
            f = gf.inv(c)
            return tuple(gf.mul(f, v) for v in vec)
    return None


def enumerate_points(n: int, gf: FieldSpec, cap: int = None) -> list:
    """All points of PG(n, gf.q) in lexicographic coordinate order."""
    count = theta(n, gf.q)
    if count > (cap if cap is not None else point_cap()):
        raise SizeLimit(f"PG({n},{gf.q}) has {count} points, over the cap")
    pts = []
    for lead in range(n, -1, -1):
        for tail in itertools.product(range(gf.q), repeat=n - lead):
            pts.append((0,) * lead + (1,) + tail)
    return pts


def point_index(pt, gf: FieldSpec) -> int:
    """Rank of a normalized point in the enumerate_points order."""
    n = len(pt) - 1
    lead = 0
    while pt[lead] == 0:
        lead += 1
    tail = 0
    for c in pt[lead + 1 :]:
        tail = tail * gf.q + c
    return theta(n - lead - 1, gf.q) + tail


def point_unindex(idx: int, n: int, gf: FieldSpec) -> tuple:
    q = gf.q
    lead = n
    while idx >= theta(n - lead, q):
        lead -= 1
    idx -= theta(n - lead - 1, q)
    tail = []
    for _ in range(n - lead):
        idx, c = divmod(idx, q)
        tail.append(c)
    return (0,) * lead + (1,) + tuple(reversed(tail))


# --- linear algebra ---

def rref(rows, gf: FieldSpec) -> tuple:
    """Reduced row echelon form; returns the nonzero rows as a tuple."""
    m = [list(r) for r in rows]
    if not m:
        return ()
    w = len(m[0])
    r = 0
    for c in range(w):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        f = gf.inv(m[r][c])
        if f != 1:
            m[r] = [gf.mul(f, v) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                g = m[i][c]
                m[i] = [gf.sub(vi, gf.mul(g, vr)) for vi, vr in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r] if any(row))


def nullspace(rows, gf: FieldSpec, width: int = None) -> tuple:
    """RREF basis of {x : rows . x = 0}."""
    rows = rref(rows, gf)
    w = width if width is not None else (len(rows[0]) if rows else 0)
    pivots = []
    for row in rows:
        pivots.append(next(i for i, v in enumerate(row) if v))
    free = [c for c in range(w) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * w
        v[fc] = 1
        for row, pc in zip(rows, pivots):
            v[pc] = gf.neg(row[fc])
        basis.append(tuple(v))
    return rref(basis, gf)


@dataclass(frozen=True)
class Subspace:
    """Row space of an RREF matrix; dim is the projective dimension."""

    ambient: int
    rows: tuple

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows) - 1

    def __contains__(self, pt):
        raise TypeError("use contains_point(sub, pt, gf)")


def span(points, gf: FieldSpec, ambient: int = None) -> Subspace:
    pts = list(points)
    if not pts:
        if ambient is None:
            raise ValueError("empty span needs an explicit ambient dimension")
        return Subspace(ambient, ())
    n = len(pts[0]) - 1
    return Subspace(n, rref(pts, gf))


def span_of(subs_and_points, gf: FieldSpec, ambient: int) -> Subspace:
    rows = []
    for obj in subs_and_points:
        if isinstance(obj, Subspace):
            rows.extend(obj.rows)
        else:
            rows.append(obj)
    return Subspace(ambient, rref(rows, gf))


def meet(u: Subspace, v: Subspace, gf: FieldSpec) -> Subspace:
    if u.ambient != v.ambient:
        raise ValueError("ambient dimensions differ")
    w = u.ambient + 1
    du = nullspace(u.rows, gf, w)
    dv = nullspace(v.rows, gf, w)
    ann = rref(list(du) + list(dv), gf) if (du or dv) else ()
    if not ann:
        full = rref([tuple(1 if j == i else 0 for j in range(w)) for i in range(w)], gf)
        return Subspace(u.ambient, full)
    return Subspace(u.ambient, nullspace(ann, gf, w))


def contains_point(sub: Subspace, pt, gf: FieldSpec) -> bool:
    v = list(pt)
    for row in sub.rows:
        lead = next(i for i, x in enumerate(row) if x)
        if v[lead]:
            f = v[lead]
            v = [gf.sub(vi, gf.mul(f, ri)) for vi, ri in zip(v, row)]
    return not any(v)


def contains_subspace(outer: Subspace, inner: Subspace, gf: FieldSpec) -> bool:
    return all(contains_point(outer, row, gf) for row in inner.rows)


def subspace_points(sub: Subspace, gf: FieldSpec) -> list:
    """All points of the subspace (normalized), via combinations of its rows."""
    out = []
    for coeffs in enumerate_points(sub.rank - 1, gf) if sub.rank else []:
        vec = [0] * (sub.ambient + 1)
        for c, row in zip(coeffs, sub.rows):
            if c:
                vec = [gf.add(v, gf.mul(c, r)) for v, r in zip(vec, row)]
        out.append(normalize(vec, gf))
    return out


def local_coords(sub: Subspace, pt, gf: FieldSpec):
    """Coordinates of pt in the row basis of sub, or None if outside."""
    v = list(pt)
    coeffs = [0] * sub.rank
    for i, row in enumerate(sub.rows):
        lead = next(j for j, x in enumerate(row) if x)
        if v[lead]:
            coeffs[i] = v[lead]
            f = v[lead]
            v = [gf.sub(vi, gf.mul(f, ri)) for vi, ri in zip(v, row)]
    if any(v):
        return None
    return normalize(coeffs, gf)


def from_local(sub: Subspace, coeffs, gf: FieldSpec) -> tuple:
    vec = [0] * (sub.ambient + 1)
    for c, row in zip(coeffs, sub.rows):
        if c:
            vec = [gf.add(v, gf.mul(c, r)) for v, r in zip(vec, row)]
    return normalize(vec, gf)


# --- frames and projectivities ---

def is_frame(points, n: int, gf: FieldSpec) -> bool:
    """m+2 points of PG(n, q), no n+1 of them in a hyperplane."""
    pts = list(points)
    if len(pts) != n + 2:
        raise WrongCount(f"a frame of PG({n},q) needs {n + 2} points, got {len(pts)}")
    if len(set(pts)) != len(pts):
        return False
    for drop in range(n + 2):
        subset = pts[:drop] + pts[drop + 1 :]
        if len(rref(subset, gf)) != n + 1:
            return False
    return True


@dataclass(frozen=True)
class Projectivity:
    """Invertible matrix acting on column coordinate vectors, canonically scaled."""

    matrix: tuple

    @property
    def n(self) -> int:
        return len(self.matrix) - 1


def _scale_canonical(matrix, gf):
    flat = [v for row in matrix for v in row]
    lead = next(v for v in flat if v)
    if lead == 1:
        return tuple(tuple(row) for row in matrix)
    f = gf.inv(lead)
    return tuple(tuple(gf.mul(f, v) for v in row) for row in matrix)


def projectivity(matrix, gf: FieldSpec) -> Projectivity:
    m = [list(r) for r in matrix]
    if len(rref(m, gf)) != len(m):
        raise ValueError("matrix is singular")
    return Projectivity(_scale_canonical(m, gf))


def apply(g: Projectivity, x, gf: FieldSpec) -> tuple:
    out = []
    for row in g.matrix:
        acc = 0
        for a, b in zip(row, x):
            acc = gf.add(acc, gf.mul(a, b))
        out.append(acc)
    return normalize(out, gf)


def compose(g: Projectivity, h: Projectivity, gf: FieldSpec) -> Projectivity:
    """The projectivity x -> g(h(x))."""
    n1 = len(g.matrix)
    prod = []
    for i in range(n1):
        row = []
        for j in range(n1):
            acc = 0
            for t in range(n1):
                acc = gf.add(acc, gf.mul(g.matrix[i][t], h.matrix[t][j]))
            row.append(acc)
        prod.append(row)
    return Projectivity(_scale_canonical(prod, gf))


def inverse(g: Projectivity, gf: FieldSpec) -> Projectivity:
    n = len(g.matrix)
    aug = [list(g.matrix[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(n):
        piv = next(i for i in range(r, n) if aug[i][c])
        aug[r], aug[piv] = aug[piv], aug[r]
        f = gf.inv(aug[r][c])
        aug[r] = [gf.mul(f, v) for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                gfct = aug[i][c]
                aug[i] = [gf.sub(vi, gf.mul(gfct, vr)) for vi, vr in zip(aug[i], aug[r])]
        r += 1
    return Projectivity(_scale_canonical([row[n:] for row in aug], gf))


def _frame_matrix(frame, gf):
    # columns are the frame's basis points scaled so their sum is the unit point
    n = len(frame) - 2
    base, unit = frame[: n + 1], frame[n + 1]
    aug = [[base[j][i] for j in range(n + 1)] + [unit[i]] for i in range(n + 1)]
    r = 0
    for c in range(n + 1):
        piv = next(i for i in range(r, n + 1) if aug[i][c])
        aug[r], aug[piv] = aug[piv], aug[r]
        f = gf.inv(aug[r][c])
        aug[r] = [gf.mul(f, v) for v in aug[r]]
        for i in range(n + 1):
            if i != r and aug[i][c]:
                gfct = aug[i][c]
                aug[i] = [gf.sub(vi, gf.mul(gfct, vr)) for vi, vr in zip(aug[i], aug[r])]
        r += 1
    lam = [aug[i][n + 1] for i in range(n + 1)]
    return [[gf.mul(lam[j], base[j][i]) for j in range(n + 1)] for i in range(n + 1)]


def frame_map(src_frame, dst_frame, gf: FieldSpec) -> Projectivity:
    """The unique projectivity carrying src_frame pointwise onto dst_frame."""
    n = len(src_frame) - 2
    if len(dst_frame) != n + 2:
        raise WrongCount("frames have different sizes")
    if not is_frame(src_frame, n, gf):
        raise NotAFrame("source is not a frame")
    if not is_frame(dst_frame, n, gf):
        raise NotAFrame("destination is not a frame")
    a_src = _frame_matrix(src_frame, gf)
    a_dst = _frame_matrix(dst_frame, gf)
    return compose(Projectivity(_scale_canonical(a_dst, gf)),
                   inverse(Projectivity(_scale_canonical(a_src, gf)), gf), gf)


def standard_frame(n: int) -> list:
    pts = [tuple(1 if j == i else 0 for j in range(n + 1)) for i in range(n + 1)]
    pts.append((1,) * (n + 1))
    return pts
