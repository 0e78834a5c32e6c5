"""Constructions of small saturating sets of PG(n, q) for q = (q')^(rho+1).

The layered construction stacks min(rho, n-rho) flowers of shrinking petal
dimension over a chain of pistils, plants concurrent independent
subgeometry elements in each petal (their number governed by the index
map), and recurses into the top pistil's span until the residue is small
enough to be caught by the first petal.  Everything is anchored on
coordinate subspaces, so repeated builds are bit-identical:

    Sigma_i = <e_{rho+i}, ..., e_n>         pistils, i = 1..lambda
    tau_ij  = <e_{j-1}, Sigma_i>            petals, j = 1..rho+1
    C_i     = subfield points of Sigma_i
    F_ij    = e_{j-1} + e_{rho+i}           anchor points

The first element in every petal is the subfield-coordinate subgeometry,
which nests across layers; the remaining directions are chosen greedily in
a fixed order, validated for independence and for exact union size.  When
n+1 is a multiple of rho+1 the direct-sum baseline is at least as good and
is returned instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import projgeom as pg
from . import subgeom as sg
from . import verify, ylines
from .errors import BadParams, NotDivisible, OutOfDomain, SelectionFailed
from .gftower import FieldSpec, FieldTower, build_tower, split_prime_power


@dataclass(frozen=True)
class Flower:
    pistil: pg.Subspace
    petals: tuple


def is_flower(fl: Flower, gf: FieldSpec) -> bool:
    """Petals contain the pistil, pairwise-meet in it, and are independent."""
    s = fl.pistil.rank
    if any(p.rank != s + 1 for p in fl.petals):
        return False
    if any(not pg.contains_subspace(p, fl.pistil, gf) for p in fl.petals):
        return False
    rows = [r for p in fl.petals for r in p.rows]
    if len(pg.rref(rows, gf)) != s + len(fl.petals):
        return False
    m = fl.petals[0]
    for p in fl.petals[1:]:
        m = pg.meet(m, p, gf)
    return m.rows == fl.pistil.rows


@dataclass(frozen=True)
class FlowerStack:
    n: int
    rho: int
    lam: int
    tower: FieldTower
    sigmas: tuple  # Sigma_1 .. Sigma_lam
    cs: tuple  # C_1 .. C_lam
    flowers: tuple  # one Flower per layer
    anchors: tuple  # anchors[i-1][j-1] = F_ij
    petal_bases: tuple  # petal_bases[i-1][j-1] = ordered basis of tau_ij


@dataclass(frozen=True)
class SaturatingSet:
    n: int
    rho: int
    q_sub: int  # None when built without a subfield structure
    gf: FieldSpec
    points: tuple
    provenance: tuple

    def __len__(self):
        return len(self.points)


def f_index(j: int, i: int, rho: int, lam: int) -> int:
    """Number of concurrent independent elements in layer i of petal j."""
    if not 1 <= i <= lam:
        raise OutOfDomain(f"layer {i} outside 1..{lam}")
    if not rho + 2 - lam <= j <= rho + 1:
        raise OutOfDomain(f"petal {j} outside {rho + 2 - lam}..{rho + 1}")
    return j + i - 1 if j + i - 1 <= rho + 1 else rho + 2 - i


def _unit(n, i):
    return tuple(1 if t == i else 0 for t in range(n + 1))


def build_flower_stack(n: int, rho: int, tower: FieldTower) -> FlowerStack:
    if not 0 < rho < n:
        raise BadParams(f"need 0 < rho < n, got rho={rho}, n={n}")
    if tower.k != rho + 1:
        raise BadParams("tower extension degree must equal rho + 1")
    gf = tower.big
    lam = min(rho, n - rho)
    sigmas, cs, flowers, anchors, bases = [], [], [], [], []
    for i in range(1, lam + 1):
        sig_basis = [_unit(n, t) for t in range(rho + i, n + 1)]
        sigma = pg.span(sig_basis, gf)
        if len(sig_basis) == 1:
            c_i = ylines._point_subgeometry(sig_basis[0], tower)
        else:
            ones = tuple(1 if t >= rho + i else 0 for t in range(n + 1))
            c_i = sg.subgeometry_through_frame(sig_basis + [ones], tower)
        petals, f_row, b_row = [], [], []
        for j in range(1, rho + 2):
            basis = [_unit(n, j - 1)] + sig_basis
            petals.append(pg.span(basis, gf))
            b_row.append(tuple(basis))
            f_row.append(
                tuple(1 if t in (j - 1, rho + i) else 0 for t in range(n + 1))
            )
        sigmas.append(sigma)
        cs.append(c_i)
        flowers.append(Flower(pistil=sigma, petals=tuple(petals)))
        anchors.append(tuple(f_row))
        bases.append(tuple(b_row))
    return FlowerStack(
        n=n,
        rho=rho,
        lam=lam,
        tower=tower,
        sigmas=tuple(sigmas),
        cs=tuple(cs),
        flowers=tuple(flowers),
        anchors=tuple(anchors),
        petal_bases=tuple(bases),
    )


def _to_global(basis, local_pt, gf):
    vec = [0] * len(basis[0])
    for c, b in zip(local_pt, basis):
        if c:
            vec = [gf.add(v, gf.mul(c, bb)) for v, bb in zip(vec, b)]
    return pg.normalize(vec, gf)


def _std_directions(rho):
    return [tuple(1 if t == l else 0 for t in range(rho + 2)) for l in range(1, rho + 2)]


def build_petal_set(stack: FlowerStack, j: int, tower: FieldTower) -> list:
    """Points (with provenance tags) contributed by petal j, all layers."""
    n, rho, lam = stack.n, stack.rho, stack.lam
    if not 1 <= j <= rho + 1:
        raise BadParams(f"petal index {j}")
    gf = tower.big
    q_sub = tower.q_sub
    out = []
    acc = set()
    top_only = j <= rho + 1 - lam
    layers = [1] if top_only else range(1, lam + 1)
    for i in layers:
        f = j if top_only else f_index(j, i, rho, lam)
        m = n - rho - i + 1
        cfg = ylines.canonical_config(rho, m, q_sub)
        basis = stack.petal_bases[i - 1][j - 1]
        f_local = (1, 1) + (0,) * (m - 1)
        qm = q_sub**m
        std = _std_directions(rho)
        candidates = std[1:] + [d for d in cfg.d_points if d not in set(std)]
        chosen = [ylines.direction_sub_vector(cfg, std[0])]

        line1 = ylines.y_line(cfg, f_local, std[0])
        g_pts = [_to_global(basis, p, gf) for p in line1.points]
        new = [p for p in g_pts if p not in acc]
        if len(new) != (qm if i == 1 else 0):
            raise SelectionFailed(
                f"petal {j} layer {i}: subfield element contributes {len(new)} points"
            )
        out.extend((p, f"petal{j}.layer{i}.sub1") for p in new)
        acc.update(g_pts)

        k = 1
        for d in candidates:
            if k == f:
                break
            vec = ylines.direction_sub_vector(cfg, d)
            if len(pg.rref(chosen + [vec], tower.sub)) != len(chosen) + 1:
                continue
            line = ylines.y_line(cfg, f_local, d)
            g_pts = [_to_global(basis, p, gf) for p in line.points]
            new = [p for p in g_pts if p not in acc]
            if len(new) != qm - 1:
                continue
            k += 1
            chosen.append(vec)
            out.extend((p, f"petal{j}.layer{i}.sub{k}") for p in new)
            acc.update(g_pts)
        if k != f:
            raise SelectionFailed(f"petal {j} layer {i}: found {k} of {f} elements")
    return out


def _complement_rows(outer: pg.Subspace, inner: pg.Subspace, gf):
    rows = list(inner.rows)
    extra = []
    for r in outer.rows:
        if len(pg.rref(rows + [r], gf)) > len(rows):
            rows.append(r)
            extra.append(r)
    return extra


def build_p1_prime(stack: FlowerStack, tower: FieldTower) -> list:
    """The binary-only patch: one extra element per lower layer of petal 1,
    planted in a re-chosen petal chain whose spans meet the previous element
    only in the pistil subgeometry."""
    n, rho, lam = stack.n, stack.rho, stack.lam
    gf = tower.big
    q_sub = tower.q_sub
    if q_sub != 2 or lam < 2:
        return []
    out = []
    std = _std_directions(rho)

    m1 = n - rho
    cfg1 = ylines.canonical_config(rho, m1, q_sub)
    basis1 = stack.petal_bases[0][0]
    line1 = ylines.y_line(cfg1, (1, 1) + (0,) * (m1 - 1), std[0])
    prev_pts = {_to_global(basis1, p, gf) for p in line1.points} | stack.cs[0].pset
    prev_tau = stack.flowers[0].petals[0]

    for i in range(2, lam + 1):
        sigma = stack.sigmas[i - 1]
        c_i = stack.cs[i - 1]
        u = _complement_rows(prev_tau, sigma, gf)
        if len(u) != 2:
            raise SelectionFailed("petal chain lost a dimension")
        hyper = None
        for a, b in pg.enumerate_points(1, gf):
            vec = tuple(
                gf.add(gf.mul(a, x), gf.mul(b, y)) for x, y in zip(u[0], u[1])
            )
            cand = pg.span_of([sigma, vec], gf, n)
            trace = {p for p in prev_pts if pg.contains_point(cand, p, gf)}
            if trace == c_i.pset:
                hyper = cand
                hvec = pg.normalize(vec, gf)
                break
        if hyper is None:
            raise SelectionFailed(f"no admissible petal found at layer {i}")
        m = n - rho - i + 1
        cfg = ylines.canonical_config(rho, m, q_sub)
        basis = (hvec,) + tuple(sigma.rows)
        line = ylines.y_line(cfg, (1,) + (0,) * m, std[0])
        g_pts = [_to_global(basis, p, gf) for p in line.points]
        out.extend((p, f"p1prime.layer{i}") for p in g_pts)
        prev_pts = set(g_pts) | c_i.pset
        prev_tau = hyper
    return out


def build_saturating_set(n: int, rho: int, q_sub: int) -> SaturatingSet:
    """The full construction, recursing down the pistil chain; delegates to
    the direct-sum baseline when that bound is at least as good."""
    if not 0 < rho < n:
        raise BadParams(f"need 0 < rho < n, got rho={rho}, n={n}")
    p, e_sub = split_prime_power(q_sub)
    tower = build_tower(p, e_sub, rho + 1)
    gf = tower.big
    if (n + 1) % (rho + 1) == 0:
        triv = build_trivial_set(n, rho, gf)
        return SaturatingSet(n, rho, q_sub, gf, triv.points, triv.provenance)
    pts, tags = [], []
    seen = set()
    level, cur = 1, n
    while True:
        stack = build_flower_stack(cur, rho, tower)
        batch = []
        for j in range(1, rho + 2):
            batch.extend(build_petal_set(stack, j, tower))
        batch.extend(build_p1_prime(stack, tower))
        offset = n - cur
        for pt, tag in batch:
            g = (0,) * offset + pt
            if g in seen:
                raise SelectionFailed(f"duplicate point {g} across levels")
            seen.add(g)
            pts.append(g)
            tags.append(f"level{level}.{tag}")
        if cur - rho - 1 < rho:
            break
        cur -= rho + 1
        level += 1
    expected = verify.main_bound(n, rho, q_sub)
    if len(pts) != expected:
        raise SelectionFailed(f"built {len(pts)} points, evaluator says {expected}")
    return SaturatingSet(n, rho, q_sub, gf, tuple(pts), tuple(tags))


def build_trivial_set(n: int, rho: int, gf: FieldSpec, q_sub: int = None) -> SaturatingSet:
    """Union of rho+1 disjoint coordinate k-subspaces partitioning the basis."""
    if (n + 1) % (rho + 1) != 0:
        raise NotDivisible(f"n+1={n + 1} is not a multiple of rho+1={rho + 1}")
    k = (n - rho) // (rho + 1)
    pts, tags = [], []
    for b in range(rho + 1):
        lo = b * (k + 1)
        for ap in pg.enumerate_points(k, gf):
            vec = [0] * (n + 1)
            vec[lo : lo + k + 1] = ap
            pts.append(tuple(vec))
            tags.append(f"block{b}")
    return SaturatingSet(n, rho, q_sub, gf, tuple(pts), tuple(tags))
