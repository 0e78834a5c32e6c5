"""Exhaustive saturation-radius certification and exact bound evaluators.

The certifier marks, for t = 0, 1, ..., every point lying in the span of
some (t+1)-subset of the candidate set, over a dense bitmap indexed by
enumeration rank.  The radius is the first level with full coverage; the
previous level's first uncovered point is kept as the minimality witness.

All size and bound formulas are evaluated in exact integer arithmetic;
only the general lower bound returns a float (comparisons against it
should allow 1e-12 slack).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernel
from . import projgeom as pg
from .errors import BadParams, NotSaturating, SizeLimit
from .gftower import FieldSpec
from .projgeom import theta


@dataclass(frozen=True)
class SaturationCertificate:
    radius: int
    witness_uncovered: tuple  # uncovered at radius-1; None when radius == 0
    coverage_stats: dict  # level -> number of covered points

    def to_dict(self):
        return {
            "radius": self.radius,
            "witness": list(self.witness_uncovered) if self.witness_uncovered else None,
            "sizes": {str(k): v for k, v in sorted(self.coverage_stats.items())},
        }


def _prepare(points, n, gf, cap):
    pts = []
    seen = set()
    for p in points:
        np_ = pg.normalize(p, gf)
        if np_ is None or len(np_) != n + 1:
            raise BadParams(f"bad point {p} for PG({n},{gf.q})")
        if np_ not in seen:
            seen.add(np_)
            pts.append(np_)
    if not pts:
        raise BadParams("empty point set")
    size = theta(n, gf.q)
    if size > (cap if cap is not None else pg.point_cap()):
        raise SizeLimit(f"PG({n},{gf.q}) has {size} points, over the cap")
    return pts, size


def saturation_radius(points, n, gf: FieldSpec, max_rho: int = None, cap: int = None) -> SaturationCertificate:
    """Smallest t such that every point lies in a span of at most t+1 set points."""
    pts, size = _prepare(points, n, gf, cap)
    if max_rho is None:
        max_rho = n
    stats = {}
    prev = None
    for t in range(max_rho + 1):
        cov = kernel.cover_level(pts, n, gf, t)
        covered = sum(cov)
        stats[t] = covered
        if covered == size:
            witness = None
            if t > 0:
                miss = prev.index(0)
                witness = pg.point_unindex(miss, n, gf)
            return SaturationCertificate(t, witness, stats)
        prev = cov
    raise NotSaturating(f"not saturating at any level up to {max_rho}: stats {stats}")


def saturates_outside(points, excluded: pg.Subspace, rho: int, n: int, gf: FieldSpec, cap: int = None) -> bool:
    """Coverage check at level rho restricted to points off the excluded subspace."""
    pts, size = _prepare(points, n, gf, cap)
    cov = kernel.cover_level(pts, n, gf, rho)
    for idx in range(size):
        if not cov[idx]:
            pt = pg.point_unindex(idx, n, gf)
            if not pg.contains_point(excluded, pt, gf):
                return False
    return True


# --- bound evaluators ---

def lower_bound(n: int, rho: int, q: int) -> float:
    """Strict lower bound on the size of any rho-saturating set of PG(n, q)."""
    if rho > n:
        raise BadParams("rho exceeds the dimension")
    return (rho + 1) / math.e * q ** ((n - rho) / (rho + 1)) + rho / 2


def _lam(n: int, rho: int) -> int:
    return min(rho, n - rho)


def _check_params(n, rho, q_sub, j=None):
    if not (0 < rho < n):
        raise BadParams(f"need 0 < rho < n, got rho={rho}, n={n}")
    if q_sub < 2:
        raise BadParams(f"q'={q_sub}")
    if j is not None and not (1 <= j <= rho + 1):
        raise BadParams(f"petal index {j} out of range")


def size_pj(n: int, rho: int, q_sub: int, j: int) -> int:
    """Exact size of the j-th petal's point contribution."""
    _check_params(n, rho, q_sub, j)
    lam = _lam(n, rho)
    if j <= rho + 1 - lam:
        return j * q_sub ** (n - rho) - (j - 1)
    total = j * q_sub ** (n - rho)
    for k in range(1, rho + 2 - j):
        total += (j - 1 + k) * q_sub ** (n - rho - k)
    for k in range(rho + 2 - j, lam):
        total += (rho - k) * q_sub ** (n - rho - k)
    return total - lam * (2 * rho - lam + 1) // 2


def size_total(n: int, rho: int, q_sub: int) -> int:
    """Sum of all petal sizes (the q'=2 patch set not included)."""
    _check_params(n, rho, q_sub)
    lam = _lam(n, rho)
    total = (rho + 1) * (rho + 2) // 2 * q_sub ** (n - rho)
    for j in range(1, lam):
        a = (lam * (2 * rho - lam + 2 * j + 1) - j * (3 * j + 1)) // 2
        total += a * q_sub ** (n - rho - j)
    c = (rho * (rho + 1) + lam * (lam - 1) * (2 * rho - lam + 1)) // 2
    return total - c


def size_p1_prime(n: int, rho: int, q_sub: int) -> int:
    """Size of the binary-only patch set."""
    _check_params(n, rho, q_sub)
    if q_sub != 2:
        return 0
    lam = _lam(n, rho)
    return (2 ** (lam - 1) - 1) * 2 ** (n - rho - lam + 1)


def a_tilde(rho: int, j: int) -> int:
    return (rho * (rho + 2 * j + 1) - j * (3 * j + 1)) // 2


def a_bar(n: int, rho: int, j: int) -> int:
    l = ell(n, rho)
    return (l * (2 * rho - l + 2 * j + 1) - j * (3 * j + 1)) // 2


def k_levels(n: int, rho: int) -> int:
    return -((n - rho) // -(rho + 1))  # ceil


def ell(n: int, rho: int) -> int:
    return n % (rho + 1) + 1


def main_bound(n: int, rho: int, q_sub: int) -> int:
    """Exact size of the constructed saturating set; falls back to the
    direct-sum baseline when n+1 is a multiple of rho+1."""
    _check_params(n, rho, q_sub)
    q = q_sub ** (rho + 1)
    if (n + 1) % (rho + 1) == 0:
        k = (n - rho) // (rho + 1)
        return (rho + 1) * theta(k, q)
    k = k_levels(n, rho)
    l = ell(n, rho)
    total = 0
    for i in range(1, k + 1):
        total += (rho + 1) * (rho + 2) // 2 * q_sub ** (n + 1 - i * (rho + 1))
    for i in range(1, k):
        for j in range(1, rho):
            total += a_tilde(rho, j) * q_sub ** (n + 1 - i * (rho + 1) - j)
    for j in range(1, l):
        total += a_bar(n, rho, j) * q_sub ** (l - j)
    total -= (k - 1) * rho * rho * (rho + 1) // 2
    total -= (rho * (rho + 1) + l * (l - 1) * (2 * rho - l + 1)) // 2
    if q_sub == 2:
        patch = 0
        for i in range(1, k):
            patch += 2 ** (n - rho + 2 - i * (rho + 1))
        total += (2 ** (rho - 1) - 1) * patch + 2**l - 2
    return total


def simple_bound(n: int, rho: int, q_sub: int) -> int:
    """The easy-to-read weakening of the main bound, valid for rho > 1."""
    _check_params(n, rho, q_sub)
    if rho <= 1:
        raise BadParams("the simplified bound needs rho > 1")
    return (rho + 1) * (rho + 2) // 2 * q_sub ** (n - rho) + rho * (rho + 1) * (
        q_sub ** (n - rho) - 1
    ) // (q_sub - 1)


def trivial_bound(n: int, rho: int, q: int) -> int:
    """(rho+1) * theta_k for n+1 a multiple of rho+1."""
    if (n + 1) % (rho + 1) != 0:
        raise BadParams("n+1 must be a multiple of rho+1")
    k = (n - rho) // (rho + 1)
    return (rho + 1) * theta(k, q)
