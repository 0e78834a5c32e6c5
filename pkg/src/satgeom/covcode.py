"""Saturating sets as parity-check matrices of covering codes.

Columns of the parity-check matrix are the homogeneous coordinates of the
set's points, so a rho-saturating set of PG(n, q) of size s gives an
[s, s-(n+1)]_q code of covering radius rho+1.  The covering radius is
computed exactly by breadth-first layering over all q^r syndromes, and
densities are kept as exact rationals.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from . import kernel
from . import projgeom as pg
from .errors import BadParams, RankDeficient, UnsupportedFormat
from .gftower import FieldSpec, field_spec
from .saturate import SaturatingSet

DEFAULT_SYNDROME_CAP = 2**24


def syndrome_cap() -> int:
    return int(os.environ.get("SATGEOM_SIZE_CAP", DEFAULT_SYNDROME_CAP))


@dataclass(frozen=True)
class LinearCodeSpec:
    gf: FieldSpec
    n: int  # length
    r: int  # redundancy
    h: tuple  # r x n parity-check matrix, rows of length n
    claimed_radius: int = None


def parity_check_matrix(s: SaturatingSet) -> LinearCodeSpec:
    cols = s.points
    r = s.n + 1
    if len(pg.rref(cols, s.gf)) != r:
        raise RankDeficient("points do not span the ambient space")
    h = tuple(tuple(col[i] for col in cols) for i in range(r))
    return LinearCodeSpec(gf=s.gf, n=len(cols), r=r, h=h, claimed_radius=s.rho + 1)


def columns(c: LinearCodeSpec) -> list:
    return [tuple(c.h[i][j] for i in range(c.r)) for j in range(c.n)]


def covering_radius(c: LinearCodeSpec, cap: int = None) -> int:
    """Least R such that every syndrome is a sum of at most R scaled columns."""
    return kernel.covering_radius_syndromes(
        columns(c), c.r, c.gf, cap if cap is not None else syndrome_cap()
    )


def covering_density(n: int, r: int, radius: int, q: int) -> Fraction:
    """Ball-volume ratio; exactly 1 for perfect codes, > 1 otherwise."""
    if not 0 <= radius <= n:
        raise BadParams(f"radius {radius} outside 0..{n}")
    vol = sum((q - 1) ** i * math.comb(n, i) for i in range(radius + 1))
    return Fraction(vol, q**r)


def density_bound(radius: int, q_sub: int) -> float:
    """Asymptotic density bound for the constructed code family, radius > 2."""
    if radius <= 2:
        raise BadParams("the bound needs covering radius > 2")
    geo = sum(q_sub**-i for i in range(radius))
    return ((radius - 1) * radius) ** radius / math.factorial(radius) * geo**radius


# --- parity-check text format ---
# line 1: "p e n r"; then r rows of n entries; each entry is the
# little-endian base-p digit string of the element's coefficient vector

def format_parity_text(c: LinearCodeSpec) -> str:
    gf = c.gf
    if gf.p > 10:
        raise UnsupportedFormat("digit strings need p <= 10")
    lines = [f"{gf.p} {gf.e} {c.n} {c.r}"]
    for row in c.h:
        lines.append(" ".join("".join(str(d) for d in gf.coeffs(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_parity_text(text: str) -> LinearCodeSpec:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    try:
        p, e, n, r = (int(v) for v in lines[0].split())
    except (ValueError, IndexError) as exc:
        raise UnsupportedFormat(f"bad header: {lines[:1]}") from exc
    gf = field_spec(p, e)
    if len(lines) != r + 1:
        raise UnsupportedFormat(f"expected {r} matrix rows, got {len(lines) - 1}")
    h = []
    for ln in lines[1:]:
        entries = ln.split()
        if len(entries) != n:
            raise UnsupportedFormat(f"expected {n} entries per row")
        row = []
        for ent in entries:
            if len(ent) != e or any(not ch.isdigit() or int(ch) >= p for ch in ent):
                raise UnsupportedFormat(f"bad entry {ent!r}")
            row.append(gf.from_coeffs(int(ch) for ch in ent))
        h.append(tuple(row))
    return LinearCodeSpec(gf=gf, n=n, r=r, h=tuple(h))


def write_parity_text(c: LinearCodeSpec, path):
    with open(path, "w") as fh:
        fh.write(format_parity_text(c))


def read_parity_text(path) -> LinearCodeSpec:
    with open(path) as fh:
        return parse_parity_text(fh.read())
