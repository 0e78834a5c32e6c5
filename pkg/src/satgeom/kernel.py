"""Kernel dispatch: compiled extension when available, pure Python otherwise.

The exhaustive certifier spends essentially all of its time marking span
points, so that loop (plus the syndrome layering of the covering-radius
computation) lives in a small Cython extension.  Importing the package
never requires the extension: set SATGEOM_FORCE_PY=1 or just install
without a compiler to run on the pure-Python implementation.
"""

from __future__ import annotations

import os
from array import array

from . import _kernel_py
from .projgeom import theta

try:
    if os.environ.get("SATGEOM_FORCE_PY"):
        _satkernel = None
    else:
        from . import _satkernel
except ImportError:
    _satkernel = None

COMPILED = _satkernel is not None

_TABLE_CACHE: dict = {}


def _tables(gf):
    key = (gf.p, gf.e)
    if key not in _TABLE_CACHE:
        q = gf.q
        exp = array("i", gf._exp)
        log = array("i", gf._log)
        inv = array("i", [0] + [gf.inv(a) for a in range(1, q)])
        if gf.p == 2:
            add = array("i", [0])
        else:
            add = array("i", [gf.add(a, b) for a in range(q) for b in range(q)])
        _TABLE_CACHE[key] = (exp, log, inv, add)
    return _TABLE_CACHE[key]


def cover_level(points, n, gf, t):
    """Coverage bitmap for spans of all (t+1)-subsets of `points`."""
    if _satkernel is None:
        return _kernel_py.cover_level(points, n, gf, t)
    exp, log, inv, add = _tables(gf)
    flat = array("i", [c for p in points for c in p])
    thetas = array("q", [theta(d, gf.q) for d in range(-1, n + 1)])
    ssize = min(t + 1, len(points))
    return _satkernel.cover_level(
        flat, len(points), n + 1, ssize, gf.q, gf.p, exp, log, inv, add, thetas
    )


def covering_radius_syndromes(columns, r, gf, cap):
    """Exact covering radius by syndrome layering over all q^r syndromes."""
    if _satkernel is None:
        return _kernel_py.covering_radius_syndromes(columns, r, gf, cap)
    q = gf.q
    if q**r > cap:
        from .errors import SizeLimit

        raise SizeLimit(f"{q**r} syndromes exceed the cap {cap}")
    exp, log, inv, add = _tables(gf)
    moves = sorted({tuple(gf.mul(s, c) for c in col) for col in columns for s in range(1, q)})
    flat = array("i", [c for mv in moves for c in mv])
    return _satkernel.covering_radius(flat, len(moves), r, q, gf.p, add)
