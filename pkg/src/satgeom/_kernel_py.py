"""Pure-Python coverage and syndrome kernels.

Same contract as the compiled extension in ``_satkernel.pyx``; the
dispatcher in ``kernel.py`` picks whichever is importable.  Everything
here works on int-encoded field elements and flat coordinate lists so the
two implementations stay interchangeable.
"""

from __future__ import annotations

import itertools

from .projgeom import theta


def _rref_rows(rows, q, exp, log, inv, sub):
    m = [list(r) for r in rows]
    w = len(m[0])
    r = 0
    for c in range(w):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        f = inv[m[r][c]]
        if f != 1:
            lf = log[f]
            m[r] = [exp[lf + log[v]] if v else 0 for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                lg = log[m[i][c]]
                row_r = m[r]
                m[i] = [
                    sub(vi, exp[lg + log[vr]]) if vr else vi
                    for vi, vr in zip(m[i], row_r)
                ]
        r += 1
        if r == len(m):
            break
    return m[:r]


def cover_level(points, n, gf, t, coverage=None) -> bytearray:
    """Mark every point of every span of a (t+1)-subset of `points`.

    Returns a bytearray indexed by enumeration rank over PG(n, gf.q).
    """
    q = gf.q
    exp, log, inv = gf._exp, gf._log, [0] + [gf.inv(a) for a in range(1, q)]
    if gf.p == 2:
        sub = lambda a, b: a ^ b
        addf = lambda a, b: a ^ b
    else:
        sub = gf.sub
        addf = gf.add
    size = theta(n, q)
    cov = coverage if coverage is not None else bytearray(size)
    npts = len(points)
    ssize = min(t + 1, npts)
    thetas = [theta(d, q) for d in range(-1, n + 1)]

    for subset in itertools.combinations(range(npts), ssize):
        rows = _rref_rows([points[i] for i in subset], q, exp, log, inv, sub)
        rank = len(rows)
        # scalar multiples of each basis row, precomputed once per subset
        srows = []
        for row in rows:
            tbl = [None] * q
            for s in range(1, q):
                ls = log[s]
                tbl[s] = [exp[ls + log[v]] if v else 0 for v in row]
            srows.append(tbl)
        width = n + 1
        for lead in range(rank - 1, -1, -1):
            base = rows[lead]
            for coeffs in itertools.product(range(q), repeat=rank - 1 - lead):
                vec = list(base)
                for ci, c in enumerate(coeffs):
                    if c:
                        srow = srows[lead + 1 + ci][c]
                        vec = [addf(a, b) for a, b in zip(vec, srow)]
                # normalize and index
                li = 0
                while not vec[li]:
                    li += 1
                f = vec[li]
                if f != 1:
                    lf = log[inv[f]]
                    vec = [exp[lf + log[v]] if v else 0 for v in vec]
                tail = 0
                for c in vec[li + 1 :]:
                    tail = tail * q + c
                cov[thetas[n - li] + tail] = 1
    return cov


def covering_radius_syndromes(columns, r, gf, cap) -> int:
    """Exact covering radius by breadth-first layering over all q^r syndromes."""
    q = gf.q
    total = q**r
    if total > cap:
        from .errors import SizeLimit

        raise SizeLimit(f"{total} syndromes exceed the cap {cap}")
    # syndrome -> integer in base q, most significant digit first
    def pack(vec):
        v = 0
        for c in vec:
            v = v * q + c
        return v

    reached = bytearray(total)
    reached[0] = 1
    nreached = 1
    # all scalar multiples of all columns, as coordinate vectors
    moves = sorted({tuple(gf.mul(s, c) for c in col) for col in columns for s in range(1, q)})
    frontier = [(0,) * r]
    radius = 0
    while nreached < total:
        radius += 1
        nxt = []
        for syn in frontier:
            for mv in moves:
                new = tuple(gf.add(a, b) for a, b in zip(syn, mv))
                idx = pack(new)
                if not reached[idx]:
                    reached[idx] = 1
                    nreached += 1
                    nxt.append(new)
        if not nxt:
            raise AssertionError("syndrome layering stalled before covering the space")
        frontier = nxt
    return radius
