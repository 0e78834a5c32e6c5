# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled coverage and syndrome kernels.

Same contract as _kernel_py.py; field arithmetic is table-driven (exp/log
for multiplication, xor for characteristic 2 and a dense table otherwise),
so the hot loops are pure C on int-encoded elements.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


cdef inline int fadd(int a, int b, int p, int q, int[:] add) nogil:
    if p == 2:
        return a ^ b
    return add[a * q + b]


cdef inline int fmul(int a, int b, int[:] exp, int[:] log) nogil:
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


cdef int _rref(int* m, int nrows, int w, int p, int q,
               int[:] exp, int[:] log, int[:] inv, int[:] add) nogil:
    """In-place reduced row echelon form; returns the rank."""
    cdef int r = 0, c, piv, i, j, f, lg, neg
    # the elimination subtracts f*row_r; precompute -1 = p-1 as scalar
    for c in range(w):
        piv = -1
        for i in range(r, nrows):
            if m[i * w + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(w):
                f = m[r * w + j]
                m[r * w + j] = m[piv * w + j]
                m[piv * w + j] = f
        f = inv[m[r * w + c]]
        if f != 1:
            for j in range(w):
                m[r * w + j] = fmul(m[r * w + j], f, exp, log)
        for i in range(nrows):
            if i != r and m[i * w + c] != 0:
                f = m[i * w + c]
                if p == 2:
                    for j in range(w):
                        m[i * w + j] = m[i * w + j] ^ fmul(f, m[r * w + j], exp, log)
                else:
                    neg = fmul(f, p - 1, exp, log)  # scalar -f
                    for j in range(w):
                        m[i * w + j] = add[m[i * w + j] * q + fmul(neg, m[r * w + j], exp, log)]
        r += 1
        if r == nrows:
            break
    return r


def cover_level(int[:] flat, int npts, int width, int ssize, int q, int p,
                int[:] exp, int[:] log, int[:] inv, int[:] add, long long[:] thetas):
    """Mark every point of every span of an ssize-subset of the given points."""
    cdef long long size = thetas[width]
    cov_obj = bytearray(size)
    cdef unsigned char[:] cov = cov_obj
    cdef int* comb = <int*> malloc(ssize * sizeof(int))
    cdef int* m = <int*> malloc(ssize * width * sizeof(int))
    cdef int* srows = <int*> malloc(ssize * q * width * sizeof(int))
    cdef int* vec = <int*> malloc(width * sizeof(int))
    cdef int* digits = <int*> malloc((ssize + 1) * sizeof(int))
    if not (comb and m and srows and vec and digits):
        raise MemoryError()
    cdef int i, j, rank, lead, d, li, f, lf, s, ell
    cdef long long tail, ctr, combos, idx
    cdef bint more = True
    try:
        for i in range(ssize):
            comb[i] = i
        while True:
            # copy the subset's rows and reduce
            for i in range(ssize):
                memcpy(m + i * width, &flat[comb[i] * width], width * sizeof(int))
            rank = _rref(m, ssize, width, p, q, exp, log, inv, add)
            # scalar multiples of each basis row
            for i in range(rank):
                for s in range(1, q):
                    for j in range(width):
                        srows[(i * q + s) * width + j] = fmul(s, m[i * width + j], exp, log)
            for lead in range(rank - 1, -1, -1):
                d = rank - 1 - lead
                combos = 1
                for i in range(d):
                    combos *= q
                for ctr in range(combos):
                    memcpy(vec, srows + (lead * q + 1) * width, width * sizeof(int))
                    tail = ctr
                    for i in range(d):
                        digits[i] = <int> (tail % q)
                        tail //= q
                    for i in range(d):
                        s = digits[i]
                        if s != 0:
                            ell = lead + 1 + i
                            if p == 2:
                                for j in range(width):
                                    vec[j] = vec[j] ^ srows[(ell * q + s) * width + j]
                            else:
                                for j in range(width):
                                    vec[j] = add[vec[j] * q + srows[(ell * q + s) * width + j]]
                    li = 0
                    while vec[li] == 0:
                        li += 1
                    f = vec[li]
                    if f != 1:
                        lf = log[inv[f]]
                        for j in range(li, width):
                            if vec[j] != 0:
                                vec[j] = exp[lf + log[vec[j]]]
                    tail = 0
                    for j in range(li + 1, width):
                        tail = tail * q + vec[j]
                    cov[thetas[width - 1 - li] + tail] = 1
            # next combination
            i = ssize - 1
            while i >= 0 and comb[i] == npts - ssize + i:
                i -= 1
            if i < 0:
                break
            comb[i] += 1
            for j in range(i + 1, ssize):
                comb[j] = comb[j - 1] + 1
    finally:
        free(comb)
        free(m)
        free(srows)
        free(vec)
        free(digits)
    return cov_obj


def covering_radius(int[:] moves, int nmoves, int r, int q, int p, int[:] add):
    """Breadth-first syndrome layering; returns the exact covering radius."""
    cdef long long total = 1
    cdef int i, j, k
    for i in range(r):
        total *= q
    cdef long long* powers = <long long*> malloc(r * sizeof(long long))
    cdef unsigned char* reached = <unsigned char*> malloc(total)
    cdef long long* frontier = <long long*> malloc(total * sizeof(long long))
    cdef long long* nxt = <long long*> malloc(total * sizeof(long long))
    cdef int* syn = <int*> malloc(r * sizeof(int))
    cdef int* new_syn = <int*> malloc(r * sizeof(int))
    if not (powers and reached and frontier and nxt and syn and new_syn):
        raise MemoryError()
    cdef long long nreached = 1, fsize = 1, nsize, val, idx, t
    cdef int radius = 0, mv
    cdef long long* tmp
    try:
        powers[r - 1] = 1
        for i in range(r - 2, -1, -1):
            powers[i] = powers[i + 1] * q
        for t in range(total):
            reached[t] = 0
        reached[0] = 1
        frontier[0] = 0
        while nreached < total:
            radius += 1
            nsize = 0
            for t in range(fsize):
                val = frontier[t]
                for i in range(r):
                    syn[i] = <int> ((val // powers[i]) % q)
                for mv in range(nmoves):
                    idx = 0
                    if p == 2:
                        for i in range(r):
                            idx += <long long> (syn[i] ^ moves[mv * r + i]) * powers[i]
                    else:
                        for i in range(r):
                            idx += <long long> add[syn[i] * q + moves[mv * r + i]] * powers[i]
                    if reached[idx] == 0:
                        reached[idx] = 1
                        nreached += 1
                        nxt[nsize] = idx
                        nsize += 1
            if nsize == 0:
                raise RuntimeError("syndrome layering stalled before covering the space")
            tmp = frontier
            frontier = nxt
            nxt = tmp
            fsize = nsize
    finally:
        free(powers)
        free(reached)
        free(frontier)
        free(nxt)
        free(syn)
        free(new_syn)
    return radius
