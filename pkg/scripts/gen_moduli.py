#!/usr/bin/env python3
"""Regenerate the fixed modulus table shipped in satgeom/moduli.py.

For every pair (p, e) in the covered range this script finds the monic
degree-e polynomial over GF(p) that is primitive (its root x generates the
multiplicative group of GF(p^e)) and whose little-endian coefficient tuple,
read as a base-p integer, is smallest.  The scan order makes the table a
pure function of (p, e), so rebuilding it can never change shipped fields.

Covered range: e = 1 for all primes p < 1024, and every (p, e) with e >= 2,
p < 1024 and p^e <= 2**20.

Usage: python scripts/gen_moduli.py > src/satgeom/moduli.py
"""

import sys

LIMIT = 2**20
PRIME_LIMIT = 1024


def primes_below(n):
    sieve = bytearray([1]) * n
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n) if sieve[i]]


def factorize(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomial arithmetic over GF(p), dense little-endian coeff lists ---

def poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return poly_rem(res, mod, p)


def poly_rem(a, mod, p):
    a = a[:]
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p) if p > 2 else mod[-1]
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            f = (c * inv_lead) % p
            for j, mj in enumerate(mod):
                a[i - dm + j] = (a[i - dm + j] - f * mj) % p
    a = a[:dm]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def poly_powmod(base, exp, mod, p):
    result = [1]
    base = poly_rem(base, mod, p)
    while exp:
        if exp & 1:
            result = poly_mulmod(result, base, mod, p)
        base = poly_mulmod(base, base, mod, p)
        exp >>= 1
    return result


def poly_gcd(a, b, p):
    a, b = a[:], b[:]
    while any(b):
        a, b = b, poly_mod_full(a, b, p)
    return a


def poly_mod_full(a, b, p):
    a = a[:]
    while len(b) > 1 and b[-1] == 0:
        b = b[:-1]
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p) if b[-1] != 1 else 1
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        c = a[-1]
        if c:
            f = (c * inv_lead) % p
            for j, bj in enumerate(b):
                a[da - db + j] = (a[da - db + j] - f * bj) % p
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if da == len(a) - 1:
            break
    return a


def is_irreducible(f, p, e):
    # x^(p^e) == x mod f, and x^(p^(e/r)) - x coprime to f for prime r | e
    x = [0, 1]
    xq = poly_powmod(x, p**e, f, p)
    if poly_sub(xq, x, p) != [0]:
        return False
    for r in factorize(e):
        xs = poly_powmod(x, p ** (e // r), f, p)
        g = poly_gcd(f, poly_sub(xs, x, p), p)
        if len(g) - 1 > 0:
            return False
    return True


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def x_is_primitive(f, p, e):
    q1 = p**e - 1
    x = [0, 1]
    if poly_powmod(x, q1, f, p) != [1]:
        return False
    for ell in factorize(q1):
        if poly_powmod(x, q1 // ell, f, p) == [1]:
            return False
    return True


def find_modulus(p, e):
    if e == 1:
        # smallest c with root -c a generator of GF(p)^*
        for c in range(p):
            g = (-c) % p
            if g == 0:
                continue
            if is_primitive_root(g, p):
                return (c, 1)
        raise AssertionError(p)
    for k in range(p**e):
        coeffs = []
        kk = k
        for _ in range(e):
            coeffs.append(kk % p)
            kk //= p
        f = coeffs + [1]
        if f[0] == 0:
            continue  # x divides f
        if not is_irreducible(f, p, e):
            continue
        if x_is_primitive(f, p, e):
            return tuple(f)
    raise AssertionError((p, e))


def is_primitive_root(g, p):
    for ell in factorize(p - 1):
        if pow(g, (p - 1) // ell, p) == 1:
            return False
    return True


def main():
    pairs = []
    for p in primes_below(PRIME_LIMIT):
        e = 1
        while p**e <= LIMIT or e == 1:
            pairs.append((p, e))
            e += 1
            if p**e > LIMIT:
                break
    out = sys.stdout
    out.write('"""Fixed table of monic primitive polynomials over GF(p).\n\n')
    out.write("MODULI[(p, e)] is the little-endian coefficient tuple (length e+1,\n")
    out.write("leading coefficient 1) of a monic degree-e polynomial over GF(p) whose\n")
    out.write("root x generates the multiplicative group of GF(p^e).  For each (p, e)\n")
    out.write("the entry is the scan-minimal such polynomial, so the table is a pure\n")
    out.write("function of (p, e).  Generated by scripts/gen_moduli.py; do not edit.\n")
    out.write('"""\n\nMODULI = {\n')
    for p, e in pairs:
        m = find_modulus(p, e)
        out.write(f"    ({p}, {e}): {m},\n")
    out.write("}\n")


if __name__ == "__main__":
    main()
