"""Finite field arithmetic for the tower GF(p) < GF(q') < GF(q).

Elements of GF(p^e) are plain ints encoding the coefficient vector of the
polynomial representation, little-endian in base p:

    value = c_0 + c_1*p + ... + c_{e-1}*p^(e-1)

so for p = 2 an element is simply the bit pattern of its coefficients.
Every field is built from the fixed modulus table in ``moduli.py``; the
residue class of the polynomial variable x is primitive for each shipped
modulus, which makes all derived data (exp/log tables, subfield images,
basis decompositions) a pure function of (p, e).

A ``FieldTower`` fixes the subfield GF(q') = GF(p^e') inside GF(q) =
GF(p^(e'*k)) as the fixed field of x -> x^(q'), realised concretely as the
powers of alpha^((q-1)/(q'-1)) together with 0, and carries the basis
{1, alpha, ..., alpha^(k-1)} of GF(q) over the embedded subfield.
"""

from __future__ import annotations

from .errors import NoModulus, NotPrime
from .moduli import MODULI

_ADD_TABLE_MAX = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """GF(p^e) with int-encoded elements and table-driven arithmetic.

    Attributes
    ----------
    p, e : characteristic and extension degree
    q : field order p^e
    modulus : little-endian coefficient tuple of the defining polynomial
    generator : the residue class of x (primitive by table construction)
    """

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise NotPrime(f"p={p} is not prime")
        if (p, e) not in MODULI:
            raise NoModulus(f"no shipped modulus for GF({p}^{e})")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = MODULI[(p, e)]
        if e == 1:
            self.generator = (-self.modulus[0]) % p
        else:
            self.generator = p  # encoding of the polynomial x
        self._build_tables()

    def _build_tables(self):
        q, p = self.q, self.p
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, self.generator)
        if x != 1:
            raise AssertionError(f"generator of GF({p}^{self.e}) is not primitive")
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self._exp = exp
        self._log = log
        if p != 2 and q <= _ADD_TABLE_MAX:
            self._add_table = [
                self._digit_add(a, b) for a in range(q) for b in range(q)
            ]
        else:
            self._add_table = None

    def _raw_mul(self, a: int, b: int) -> int:
        # schoolbook polynomial product mod modulus; only used to seed tables
        p, e = self.p, self.e
        da = self.coeffs(a)
        db = self.coeffs(b)
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for i in range(len(prod) - 1, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * self.modulus[j]) % p
        v = 0
        for c in reversed(prod[:e]):
            v = v * p + c
        return v

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        v, mult = 0, 1
        for _ in range(self.e):
            v += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return v

    # --- arithmetic ---

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a * self.q + b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.mul(a, self.p - 1)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(self.q - 1) - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n > 0 else 1
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    # --- representation helpers ---

    def coeffs(self, a: int) -> tuple:
        """Little-endian base-p digits of a, length e."""
        p = self.p
        out = []
        for _ in range(self.e):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        v = 0
        for c in reversed(list(cs)):
            v = v * self.p + c
        return v

    def elements(self):
        return range(self.q)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    def __repr__(self):
        return f"FieldSpec(GF({self.p}^{self.e}))" if self.e > 1 else f"FieldSpec(GF({self.p}))"


_SPEC_CACHE: dict = {}


def field_spec(p: int, e: int) -> FieldSpec:
    key = (p, e)
    if key not in _SPEC_CACHE:
        _SPEC_CACHE[key] = FieldSpec(p, e)
    return _SPEC_CACHE[key]


def spec_to_dict(fs: FieldSpec) -> dict:
    return {"p": fs.p, "degree": fs.e, "modulus": list(fs.modulus)}


def spec_from_dict(d: dict) -> FieldSpec:
    fs = field_spec(int(d["p"]), int(d["degree"]))
    if tuple(d["modulus"]) != fs.modulus:
        raise NoModulus(
            f"modulus {d['modulus']} does not match the shipped table entry for "
            f"GF({fs.p}^{fs.e})"
        )
    return fs


def _matinv_mod_p(rows, p):
    """Invert a square matrix over GF(p) by Gauss-Jordan."""
    n = len(rows)
    aug = [list(rows[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if aug[i][c] % p), None)
        if piv is None:
            raise AssertionError("singular matrix")
        aug[r], aug[piv] = aug[piv], aug[r]
        f = pow(aug[r][c], p - 2, p)
        aug[r] = [(v * f) % p for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] % p:
                g = aug[i][c]
                aug[i] = [(vi - g * vr) % p for vi, vr in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug]


class FieldTower:
    """GF(q) = GF(p^(e'*k)) together with its embedded subfield GF(q') = GF(p^e').

    ``sub`` is the abstract GF(q') (its own FieldSpec); ``embed``/``to_sub``
    translate between abstract subfield elements and the concrete subfield
    image inside GF(q).  ``decompose`` writes x = sum_j x_j alpha^j with every
    x_j in the subfield image.
    """

    def __init__(self, big: FieldSpec, sub: FieldSpec, k: int):
        self.big = big
        self.sub = sub
        self.k = k
        self.q_sub = sub.q
        self.alpha = big.generator
        q, q_sub = big.q, sub.q

        if q_sub == q:
            g_img = self.alpha
        else:
            g_img = big.pow(self.alpha, (q - 1) // (q_sub - 1))
        img = [0] + sorted(big.pow(g_img, t) for t in range(q_sub - 1))
        self.subfield_image = tuple(img)
        self.image_set = frozenset(img)

        # field isomorphism sub -> image: send the abstract generator to a
        # root of sub.modulus inside the image (first root in element order)
        root = None
        for cand in self.subfield_image:
            acc = 0
            for m_c in reversed(sub.modulus):
                acc = big.add(big.mul(acc, cand), m_c % big.p)
            if acc == 0:
                root = cand
                break
        if root is None:
            raise AssertionError("no root of the subfield modulus in the image")
        pows = [1]
        for _ in range(sub.e - 1):
            pows.append(big.mul(pows[-1], root))
        self._embed_pows = pows
        self._to_sub = {}
        for c in range(q_sub):
            self._to_sub[self.embed(c)] = c

        # basis {s_a * alpha^j} of GF(q) over GF(p); columns of M are its coeffs
        e = big.e
        cols = []
        apow = 1
        for _ in range(k):
            for s in pows:
                cols.append(big.coeffs(big.mul(s, apow)))
            apow = big.mul(apow, self.alpha)
        mat = [[cols[c][r] for c in range(e)] for r in range(e)]
        self._minv = _matinv_mod_p(mat, big.p)

    def embed(self, c: int) -> int:
        """Abstract GF(q') element -> its image in GF(q)."""
        big = self.big
        out = 0
        for digit, s in zip(self.sub.coeffs(c), self._embed_pows):
            if digit:
                out = big.add(out, big.mul(digit % big.p, s))
        return out

    def to_sub(self, x: int) -> int:
        """Subfield-image element of GF(q) -> abstract GF(q') element."""
        return self._to_sub[x]

    def is_in_subfield(self, x: int) -> bool:
        return self.big.pow(x, self.q_sub) == x

    def decompose_sub(self, x: int) -> tuple:
        """x = sum_j x_j alpha^j; return the x_j as abstract GF(q') elements."""
        big, p = self.big, self.big.p
        v = big.coeffs(x)
        sol = [sum(m * c for m, c in zip(mr, v)) % p for mr in self._minv]
        es = self.sub.e
        out = []
        for j in range(self.k):
            out.append(self.sub.from_coeffs(sol[j * es : (j + 1) * es]))
        return tuple(out)

    def decompose(self, x: int) -> tuple:
        """x = sum_j x_j alpha^j; return the x_j inside the subfield image."""
        return tuple(self.embed(c) for c in self.decompose_sub(x))

    def recompose(self, xs) -> int:
        big = self.big
        out = 0
        apow = 1
        for xj in xs:
            out = big.add(out, big.mul(xj, apow))
            apow = big.mul(apow, self.alpha)
        return out

    def __repr__(self):
        return f"FieldTower(GF({self.big.p}^{self.big.e}) over GF({self.big.p}^{self.sub.e}))"


_TOWER_CACHE: dict = {}


def build_tower(p: int, e_sub: int, k: int) -> FieldTower:
    """Tower GF(p^(e_sub*k)) over GF(p^e_sub), deterministic for fixed input."""
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    key = (p, e_sub, k)
    if key not in _TOWER_CACHE:
        _TOWER_CACHE[key] = FieldTower(field_spec(p, e_sub * k), field_spec(p, e_sub), k)
    return _TOWER_CACHE[key]


def split_prime_power(q: int) -> tuple:
    """q = p^e with p prime -> (p, e); raises NotPrime otherwise."""
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            if q != 1:
                raise NotPrime(f"{q * p**e} is not a prime power")
            return p, e
    raise NotPrime(f"{q} is not a prime power")


def decompose(x: int, t: FieldTower) -> tuple:
    return t.decompose(x)


def is_in_subfield(x: int, t: FieldTower) -> bool:
    return t.is_in_subfield(x)
