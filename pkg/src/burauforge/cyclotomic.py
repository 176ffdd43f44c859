"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A value is a vector of integer coefficients over the power basis
1, z, ..., z^(phi(m)-1) modulo the m-th cyclotomic polynomial, together
with one shared positive denominator.  Conductors are normalised away
from the residue class 2 (mod 4), so the torsion units of the stored
field are exactly the signed powers of its root; multiplicative orders,
Galois action and equality are all decided exactly.

Rationals are detected on construction and collapse to conductor 1.
Reduction to the minimal cyclotomic subfield is performed lazily by
``canonical()`` (and by hashing / serialisation), never in the hot
arithmetic path; equality across conductors is an exact zero test of
the difference, which gives the same answer.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "CyclotomicNumber",
    "root_of_unity",
    "multiplicative_order",
    "galois_conjugates",
    "euler_phi",
    "cyclotomic_polynomial",
]


# ---------------------------------------------------------------------------
# small number theory

def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def euler_phi(m: int) -> int:
    phi = m
    for p in _prime_factors(m):
        phi -= phi // p
    return phi


def _divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, low degree first)

def _poly_divexact(a: list[int], b: tuple[int, ...]) -> list[int]:
    # exact division by a monic integer polynomial
    a = list(a)
    db = len(b) - 1
    out = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db]
        if c:
            out[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Monic integer coefficients of Phi_m, constant term first."""
    if m == 1:
        return (-1, 1)
    num = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m):
        if d < m:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[int, ...], ...]:
    # z^e reduced mod Phi_m, for e up to what products and Galois
    # substitutions can reach.
    d = euler_phi(m)
    phi = cyclotomic_polynomial(m)
    n_rows = max(m, 2 * d - 1)
    rows = []
    cur = [0] * d
    cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(1, n_rows):
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for i in range(d):
                nxt[i] -= top * phi[i]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


def _polymul(a: list[int], b: list[int]) -> list[int]:
    na = [i for i, v in enumerate(a) if v]
    nb = [i for i, v in enumerate(b) if v]
    if not na or not nb:
        return [0]
    if len(na) * len(nb) <= 192:
        out = [0] * (len(a) + len(b) - 1)
        for i in na:
            ai = a[i]
            for j in nb:
                out[i + j] += ai * b[j]
        return out
    # Kronecker substitution: one big-int multiply, balanced-digit decode
    ma = max(abs(a[i]) for i in na)
    mb = max(abs(b[j]) for j in nb)
    bits = (ma * mb * min(len(na), len(nb))).bit_length() + 2
    pa = 0
    for i in reversed(range(len(a))):
        pa = (pa << bits) + a[i]
    pb = 0
    for j in reversed(range(len(b))):
        pb = (pb << bits) + b[j]
    prod = pa * pb
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(len(a) + len(b) - 1):
        r = prod & mask
        if r >= half:
            r -= 1 << bits
        out.append(r)
        prod = (prod - r) >> bits
    assert prod == 0
    return out


def _reduce_mod_phi(m: int, vec: list[int]) -> list[int]:
    d = euler_phi(m)
    if len(vec) <= d:
        return vec + [0] * (d - len(vec))
    rows = _reduction_rows(m)
    out = vec[:d]
    for e in range(d, len(vec)):
        c = vec[e]
        if c:
            row = rows[e]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
    return out


def _content_normalise(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        den = -den
        num = [-v for v in num]
    g = den
    for v in num:
        if v:
            g = math.gcd(g, v)
            if g == 1:
                break
    if g > 1:
        den //= g
        num = [v // g for v in num]
    return tuple(num), den


# ---------------------------------------------------------------------------

class CyclotomicNumber:
    """An element of Q(zeta_m), exact and immutable."""

    __slots__ = ("conductor", "num", "den", "_canon", "_hash")

    def __init__(self, conductor: int, num: tuple[int, ...], den: int):
        # internal: inputs must already be normalised; use the factories
        self.conductor = conductor
        self.num = num
        self.den = den
        self._canon = None
        self._hash = None

    # -- construction -------------------------------------------------------

    @staticmethod
    def _make(m: int, num: Iterable[int], den: int) -> "CyclotomicNumber":
        vec = list(num)
        d = euler_phi(m)
        if len(vec) != d:
            vec = _reduce_mod_phi(m, vec)
        if m > 1 and not any(vec[1:]):
            return CyclotomicNumber._make(1, [vec[0]], den)
        if m % 4 == 2:
            return CyclotomicNumber._make(*_fold_even_conductor(m, vec), den)
        nv, nd = _content_normalise(vec, den)
        return CyclotomicNumber(m, nv, nd)

    @staticmethod
    def from_rational(value) -> "CyclotomicNumber":
        f = Fraction(value)
        return CyclotomicNumber._make(1, [f.numerator], f.denominator)

    @staticmethod
    def from_coefficients(m: int, coeffs) -> "CyclotomicNumber":
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) != euler_phi(m):
            raise ValueError("coefficient vector must have length phi(m)")
        den = math.lcm(*[f.denominator for f in fracs]) if fracs else 1
        num = [int(f * den) for f in fracs]
        return CyclotomicNumber._make(m, num, den)

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.num)

    # -- basic predicates ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.num)

    @property
    def is_rational(self) -> bool:
        return self.conductor == 1

    def rational_value(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError("not a rational number")
        return Fraction(self.num[0], self.den)

    # -- coercion ------------------------------------------------------------

    def _lift(self, target: int) -> tuple[int, ...]:
        # coefficient vector of self inside Q(zeta_target), target % m == 0
        m = self.conductor
        if target == m:
            return self.num
        t = target // m
        rows = _reduction_rows(target)
        d = euler_phi(target)
        out = [0] * d
        for k, c in enumerate(self.num):
            if c:
                row = rows[k * t]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    @staticmethod
    def _common(x: "CyclotomicNumber", y: "CyclotomicNumber"):
        m = math.lcm(x.conductor, y.conductor)
        return m, x._lift(m), y._lift(m)

    @staticmethod
    def _coerce(value) -> "CyclotomicNumber":
        if isinstance(value, CyclotomicNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return CyclotomicNumber.from_rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into a cyclotomic number")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        try:
            other = CyclotomicNumber._coerce(other)
        except TypeError:
            return NotImplemented
        m, a, b = CyclotomicNumber._common(self, other)
        den = math.lcm(self.den, other.den)
        sa, sb = den // self.den, den // other.den
        vec = [sa * u + sb * v for u, v in zip(a, b)]
        return CyclotomicNumber._make(m, vec, den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, tuple(-v for v in self.num), self.den)

    def __sub__(self, other):
        try:
            other = CyclotomicNumber._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return CyclotomicNumber._coerce(other) - self

    def __mul__(self, other):
        try:
            other = CyclotomicNumber._coerce(other)
        except TypeError:
            return NotImplemented
        if self.conductor == 1:
            c, d = self.num[0], self.den
            return CyclotomicNumber._make(
                other.conductor, [c * v for v in other.num], d * other.den)
        if other.conductor == 1:
            c, d = other.num[0], other.den
            return CyclotomicNumber._make(
                self.conductor, [c * v for v in self.num], d * self.den)
        m, a, b = CyclotomicNumber._common(self, other)
        vec = _polymul(list(a), list(b))
        return CyclotomicNumber._make(m, vec, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero:
            raise ZeroDivisionError("division by zero in a cyclotomic field")
        if self.conductor == 1:
            return CyclotomicNumber._make(1, [self.den], self.num[0])
        inv = _field_inverse(self.conductor, self.coefficients())
        return CyclotomicNumber.from_coefficients(self.conductor, inv)

    def __truediv__(self, other):
        try:
            other = CyclotomicNumber._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CyclotomicNumber._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber.from_rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- equality ------------------------------------------------------------

    def __eq__(self, other):
        try:
            other = CyclotomicNumber._coerce(other)
        except TypeError:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.num == other.num and self.den == other.den
        return (self - other).is_zero

    def __hash__(self):
        if self._hash is None:
            c = self.canonical()
            self._hash = hash((c.conductor, c.num, c.den))
        return self._hash

    # -- Galois action -------------------------------------------------------

    def galois(self, j: int) -> "CyclotomicNumber":
        """Image under zeta_m -> zeta_m^j; j must be coprime to the conductor."""
        m = self.conductor
        if m == 1:
            return self
        j %= m
        if math.gcd(j, m) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        rows = _reduction_rows(m)
        d = euler_phi(m)
        out = [0] * d
        for k, c in enumerate(self.num):
            if c:
                row = rows[(k * j) % m]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return CyclotomicNumber._make(m, out, self.den)

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(-1)

    # -- canonical (minimal conductor) form -----------------------------------

    def canonical(self) -> "CyclotomicNumber":
        if self._canon is not None:
            return self._canon
        x = self
        m = x.conductor
        for d in _divisors(m):
            if d == m or d % 4 == 2:
                continue
            if _fixed_by_subfield_group(x, d):
                x = _rewrite_in_subfield(x, d)
                break
        else:
            d = m
        if d != m:
            x = x.canonical()
        self._canon = x
        x._canon = x
        return x

    # -- torsion -------------------------------------------------------------

    def multiplicative_order(self):
        """Order of self in the unit group, or None when not a root of unity."""
        if self.is_zero:
            raise ValueError("zero has no multiplicative order")
        m = self.conductor
        if m == 1:
            v = self.rational_value()
            if v == 1:
                return 1
            if v == -1:
                return 2
            return None
        if self.den != 1:
            return None
        hit = _torsion_table(m).get(self.num)
        if hit is None:
            return None
        negated, j = hit
        if not negated:
            return m // math.gcd(m, j)
        if m % 2 == 0:
            j = (j + m // 2) % m
            return m // math.gcd(m, j)
        return 2 * (m // math.gcd(m, j))

    # -- serialisation and display --------------------------------------------

    def to_json(self) -> dict:
        c = self.canonical()
        return {
            "conductor": c.conductor,
            "coeffs": [str(Fraction(v, c.den)) for v in c.num],
        }

    @staticmethod
    def from_json(data: dict) -> "CyclotomicNumber":
        return CyclotomicNumber.from_coefficients(
            int(data["conductor"]), [Fraction(s) for s in data["coeffs"]])

    def __str__(self):
        c = self.canonical()
        if c.conductor == 1:
            return str(c.rational_value())
        parts = []
        for k, v in enumerate(c.num):
            if not v:
                continue
            coef = Fraction(v, c.den)
            if k == 0:
                parts.append(str(coef))
            else:
                mono = f"z{c.conductor}" if k == 1 else f"z{c.conductor}^{k}"
                if coef == 1:
                    parts.append(mono)
                elif coef == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{coef}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"CyclotomicNumber({self})"


# ---------------------------------------------------------------------------
# conductor folding, subfield rewriting, inversion

def _fold_even_conductor(m: int, vec: list[int]) -> tuple[int, list[int]]:
    # m = 2d with d odd: zeta_m = -zeta_d^((d+1)/2)
    d = m // 2
    half = (d + 1) // 2
    rows = _reduction_rows(d)
    dd = euler_phi(d)
    out = [0] * dd
    for k, c in enumerate(vec):
        if c:
            sign = -1 if k % 2 else 1
            row = rows[(k * half) % d]
            for i in range(dd):
                if row[i]:
                    out[i] += sign * c * row[i]
    return d, out


def _fixed_by_subfield_group(x: CyclotomicNumber, d: int) -> bool:
    m = x.conductor
    for j in range(1 + d, m, d):
        if math.gcd(j, m) == 1 and x.galois(j) != x:
            return False
    return True


def _rewrite_in_subfield(x: CyclotomicNumber, d: int) -> CyclotomicNumber:
    # Solve for coordinates of x over the power basis of Q(zeta_d);
    # existence is guaranteed by Galois fixedness.
    m = x.conductor
    t = m // d
    rows = _reduction_rows(m)
    dm, dd = euler_phi(m), euler_phi(d)
    cols = [rows[(t * s) % m] for s in range(dd)]
    target = [Fraction(v, x.den) for v in x.num]
    sol = _solve_rational([[Fraction(cols[c][r]) for c in range(dd)] for r in range(dm)], target)
    if sol is None:
        raise ArithmeticError("subfield rewrite failed despite Galois fixedness")
    return CyclotomicNumber.from_coefficients(d, sol)


def _solve_rational(matrix: list[list[Fraction]], rhs: list[Fraction]):
    # Gaussian elimination; returns one exact solution or None
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [matrix[r][:] + [rhs[r]] for r in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    sol = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][cols]
    return sol


def _field_inverse(m: int, coeffs: tuple[Fraction, ...]) -> list[Fraction]:
    # extended Euclid of the coefficient polynomial against Phi_m over Q
    phi = [Fraction(c) for c in cyclotomic_polynomial(m)]
    a = list(coeffs)
    b = phi

    def deg(p):
        for i in range(len(p) - 1, -1, -1):
            if p[i] != 0:
                return i
        return -1

    r0, r1 = b, a
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while deg(r1) > 0:
        d0, d1 = deg(r0), deg(r1)
        if d0 < d1:
            r0, r1 = r1, r0
            s0, s1 = s1, s0
            continue
        q = [Fraction(0)] * (d0 - d1 + 1)
        rem = r0[:]
        for i in range(d0 - d1, -1, -1):
            c = rem[i + d1] / r1[d1]
            q[i] = c
            if c:
                for j in range(d1 + 1):
                    rem[i + j] -= c * r1[j]
        qs = _polymul_frac(q, s1)
        s_new = [x - y for x, y in _zip_pad(s0, qs)]
        r0, r1 = r1, rem
        s0, s1 = s1, s_new
    if deg(r1) != 0:
        raise ZeroDivisionError("division by zero in a cyclotomic field")
    lead = r1[deg(r1)]
    inv = [v / lead for v in s1]
    d = euler_phi(m)
    # reduce the Bezout coefficient mod Phi_m
    if len(inv) > d:
        rows = _reduction_rows(m)
        out = inv[:d] + [Fraction(0)] * max(0, d - len(inv))
        for e in range(d, len(inv)):
            if inv[e]:
                row = rows[e]
                for i in range(d):
                    if row[i]:
                        out[i] += inv[e] * row[i]
        inv = out
    return inv + [Fraction(0)] * (d - len(inv))


def _polymul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return zip(a, b)


@lru_cache(maxsize=None)
def _torsion_table(m: int) -> dict[tuple[int, ...], tuple[bool, int]]:
    # every root of unity in Q(zeta_m) is +-zeta_m^j
    rows = _reduction_rows(m)
    table: dict[tuple[int, ...], tuple[bool, int]] = {}
    for j in range(m):
        row = rows[j]
        table.setdefault(row, (False, j))
        table.setdefault(tuple(-v for v in row), (True, j))
    return table


# ---------------------------------------------------------------------------
# public operations

def root_of_unity(m: int, j: int) -> CyclotomicNumber:
    """zeta_m^j at its minimal conductor."""
    if m < 1:
        raise ValueError("conductor must be positive")
    j %= m
    g = math.gcd(j, m)
    n, e = m // g, j // g
    if n == 1:
        return CyclotomicNumber.from_rational(1)
    if n % 4 == 2:
        # zeta_2d = -zeta_d^((d+1)/2) for odd d; e is odd since gcd(e, n) = 1
        n2 = n // 2
        e2 = (e * ((n2 + 1) // 2)) % n2
        return -root_of_unity(n2, e2)
    rows = _reduction_rows(n)
    return CyclotomicNumber._make(n, list(rows[e]), 1)


def multiplicative_order(x: CyclotomicNumber):
    return x.multiplicative_order()


def galois_conjugates(x: CyclotomicNumber) -> list[CyclotomicNumber]:
    """Orbit of x under the Galois group of its minimal field, ascending exponent."""
    c = x.canonical()
    m = c.conductor
    return [c.galois(j) for j in range(1, m + 1) if math.gcd(j, m) == 1]
