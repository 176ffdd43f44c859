"""The reduced Burau representation over cyclotomic fields, and projective
2x2 linear algebra.

Convention: the n=3 image of the squared generators is always taken at
parameter -q, so that with a caller-supplied q

    A = [[q^2, 1+q], [0, 1]],  B = [[1, 0], [-q-q^2, q^2]],
    C = (image of the centre) = -q^3 * Id.

``squared_images`` computes the products from the generator matrices and
checks them against these closed forms before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CyclotomicNumber
from .words import GroupWord, evaluate_word

__all__ = ["CycloMatrix", "ProjMatrix2", "burau_generator", "burau_eval",
           "squared_images", "projective_order"]

_ZERO = CyclotomicNumber.from_rational(0)
_ONE = CyclotomicNumber.from_rational(1)


class CycloMatrix:
    """Small dense matrix over a cyclotomic field."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    @staticmethod
    def identity(n: int) -> "CycloMatrix":
        return CycloMatrix([[_ONE if i == j else _ZERO for j in range(n)]
                            for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __mul__(self, other: "CycloMatrix") -> "CycloMatrix":
        n = self.size
        orows = other.rows
        out = []
        for r in self.rows:
            new = []
            for j in range(n):
                acc = r[0] * orows[0][j]
                for k in range(1, n):
                    if not r[k].is_zero:
                        acc = acc + r[k] * orows[k][j]
                new.append(acc)
            out.append(new)
        return CycloMatrix(out)

    def __pow__(self, e: int) -> "CycloMatrix":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloMatrix.identity(self.size)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, CycloMatrix) and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(self.rows)

    def det2(self) -> CyclotomicNumber:
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def inverse(self) -> "CycloMatrix":
        n = self.size
        if n == 2:
            (a, b), (c, d) = self.rows
            det = a * d - b * c
            dinv = det.inverse()
            return CycloMatrix([[d * dinv, -b * dinv], [-c * dinv, a * dinv]])
        # general case: Gauss-Jordan with exact pivoting
        aug = [list(r) + [(_ONE if i == j else _ZERO) for j in range(n)]
               for i, r in enumerate(self.rows)]
        for c in range(n):
            pivot = next((i for i in range(c, n) if not aug[i][c].is_zero), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            aug[c], aug[pivot] = aug[pivot], aug[c]
            pinv = aug[c][c].inverse()
            aug[c] = [v * pinv for v in aug[c]]
            for i in range(n):
                if i != c and not aug[i][c].is_zero:
                    f = aug[i][c]
                    aug[i] = [v - f * w for v, w in zip(aug[i], aug[c])]
        return CycloMatrix([r[n:] for r in aug])

    def is_scalar(self) -> bool:
        n = self.size
        d0 = self.rows[0][0]
        for i in range(n):
            for j in range(n):
                if i == j:
                    if not (self.rows[i][j] == d0):
                        return False
                elif not self.rows[i][j].is_zero:
                    return False
        return True

    def scalar_value(self) -> CyclotomicNumber | None:
        return self.rows[0][0] if self.is_scalar() else None

    def transpose_conjugate(self) -> "CycloMatrix":
        n = self.size
        return CycloMatrix([[self.rows[j][i].conjugate() for j in range(n)]
                            for i in range(n)])

    def to_json(self):
        return [[v.to_json() for v in r] for r in self.rows]

    def __str__(self):
        return "[" + "; ".join(", ".join(str(v) for v in r) for r in self.rows) + "]"

    def __repr__(self):
        return f"CycloMatrix({self})"


# ---------------------------------------------------------------------------

def burau_generator(n: int, j: int, q: CyclotomicNumber) -> CycloMatrix:
    """Image of the j-th standard generator of B_n, an (n-1)x(n-1) matrix."""
    if n < 2:
        raise ValueError("need at least two strands")
    if not 1 <= j <= n - 1:
        raise ValueError("generator index out of range")
    if q.is_zero:
        raise ValueError("parameter must be nonzero")
    size = n - 1
    rows = [[_ONE if r == c else _ZERO for c in range(size)] for r in range(size)]
    if size == 1:
        rows[0][0] = -q
        return CycloMatrix(rows)
    if j == 1:
        rows[0][0] = -q
        rows[0][1] = _ONE
    elif j == n - 1:
        rows[size - 1][size - 2] = q
        rows[size - 1][size - 1] = -q
    else:
        rows[j - 1][j - 2] = q
        rows[j - 1][j - 1] = -q
        rows[j - 1][j] = _ONE
    return CycloMatrix(rows)


def burau_eval(w: GroupWord, q: CyclotomicNumber) -> CycloMatrix:
    """Product of generator images along a braid word, at parameter q."""
    n = w.context.strands
    if n is None:
        raise ValueError("word does not live in a braid group")
    images = {name: burau_generator(n, i + 1, q)
              for i, name in enumerate(w.context.names)}
    return evaluate_word(w, images, CycloMatrix.identity(n - 1))


def squared_images(q: CyclotomicNumber) -> tuple[CycloMatrix, CycloMatrix, CycloMatrix]:
    """(A, B, C) for the n=3 representation at parameter -q.

    A and B are the images of the squared generators, C the image of the
    full twist; the computed products are checked against the closed
    forms before being returned.  At q = -1 the pair degenerates to the
    identity (the callers that care flag that case themselves).
    """
    if q.is_zero:
        raise ValueError("parameter must be nonzero")
    t = -q
    g1 = burau_generator(3, 1, t)
    g2 = burau_generator(3, 2, t)
    a = g1 * g1
    b = g2 * g2
    c = (g1 * g2) ** 3
    q2 = q * q
    closed_a = CycloMatrix([[q2, _ONE + q], [_ZERO, _ONE]])
    closed_b = CycloMatrix([[_ONE, _ZERO], [-q - q2, q2]])
    mq3 = -(q2 * q)
    closed_c = CycloMatrix([[mq3, _ZERO], [_ZERO, mq3]])
    if a != closed_a or b != closed_b or c != closed_c:
        raise AssertionError("substituted products disagree with closed forms")
    return a, b, c


def pair_word_eval(w: GroupWord, a: CycloMatrix, b: CycloMatrix) -> CycloMatrix:
    """Evaluate a word over a two-letter alphabet at the matrices (a, b)."""
    names = w.context.names
    if len(names) != 2:
        raise ValueError("expected a two-generator word")
    return evaluate_word(w, {names[0]: a, names[1]: b}, CycloMatrix.identity(a.size))


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProjMatrix2:
    """A 2x2 matrix considered up to nonzero scalars."""

    matrix: CycloMatrix

    def normalized(self) -> CycloMatrix:
        for r in self.matrix.rows:
            for v in r:
                if not v.is_zero:
                    s = v.inverse()
                    return CycloMatrix([[x * s for x in row] for row in self.matrix.rows])
        raise ZeroDivisionError("zero matrix has no projective class")

    def __eq__(self, other):
        if not isinstance(other, ProjMatrix2):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __mul__(self, other: "ProjMatrix2") -> "ProjMatrix2":
        return ProjMatrix2(self.matrix * other.matrix)

    def inverse(self) -> "ProjMatrix2":
        return ProjMatrix2(self.matrix.inverse())

    @property
    def is_trivial(self) -> bool:
        return self.matrix.is_scalar()


def projective_order(m: CycloMatrix | ProjMatrix2, bound: int):
    """Least n <= bound with m^n scalar, or None when the bound is exceeded."""
    if bound < 1:
        raise ValueError("bound must be positive")
    mat = m.matrix if isinstance(m, ProjMatrix2) else m
    power = mat
    for n in range(1, bound + 1):
        if power.is_scalar():
            return n
        power = power * mat
    return None
