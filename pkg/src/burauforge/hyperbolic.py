"""Invariant Hermitian forms, an exact short-relation oracle, and
interval-certified ping-pong freeness certificates.

The form J with M* J M = J for both generator images is solved exactly
over the cyclotomic field (conjugation is zeta -> zeta^-1, which is
complex conjugation under every embedding); only its signature depends
on the chosen embedding.  For an indefinite form the null circle
{ v* J v = 0 } is a genuine round circle preserved by the whole group,
so ping-pong runs directly on that circle: arcs are given by rational
fractions of a turn, endpoint images are enclosed in balls, and each
inclusion is certified by two orientation determinants whose signs are
bounded away from zero.

Floating point appears only inside the certificate *search*; every
accepted certificate is re-derived from exact data through ball
arithmetic, and ``verify_certificate`` repeats that from scratch at
doubled precision.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .balls import ComplexBall, PrecisionExhausted, embed, sqrt_lower, sqrt_upper, unit_turn
from .burau import CycloMatrix, pair_word_eval, projective_order, squared_images
from .cyclotomic import CyclotomicNumber, root_of_unity
from .reports import ClaimReport
from .words import GroupWord, free_group, parse_word, word

__all__ = [
    "HermitianForm2", "invariant_form", "short_relation_oracle",
    "PingPongConfig", "PingPongCertificate", "ping_pong_certify",
    "verify_certificate", "PrecisionExhausted",
]

PAIR_CONTEXT = free_group(("A", "B"))
_ORACLE_CONTEXT = free_group(("x", "y"))


# ---------------------------------------------------------------------------
# invariant Hermitian forms

@dataclass(frozen=True)
class HermitianForm2:
    matrix: CycloMatrix
    signature: str          # "indefinite" | "definite" | "degenerate"
    embedding: int


def _nullspace(rows: list[list[CyclotomicNumber]]) -> list[list[CyclotomicNumber]]:
    # exact kernel of a matrix over the field
    zero = CyclotomicNumber.from_rational(0)
    one = CyclotomicNumber.from_rational(1)
    m = [row[:] for row in rows]
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if not m[i][c].is_zero), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero:
                f = m[i][c]
                m[i] = [v - f * w for v, w in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][fc]
        basis.append(vec)
    return basis


def _dagger(m: CycloMatrix) -> CycloMatrix:
    return m.transpose_conjugate()


def invariant_form(q: CyclotomicNumber, embedding: int) -> HermitianForm2 | None:
    """Hermitian J with A* J A = J and B* J B = J, or None if only degenerate.

    The linear system is solved exactly; the signature tag is certified
    at the requested embedding by excluding zero from an enclosure of
    det J (an exactly-real field element).
    """
    a, b, _ = squared_images(q)
    rows = []
    for mat in (a, b):
        md = _dagger(mat)
        for r in range(2):
            for s in range(2):
                # coefficient of J_ij in (M* J M - J)_rs
                row = []
                for i in range(2):
                    for j in range(2):
                        coef = md[r, i] * mat[j, s]
                        if i == r and j == s:
                            coef = coef - 1
                        row.append(coef)
                rows.append(row)
    basis = _nullspace(rows)
    if not basis:
        return None
    zeta = root_of_unity(q.conductor if q.conductor >= 3 else 4, 1)
    candidates = []
    for vec in basis:
        j_mat = CycloMatrix([[vec[0], vec[1]], [vec[2], vec[3]]])
        herm = _hermitian_part(j_mat)
        if herm is not None:
            candidates.append(herm)
        scaled = CycloMatrix([[zeta * v for v in row] for row in j_mat.rows])
        herm2 = _hermitian_part(scaled)
        if herm2 is not None:
            candidates.append(herm2)
    best = None
    for j_mat in candidates:
        det = j_mat.det2()
        if not det.is_zero:
            best = (j_mat, det)
            break
    if best is None:
        return None
    j_mat, det = best
    _check_invariance(j_mat, (a, b))
    sign = _real_sign_certified(det, embedding)
    return HermitianForm2(j_mat, "indefinite" if sign < 0 else "definite", embedding)


def _hermitian_part(m: CycloMatrix) -> CycloMatrix | None:
    summed = CycloMatrix([
        [m[0, 0] + m[0, 0].conjugate(), m[0, 1] + m[1, 0].conjugate()],
        [m[1, 0] + m[0, 1].conjugate(), m[1, 1] + m[1, 1].conjugate()],
    ])
    if all(v.is_zero for row in summed.rows for v in row):
        return None
    return summed


def _check_invariance(j_mat: CycloMatrix, mats) -> None:
    for m in mats:
        lhs = _dagger(m) * j_mat * m
        if lhs != j_mat:
            raise AssertionError("form is not invariant; implementation bug")


def _real_sign_certified(x: CyclotomicNumber, embedding: int) -> int:
    if x.conjugate() != x:
        raise AssertionError("expected an exactly-real field element")
    bits = 32
    for _ in range(10):
        ball = embed(x, embedding, bits)
        if ball.re - ball.rad > 0:
            return 1
        if ball.re + ball.rad < 0:
            return -1
        bits *= 2
    raise PrecisionExhausted("sign of the form determinant undecided")


# ---------------------------------------------------------------------------
# exact short-relation oracle

def short_relation_oracle(x_word: GroupWord, y_word: GroupWord,
                          q: CyclotomicNumber, max_len: int) -> GroupWord | None:
    """First projectively trivial reduced word in x, y of length <= max_len.

    Enumeration is breadth-first, letters ordered x, x^-1, y, y^-1, so the
    reported witness is deterministic.  All evaluation is exact; returns
    None if no relation exists at this length.
    """
    if max_len < 1:
        raise ValueError("length bound must be positive")
    a, b, _ = squared_images(q)
    x_mat = pair_word_eval(x_word, a, b)
    y_mat = pair_word_eval(y_word, a, b)
    letters = [
        ((0, 1), x_mat), ((0, -1), x_mat.inverse()),
        ((1, 1), y_mat), ((1, -1), y_mat.inverse()),
    ]
    frontier: list[tuple[tuple[tuple[int, int], ...], CycloMatrix]] = [((), CycloMatrix.identity(2))]
    for _ in range(max_len):
        new_frontier = []
        for sylls, mat in frontier:
            last = sylls[-1] if sylls else None
            for (gen, sign), letter_mat in letters:
                if last is not None and last[0] == gen and last[1] == -sign:
                    continue
                nxt = mat * letter_mat
                nxt_sylls = sylls + ((gen, sign),)
                if nxt.is_scalar():
                    return word(_ORACLE_CONTEXT, nxt_sylls)
                new_frontier.append((nxt_sylls, nxt))
        frontier = new_frontier
    return None


# ---------------------------------------------------------------------------
# ping-pong on the invariant circle

@dataclass(frozen=True)
class PingPongConfig:
    max_power: int = 4
    precision: int = 96
    # (repelling-arc, padding) half-widths as fractions of the least gap
    # between the four fixed points; tried in order
    shrink_ladder: tuple[tuple[Fraction, Fraction], ...] = (
        (Fraction(1, 3), Fraction(1, 4)),
        (Fraction(1, 4), Fraction(1, 6)),
        (Fraction(1, 8), Fraction(1, 12)),
    )
    order_bound: int = 120


@dataclass(frozen=True)
class PingPongCertificate:
    """Freeness witness for <x^a, y^b> acting on the invariant circle.

    Arcs are closed and given by rational fractions of a turn
    (counterclockwise from the first endpoint to the second); the margin
    is the least rational gap between consecutive arcs.  Verification
    re-derives every inclusion from the exact data in this record.
    """

    q: CyclotomicNumber
    embedding: int
    x_word: str
    y_word: str
    power_x: int
    power_y: int
    arcs: dict            # keys x_att, x_rep, y_att, y_rep -> [turn, turn]
    margin: Fraction
    precision: int

    def to_json(self) -> dict:
        return {
            "q": self.q.to_json(),
            "embedding": self.embedding,
            "x_word": self.x_word,
            "y_word": self.y_word,
            "power_x": self.power_x,
            "power_y": self.power_y,
            "arcs": {k: [str(v[0]), str(v[1])] for k, v in self.arcs.items()},
            "margin": str(self.margin),
            "precision": self.precision,
        }

    @staticmethod
    def from_json(data: dict) -> "PingPongCertificate":
        return PingPongCertificate(
            q=CyclotomicNumber.from_json(data["q"]),
            embedding=int(data["embedding"]),
            x_word=data["x_word"],
            y_word=data["y_word"],
            power_x=int(data["power_x"]),
            power_y=int(data["power_y"]),
            arcs={k: (Fraction(v[0]), Fraction(v[1])) for k, v in data["arcs"].items()},
            margin=Fraction(data["margin"]),
            precision=int(data["precision"]),
        )

    def dump(self, path: str):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2)

    @staticmethod
    def load(path: str) -> "PingPongCertificate":
        with open(path) as fh:
            return PingPongCertificate.from_json(json.load(fh))


@dataclass(frozen=True)
class _Circle:
    centre: CyclotomicNumber        # -J12 / J11, an exact field element
    radius_sq: CyclotomicNumber     # -det J / J11^2, exactly real and positive


def _invariant_circle(form: HermitianForm2) -> _Circle:
    j = form.matrix
    alpha = j[0, 0]
    if alpha.is_zero:
        raise PrecisionExhausted("circle chart degenerate: J11 = 0")
    centre = -(j[0, 1]) / alpha
    radius_sq = -(j.det2()) / (alpha * alpha)
    return _Circle(centre, radius_sq)


class _CircleBalls:
    """Centre and radius enclosures of the invariant circle at one precision."""

    def __init__(self, circle: _Circle, embedding: int, bits: int):
        self.bits = bits
        self.centre = embed(circle.centre, embedding, bits)
        rsq = embed(circle.radius_sq, embedding, bits)
        lo = rsq.re - rsq.rad
        hi = rsq.re + rsq.rad
        if lo <= 0:
            raise PrecisionExhausted("radius enclosure touches zero")
        r_lo, r_hi = sqrt_lower(lo), sqrt_upper(hi)
        self.radius = ComplexBall((r_lo + r_hi) / 2, Fraction(0), (r_hi - r_lo) / 2)

    def point(self, t: Fraction) -> ComplexBall:
        return (self.centre + self.radius * unit_turn(t, self.bits)).round_to(self.bits)


def _mobius(mat_balls, p: ComplexBall, bits: int) -> ComplexBall:
    # dyadic rounding after each stage keeps denominators near the working
    # precision; the enclosure property is preserved by round_to
    (a, b), (c, d) = mat_balls
    num = (a * p + b).round_to(bits)
    den = (c * p + d).round_to(bits)
    return (num / den).round_to(bits)


def _embed_matrix(m: CycloMatrix, embedding: int, bits: int):
    return tuple(tuple(embed(v, embedding, bits) for v in row) for row in m.rows)


def _orient_positive(p: ComplexBall, q_: ComplexBall, r: ComplexBall) -> bool | None:
    # sign of the cross product (q - p) x (r - p); None when undecided
    u = q_ - p
    v = r - p
    # real ball of u.re * v.im - u.im * v.re
    centre = u.re * v.im - u.im * v.re
    bound_u = sqrt_upper(u.re * u.re + u.im * u.im)
    bound_v = sqrt_upper(v.re * v.re + v.im * v.im)
    rad = bound_u * v.rad + bound_v * u.rad + u.rad * v.rad
    if centre - rad > 0:
        return True
    if centre + rad < 0:
        return False
    return None


def _arcs_disjoint_margin(arcs: dict) -> Fraction | None:
    """Least counterclockwise gap between the four closed arcs, or None
    when they are not pairwise disjoint.

    Walking the arcs in start order, lengths plus gaps must tile the full
    circle exactly; anything else means two arcs overlap or nest.
    """
    items = sorted(arcs.values(), key=lambda se: se[0] % 1)
    margin = None
    covered = Fraction(0)
    for (s1, e1), (s2, _) in zip(items, items[1:] + items[:1]):
        length = (e1 - s1) % 1
        gap = (s2 - e1) % 1
        if gap == 0:
            return None
        covered += length + gap
        margin = gap if margin is None else min(margin, gap)
    if covered != 1:
        return None
    return margin


def _check_inclusions(cert: PingPongCertificate, bits: int) -> bool:
    """Re-derive the four mapping-table inclusions with ball arithmetic."""
    a, b, _ = squared_images(cert.q)
    x_mat = pair_word_eval(parse_word(PAIR_CONTEXT, cert.x_word), a, b) ** cert.power_x
    y_mat = pair_word_eval(parse_word(PAIR_CONTEXT, cert.y_word), a, b) ** cert.power_y
    form = invariant_form(cert.q, cert.embedding)
    if form is None or form.signature != "indefinite":
        return False
    balls = _CircleBalls(_invariant_circle(form), cert.embedding, bits)
    checks = [
        (x_mat, cert.arcs["x_rep"], cert.arcs["x_att"]),
        (x_mat.inverse(), cert.arcs["x_att"], cert.arcs["x_rep"]),
        (y_mat, cert.arcs["y_rep"], cert.arcs["y_att"]),
        (y_mat.inverse(), cert.arcs["y_att"], cert.arcs["y_rep"]),
    ]
    for mat, (rep_s, rep_e), (att_s, att_e) in checks:
        mb = _embed_matrix(mat, cert.embedding, bits)
        # the complement of the repelling arc is the ccw arc (rep_e, rep_s);
        # its image is the ccw arc between the images of its endpoints
        w1 = _mobius(mb, balls.point(rep_e), bits)
        w2 = _mobius(mb, balls.point(rep_s), bits)
        a1 = balls.point(att_s)
        a2 = balls.point(att_e)
        first = _orient_positive(a1, w1, w2)
        second = _orient_positive(a1, w2, a2)
        if first is None or second is None:
            raise PrecisionExhausted("inclusion sign undecided")
        if not (first and second):
            return False
    return True


def _numeric_value(v: CyclotomicNumber, embedding: int) -> complex:
    root = cmath.exp(2j * cmath.pi * embedding / v.conductor)
    acc = 0j
    for c in reversed(v.coefficients()):
        acc = acc * root + float(c)
    return acc


def _numeric_matrix(m: CycloMatrix, embedding: int):
    return [[_numeric_value(v, embedding) for v in row] for row in m.rows]


def _fixed_turns(mat, circle_centre: complex, circle_radius: float) -> tuple[float, float] | None:
    # attracting and repelling fixed points as fractions of a turn
    (a, b), (c, d) = mat
    tr = a + d
    disc = cmath.sqrt(tr * tr - 4 * (a * d - b * c))
    lams = [(tr + disc) / 2, (tr - disc) / 2]
    lams.sort(key=abs, reverse=True)
    if abs(abs(lams[0]) - abs(lams[1])) < 1e-9:
        return None  # not hyperbolic at this embedding
    pts = []
    for lam in lams:
        if abs(b) > 1e-12 or abs(lam - a) > 1e-12:
            v = (b, lam - a) if abs(b) > 1e-12 else (lam - d, c)
        else:
            v = (lam - d, c)
        if abs(v[1]) < 1e-13:
            return None
        z = v[0] / v[1]
        turn = cmath.phase(z - circle_centre) / (2 * math.pi) % 1.0
        if abs(abs(z - circle_centre) - circle_radius) > 1e-6 * max(1.0, circle_radius):
            return None
        pts.append(turn)
    return pts[0], pts[1]  # attracting first


def ping_pong_certify(x_word: GroupWord, y_word: GroupWord, q: CyclotomicNumber,
                      embedding: int, config: PingPongConfig = PingPongConfig()
                      ) -> PingPongCertificate | None:
    """Search for a certified ping-pong configuration for powers of the pair.

    Returns the first certificate found over powers (a, b) up to
    config.max_power and the configured aperture ladder, or None when the
    search space is exhausted.  Raises PrecisionExhausted only when an
    inclusion could not be decided at any tried precision.
    """
    form = invariant_form(q, embedding)
    if form is None or form.signature != "indefinite":
        raise ValueError("no indefinite invariant form at this embedding")
    a_mat, b_mat, _ = squared_images(q)
    x_mat = pair_word_eval(x_word, a_mat, b_mat)
    y_mat = pair_word_eval(y_word, a_mat, b_mat)
    for mat, name in ((x_mat, "x"), (y_mat, "y")):
        if mat.is_scalar():
            raise ValueError(f"generator {name} is projectively trivial")
        if projective_order(mat, config.order_bound) is not None:
            raise ValueError(f"generator {name} has finite projective order")
    circle = _invariant_circle(form)
    centre_n = _numeric_value(circle.centre, embedding)
    rsq_n = _numeric_value(circle.radius_sq, embedding).real
    if rsq_n <= 0:
        raise ValueError("invariant circle has nonpositive radius at this embedding")
    radius_n = math.sqrt(rsq_n)

    undecided = False
    for power in range(1, config.max_power + 1):
        for ax, by in [(i, j) for i in range(1, power + 1) for j in range(1, power + 1)
                       if max(i, j) == power]:
            xa = x_mat ** ax
            yb = y_mat ** by
            xa_n = _numeric_matrix(xa, embedding)
            yb_n = _numeric_matrix(yb, embedding)
            fx = _fixed_turns(xa_n, centre_n, radius_n)
            fy = _fixed_turns(yb_n, centre_n, radius_n)
            if fx is None or fy is None:
                continue
            for shrink, pad in config.shrink_ladder:
                arcs = _adaptive_arcs(xa_n, yb_n, fx, fy, centre_n, radius_n, shrink, pad)
                if arcs is None:
                    continue
                margin = _arcs_disjoint_margin(arcs)
                if margin is None or margin <= 0:
                    continue
                for bits in (config.precision, 2 * config.precision):
                    cert = PingPongCertificate(
                        q=q, embedding=embedding,
                        x_word=str(x_word), y_word=str(y_word),
                        power_x=ax, power_y=by, arcs=arcs,
                        margin=margin, precision=bits,
                    )
                    try:
                        if _check_inclusions(cert, bits):
                            return cert
                        break  # decided negative: try the next shrink level
                    except PrecisionExhausted:
                        undecided = True
    if undecided:
        raise PrecisionExhausted("inclusions undecided at the configured precision")
    return None


_ARC_DENOM = 1 << 16


def _adaptive_arcs(xa_n, yb_n, fx, fy, centre_n: complex, radius_n: float,
                   shrink: Fraction, pad: Fraction) -> dict | None:
    """Propose arcs from float geometry: repelling arcs around the repelling
    points, attracting arcs around the measured image arcs, endpoints
    rounded outward onto a dyadic grid.  Soundness comes from the exact
    checks afterwards, not from this construction."""

    def point(t: float) -> complex:
        return centre_n + radius_n * cmath.exp(2j * math.pi * t)

    def turn(z: complex) -> float:
        return (cmath.phase(z - centre_n) / (2 * math.pi)) % 1.0

    def mob(mat, z: complex) -> complex:
        (a, b), (c, d) = mat
        return (a * z + b) / (c * z + d)

    pts = [fx[0] % 1, fx[1] % 1, fy[0] % 1, fy[1] % 1]
    spts = sorted(pts)
    gap = min((b - a) % 1.0 for a, b in zip(spts, spts[1:] + [spts[0] + 1.0]))
    if gap < 1e-5:
        return None
    dr = float(shrink) * gap
    padf = float(pad) * gap

    def outward(lo: float, hi: float) -> tuple[Fraction, Fraction]:
        start = Fraction(math.floor(lo * _ARC_DENOM), _ARC_DENOM) % 1
        end = Fraction(math.ceil(hi * _ARC_DENOM), _ARC_DENOM) % 1
        return start, end

    arcs = {}
    for name, mat, (att, rep) in (("x", xa_n, fx), ("y", yb_n, fy)):
        rep_lo, rep_hi = rep - dr, rep + dr
        w1 = turn(mob(mat, point(rep_hi)))
        w2 = turn(mob(mat, point(rep_lo)))
        # ccw arc w1 -> w2 is the image of the complement; it must straddle att
        width = (w2 - w1) % 1.0
        if width > 0.45 or not _ccw_contains(w1, width, att):
            return None
        arcs[f"{name}_rep"] = outward(rep_lo, rep_hi)
        arcs[f"{name}_att"] = outward(w1 - padf, w1 + width + padf)
        # numeric pre-check of the inverse inclusion
        inv = _invert2(mat)
        v1 = turn(mob(inv, point(w1 + width + padf)))
        v2 = turn(mob(inv, point(w1 - padf)))
        vwidth = (v2 - v1) % 1.0
        if not (_ccw_contains(rep_lo % 1.0, 2 * dr, v1) and vwidth < 2 * dr
                and _ccw_contains(rep_lo % 1.0, 2 * dr, (v1 + vwidth) % 1.0)):
            return None
    return arcs


def _ccw_contains(start: float, width: float, t: float) -> bool:
    return (t - start) % 1.0 <= width


def _invert2(mat):
    (a, b), (c, d) = mat
    det = a * d - b * c
    return ((d / det, -b / det), (-c / det, a / det))


def verify_certificate(cert: PingPongCertificate) -> bool:
    """Independent re-check: exact arc bookkeeping plus ball inclusions at
    doubled precision.  Returns False on any failure."""
    margin = _arcs_disjoint_margin(cert.arcs)
    if margin is None or margin <= 0 or margin != cert.margin:
        return False
    bits = cert.precision * 2
    for _ in range(3):
        try:
            return _check_inclusions(cert, bits)
        except PrecisionExhausted:
            bits *= 2
    return False


def oracle_report(x_word: GroupWord, y_word: GroupWord, q: CyclotomicNumber,
                  max_len: int) -> tuple[GroupWord | None, ClaimReport]:
    witness = short_relation_oracle(x_word, y_word, q, max_len)
    found = witness is not None
    return witness, ClaimReport(
        claim="no projectively trivial reduced word up to the length bound",
        params={"x": str(x_word), "y": str(y_word), "q": str(q), "max_len": max_len},
        witnesses=[] if witness is None else [{"relation": str(witness)}],
        passed=not found,
    )
