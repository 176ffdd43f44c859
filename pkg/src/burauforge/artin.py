"""The Artin action of B_3 on the free group F_3, longitudes of pure
braids, Magnus expansions, lower-central depth certificates, and the
depth-doubling substitution into F_6.

Convention for the action (the braid relations and invariance of the
boundary word x1 x2 x3 are the consistency oracle, exercised in tests):

    g_i : x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i,  others fixed.

Longitudes of deep commutators run to hundreds of thousands of letters,
so the substitution engine works on flat signed-integer words (letter
g^s encoded as s*(g+1)) with stack cancellation, and Magnus expansions
are accumulated syllable by syllable against cached one-variable series.

Depth certificates are one-sided: a word whose expansion vanishes below
degree k is certified to lie at filtration depth >= k; exact membership
is never claimed.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .words import GroupWord, braid_group, free_group, word

__all__ = [
    "F3", "F6", "FreeAutomorphism", "artin_action", "longitude",
    "MagnusSeries", "magnus_expansion", "magnus_depth", "eta_embed",
]

F3 = free_group(("x1", "x2", "x3"))
F6 = free_group(("y1", "z1", "y2", "z2", "y3", "z3"))
B3 = braid_group(3)


# ---------------------------------------------------------------------------
# flat words: letter g (0-based) with sign s is the integer s*(g+1)

def _flatten(w: GroupWord) -> list[int]:
    out: list[int] = []
    for g, e in w.syllables:
        token = (g + 1) if e > 0 else -(g + 1)
        out.extend([token] * abs(e))
    return out


def _unflatten(ctx, flat: list[int]) -> GroupWord:
    sylls = []
    for token in flat:
        g = abs(token) - 1
        s = 1 if token > 0 else -1
        if sylls and sylls[-1][0] == g:
            sylls[-1][1] += s
        else:
            sylls.append([g, s])
    return word(ctx, [(g, e) for g, e in sylls if e])


def _extend_table(images: list[list[int]], rank: int = 3) -> list[list[int]]:
    # index token + rank -> image; inverses precomputed by reversal
    table = [None] * (2 * rank + 1)
    for g in range(rank):
        table[rank + g + 1] = images[g]
        table[rank - g - 1] = [-t for t in reversed(images[g])]
    return table


def _sub_flat(src: list[int], table: list[list[int]], rank: int = 3) -> list[int]:
    out: list[int] = []
    push = out.append
    pop = out.pop
    for token in src:
        for t in table[token + rank]:
            if out and out[-1] == -t:
                pop()
            else:
                push(t)
    return out


class FreeAutomorphism:
    """Automorphism of F_3, with the inverse materialised on demand."""

    __slots__ = ("images", "_inverse_images", "_source")

    def __init__(self, images: tuple[GroupWord, ...], inverse_images=None, source=None):
        self.images = images
        self._inverse_images = inverse_images
        self._source = source  # braid word, when known, for cheap inversion

    @property
    def inverse_images(self) -> tuple[GroupWord, ...]:
        if self._inverse_images is None:
            if self._source is not None:
                self._inverse_images = artin_action(self._source.inverse()).images
            else:
                raise ValueError("no inverse stored for a bare automorphism")
        return self._inverse_images

    def apply(self, w: GroupWord) -> GroupWord:
        return substitute(w, self.images)

    def inverse(self) -> "FreeAutomorphism":
        inv = FreeAutomorphism(self.inverse_images, self.images)
        return inv

    def __mul__(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        # composition: (self * other)(x) = self(other(x))
        fwd = tuple(self.apply(w) for w in other.images)
        bwd = tuple(other.inverse().apply(w) for w in self.inverse_images)
        return FreeAutomorphism(fwd, bwd)

    def __eq__(self, other):
        return isinstance(other, FreeAutomorphism) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def is_identity_on_generators(self) -> bool:
        return all(w.syllables == ((i, 1),) for i, w in enumerate(self.images))


def substitute(w: GroupWord, images: tuple[GroupWord, ...]) -> GroupWord:
    ctx = images[0].context
    rank = len(images)
    table = _extend_table([_flatten(im) for im in images], rank)
    flat = _sub_flat(_flatten(w), table, rank)
    return _unflatten(ctx, flat)


# generator images as flat words: g_i sends x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
def _gen_images_flat(i: int, sign: int) -> list[list[int]]:
    a, b = i + 1, i + 2  # tokens
    images = [[t] for t in (1, 2, 3)]
    if sign > 0:
        images[a - 1] = [a, b, -a]
        images[b - 1] = [a]
    else:
        images[a - 1] = [b]
        images[b - 1] = [-b, a, b]
    return images


_GEN_TABLES = {(i, s): _extend_table(_gen_images_flat(i, s)) for i in (0, 1) for s in (1, -1)}


# small cache: deep-commutator images run to megabytes, and reuse is
# only ever the strand loop of `longitude`
@lru_cache(maxsize=8)
def artin_action(w: GroupWord) -> FreeAutomorphism:
    """Automorphism of F_3 attached to a braid word in B_3."""
    if w.context.strands != 3:
        raise ValueError("the action is implemented for 3-strand braids")
    letters = w.letters()
    # action(l_1 ... l_n) = action(l_1) o ... o action(l_n): fold from the right
    fwd = [[1], [2], [3]]
    for g, step in reversed(letters):
        table = _GEN_TABLES[(g, step)]
        fwd = [_sub_flat(v, table) for v in fwd]
    images = tuple(_unflatten(F3, v) for v in fwd)
    return FreeAutomorphism(images, source=w)


def _conjugator_flat(flat: list[int], token: int) -> list[int] | None:
    """If flat = u . token . u^-1 (reduced), return u; else None."""
    if len(flat) % 2 == 0:
        return None
    i, j = 0, len(flat) - 1
    while i < j:
        if flat[i] != -flat[j]:
            return None
        i += 1
        j -= 1
    if flat[i] != token:
        return None
    return flat[:i]


def longitude(w: GroupWord, strand: int) -> GroupWord:
    """The word l with action(w)(x_i) = l^-1 x_i l, for a pure braid w.

    Purity is checked on all three strands.  The conjugator is defined
    up to left powers of x_i; the representative returned has total
    x_i-exponent zero.
    """
    if strand not in (1, 2, 3):
        raise ValueError("strand index must be 1, 2 or 3")
    act = artin_action(w)
    target = None
    for j in range(3):
        u = _conjugator_flat(_flatten(act.images[j]), j + 1)
        if u is None:
            raise ValueError("braid is not pure: a strand generator is not conjugated")
        if j == strand - 1:
            target = u
    token = strand
    ell = [-t for t in reversed(target)]
    e = sum(1 for t in ell if t == token) - sum(1 for t in ell if t == -token)
    if e:
        head = [-token if e > 0 else token] * abs(e)
        merged: list[int] = []
        for t in head + ell:
            if merged and merged[-1] == -t:
                merged.pop()
            else:
                merged.append(t)
        ell = merged
    return _unflatten(F3, ell)


# ---------------------------------------------------------------------------
# Magnus expansion

class MagnusSeries:
    """Truncated noncommutative integer series in letters X_1..X_r."""

    __slots__ = ("rank", "degree", "terms")

    def __init__(self, rank: int, degree: int, terms: dict[tuple[int, ...], int]):
        self.rank = rank
        self.degree = degree
        self.terms = {k: v for k, v in terms.items() if v and len(k) <= degree}

    @staticmethod
    def one(rank: int, degree: int) -> "MagnusSeries":
        return MagnusSeries(rank, degree, {(): 1})

    def coefficient(self, letters: tuple[int, ...]) -> int:
        return self.terms.get(letters, 0)

    def __eq__(self, other):
        return (isinstance(other, MagnusSeries) and self.rank == other.rank
                and self.degree == other.degree and self.terms == other.terms)

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        if other.rank != self.rank or other.degree != self.degree:
            raise ValueError("series with different shapes")
        d = self.degree
        out: dict[tuple[int, ...], int] = {}
        for mono1, c1 in self.terms.items():
            room = d - len(mono1)
            for mono2, c2 in other.terms.items():
                if len(mono2) <= room:
                    key = mono1 + mono2
                    out[key] = out.get(key, 0) + c1 * c2
        return MagnusSeries(self.rank, d, out)

    def lowest_degree(self) -> int | None:
        """Smallest positive degree carrying a nonzero coefficient."""
        best = None
        for mono in self.terms:
            if mono and (best is None or len(mono) < best):
                best = len(mono)
        return best

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": {" ".join(f"X{i + 1}" for i in mono) if mono else "1": c
                      for mono, c in sorted(self.terms.items())},
        }

    def __repr__(self):
        return f"MagnusSeries({self.to_json()['terms']})"


@lru_cache(maxsize=4096)
def _syllable_coeffs(degree: int, exp: int) -> tuple[int, ...]:
    # coefficients of (1 + X)^exp up to the truncation degree
    out = []
    for j in range(degree + 1):
        if exp >= 0:
            out.append(math.comb(exp, j) if j <= exp else 0)
        else:
            out.append((-1) ** j * math.comb(-exp + j - 1, j))
    return tuple(out)


@lru_cache(maxsize=64)
def _mono_tables(rank: int, degree: int):
    # monomials of degree <= degree, indexed; ext[m][g] = index of mono+(g,) or -1
    monos: list[tuple[int, ...]] = [()]
    by_key = {(): 0}
    frontier = [()]
    for _ in range(degree):
        new = []
        for mono in frontier:
            for g in range(rank):
                ext = mono + (g,)
                by_key[ext] = len(monos)
                monos.append(ext)
                new.append(ext)
        frontier = new
    ext_table = [[by_key.get(m + (g,), -1) for g in range(rank)] for m in monos]
    return tuple(monos), ext_table


def magnus_expansion(w: GroupWord, degree: int) -> MagnusSeries:
    """Image of a free-group word under x_i -> 1 + X_i, truncated."""
    if degree < 1:
        raise ValueError("truncation degree must be positive")
    rank = len(w.context.names)
    monos, ext = _mono_tables(rank, degree)
    size = len(monos)
    acc = [0] * size
    acc[0] = 1
    for g, e in w.syllables:
        coeffs = _syllable_coeffs(degree, e)
        nxt = [0] * size
        for m in range(size):
            c = acc[m]
            if not c:
                continue
            idx = m
            nxt[idx] += c  # j = 0 term, coefficient is always 1
            for j in range(1, degree - len(monos[m]) + 1):
                idx = ext[idx][g]
                cj = coeffs[j]
                if cj:
                    nxt[idx] += c * cj
        acc = nxt
    return MagnusSeries(rank, degree, {monos[m]: acc[m] for m in range(size) if acc[m]})


def magnus_depth(w: GroupWord, dmax: int) -> int | None:
    """Lowest nonvanishing degree of the expansion, or None if it exceeds dmax."""
    if dmax < 1:
        raise ValueError("dmax must be positive")
    return magnus_expansion(w, dmax).lowest_degree()


# ---------------------------------------------------------------------------
# the depth-doubling substitution F_3 -> F_6

_ETA_IMAGES = tuple(
    word(F6, [(2 * i, 1), (2 * i + 1, 1), (2 * i, -1), (2 * i + 1, -1)])
    for i in range(3)
)


def eta_embed(w: GroupWord) -> GroupWord:
    """Substitution x_i -> [y_i, z_i] into F_6, reduced."""
    if w.context != F3:
        raise ValueError("expected a word in the rank-3 free group")
    return substitute(w, _ETA_IMAGES)
