"""Reduced words in free groups, free products of cyclic groups, and braid groups.

Free and free-product words carry a genuine normal form (syllable
reduction, exponents mod the torsion order).  Braid words are kept as
written apart from cancellation of inverse pairs; equality of braid
elements is only ever decided downstream through a representation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "GroupContext", "GroupWord",
    "free_group", "free_product", "braid_group",
    "word", "generator", "commutator", "iterated_bracket", "st_words",
    "parse_word", "format_word", "evaluate_word",
]

FREE = "free"
FREE_PRODUCT = "free_product"
BRAID = "braid"


@dataclass(frozen=True)
class GroupContext:
    kind: str
    names: tuple[str, ...]
    torsion: int | None = None
    strands: int | None = None

    def index(self, name: str) -> int:
        return self.names.index(name)


def free_group(names: Sequence[str]) -> GroupContext:
    return GroupContext(FREE, tuple(names))


def free_product(names: Sequence[str], torsion: int) -> GroupContext:
    if torsion < 2:
        raise ValueError("torsion order must be at least 2")
    return GroupContext(FREE_PRODUCT, tuple(names), torsion=torsion)


def braid_group(n: int) -> GroupContext:
    if n < 2:
        raise ValueError("braid group needs at least 2 strands")
    names = tuple(f"g{i}" for i in range(1, n))
    return GroupContext(BRAID, names, strands=n)


def _reduce(kind: str, torsion, sylls: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for g, e in sylls:
        cur_g, cur_e = g, e
        while True:
            if kind == FREE_PRODUCT:
                cur_e %= torsion
            if cur_e == 0:
                break
            if out and out[-1][0] == cur_g:
                cur_e += out.pop()[1]
                continue
            out.append((cur_g, cur_e))
            break
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    context: GroupContext
    syllables: tuple[tuple[int, int], ...]

    def reduce(self) -> "GroupWord":
        return GroupWord(self.context,
                         _reduce(self.context.kind, self.context.torsion, self.syllables))

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if other.context != self.context:
            raise ValueError("words live in different groups")
        return word(self.context, self.syllables + other.syllables)

    def inverse(self) -> "GroupWord":
        return word(self.context, [(g, -e) for g, e in reversed(self.syllables)])

    def __pow__(self, e: int) -> "GroupWord":
        if e == 0:
            return word(self.context, [])
        base = self if e > 0 else self.inverse()
        return word(self.context, base.syllables * abs(e))

    def letters(self) -> list[tuple[int, int]]:
        """Flat list of (generator, +-1)."""
        out = []
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            out.extend((g, step) for _ in range(abs(e)))
        return out

    def exponent_sum(self, gen: int) -> int:
        return sum(e for g, e in self.syllables if g == gen)

    def length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __str__(self):
        return format_word(self)


def word(context: GroupContext, syllables: Iterable[tuple[int, int]]) -> GroupWord:
    return GroupWord(context, _reduce(context.kind, context.torsion, tuple(syllables)))


def generator(context: GroupContext, name: str, e: int = 1) -> GroupWord:
    return word(context, [(context.index(name), e)])


def commutator(u: GroupWord, v: GroupWord) -> GroupWord:
    """[u, v] = u v u^-1 v^-1."""
    if u.context != v.context:
        raise ValueError("commutator of words from different groups")
    return u * v * u.inverse() * v.inverse()


def iterated_bracket(x: GroupWord, y: GroupWord, k: int) -> GroupWord:
    """[x, [x, ..., [x, y]...]] with k-1 nested brackets (weight k)."""
    if k < 2:
        raise ValueError("bracket length must be at least 2")
    out = commutator(x, y)
    for _ in range(k - 2):
        out = commutator(x, out)
    return out


def st_words(k: int) -> tuple[GroupWord, GroupWord]:
    """The two kernel generators, written over a = g1^2, b = g2^2.

    s = a^k b^k a^(k-k^2) b^-1 a^k b^-1 a^(k-k^2) b^k a^k
    t = a^k b^k a^(k-k^2) b^-1 a^(k+1) b a^(k+k^2) b^k a^(5k)
    """
    if k < 1:
        raise ValueError("k must be positive")
    ctx = free_group(("a", "b"))
    a, b = 0, 1
    s = word(ctx, [(a, k), (b, k), (a, k - k * k), (b, -1), (a, k),
                   (b, -1), (a, k - k * k), (b, k), (a, k)])
    t = word(ctx, [(a, k), (b, k), (a, k - k * k), (b, -1), (a, k + 1),
                   (b, 1), (a, k + k * k), (b, k), (a, 5 * k)])
    return s, t


# ---------------------------------------------------------------------------
# text format: generators with caret exponents, e.g. "a^3 b^-1 a^-6"

_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?")


def format_word(w: GroupWord) -> str:
    if not w.syllables:
        return "1"
    parts = []
    for g, e in w.syllables:
        name = w.context.names[g]
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)


def parse_word(context: GroupContext, text: str) -> GroupWord:
    text = text.strip()
    if text in ("", "1"):
        return word(context, [])
    sylls = []
    pos = 0
    for m in _TOKEN.finditer(text):
        gap = text[pos:m.start()]
        if gap.strip():
            raise ValueError(f"unexpected token {gap.strip()!r} in word")
        name, exp = m.group(1), m.group(2)
        if name not in context.names:
            raise ValueError(f"unknown generator {name!r}")
        sylls.append((context.index(name), int(exp) if exp else 1))
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"unexpected token {text[pos:].strip()!r} in word")
    return word(context, sylls)


# ---------------------------------------------------------------------------

def evaluate_word(w: GroupWord, images: Mapping[str, object], one):
    """Fold a word through generator images.

    Images must support ``*`` and ``.inverse()``; exponents are resolved
    by square-and-multiply.
    """
    result = one
    for g, e in w.syllables:
        if e == 0:
            continue
        base = images[w.context.names[g]]
        if e < 0:
            base = base.inverse()
            e = -e
        acc = None
        while e:
            if e & 1:
                acc = base if acc is None else acc * base
            e >>= 1
            if e:
                base = base * base
        result = result * acc
    return result
