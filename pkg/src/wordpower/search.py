"""Bounded search substrate.

Morphisms are enumerated by image-length vector (nondecreasing total,
lexicographic within a total), then by images in lexicographic order with
the first domain letter most significant.

For a fixed length vector, equality constraints between words reduce to
equalities between single letter positions. ``solutions`` merges those
positions with union-find and enumerates the free classes, which yields
exactly the constrained morphisms in the same order as the plain product.

Internally images are ``str`` over private one-character codes; ``Codec``
translates to and from the real codomain letters.
"""

from __future__ import annotations

import os
from itertools import product
from typing import Iterator, Sequence

from .words import Alphabet

ENV_CAP = "WORDPOWER_MAX_SEARCH"


class SearchCapExceeded(Exception):
    pass


class Budget:
    """Counts enumerated candidate morphisms against an optional cap."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.spent = 0

    @classmethod
    def from_env(cls) -> "Budget":
        raw = os.environ.get(ENV_CAP, "").strip()
        return cls(int(raw) if raw else None)

    def spend(self, k: int = 1) -> None:
        self.spent += k
        if self.limit is not None and self.spent > self.limit:
            raise SearchCapExceeded(self.spent)


class Codec:
    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.chars = "".join(chr(97 + i) if i < 26 else chr(0x100 + i)
                             for i in range(len(alphabet)))
        self._decode = dict(zip(self.chars, alphabet.letters))
        self._encode = dict(zip(alphabet.letters, self.chars))

    def decode(self, s: str) -> tuple[str, ...]:
        return tuple(self._decode[c] for c in s)

    def encode(self, symbols: Sequence[str]) -> str:
        return "".join(self._encode[x] for x in symbols)

    def code(self, letter: str) -> int:
        return self.alphabet.index(letter)


_WORDS_CACHE: dict = {}


def all_words(chars: str, length: int) -> list[str]:
    key = (chars, length)
    if key not in _WORDS_CACHE:
        _WORDS_CACHE[key] = ["".join(p) for p in product(chars, repeat=length)]
    return _WORDS_CACHE[key]


def compositions(total: int, bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Vectors with entries in [0, bounds[i]] summing to ``total``, lex order."""
    m = len(bounds)
    if m == 0:
        if total == 0:
            yield ()
        return
    tail = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        tail[i] = tail[i + 1] + bounds[i]
    vec = [0] * m

    def rec(i, remaining):
        if i == m - 1:
            if remaining <= bounds[i]:
                vec[i] = remaining
                yield tuple(vec)
            return
        lo = max(0, remaining - tail[i + 1])
        for v in range(lo, min(bounds[i], remaining) + 1):
            vec[i] = v
            yield from rec(i + 1, remaining - v)

    if total <= tail[0]:
        yield from rec(0, total)


def length_vectors(bounds: Sequence[int],
                   constraints: Sequence[tuple[Sequence[int], int]] = ()
                   ) -> Iterator[tuple[int, ...]]:
    """All length vectors within ``bounds`` in enumeration order.

    Each constraint ``(coefs, const)`` demands sum(coefs[i]*l[i]) + const == 0;
    partial vectors that cannot meet a constraint are cut early.
    """
    m = len(bounds)
    if not constraints:
        for t in range(sum(bounds) + 1):
            yield from compositions(t, bounds)
        return
    cons = [(list(c), k) for c, k in constraints if any(c) or k]
    if any(not any(c) and k for c, k in constraints):
        return
    # suffix data for interval pruning
    suf = []
    for coefs, _ in cons:
        lo = [0] * (m + 1)
        hi = [0] * (m + 1)
        cmin = [float("inf")] * (m + 1)
        cmax = [float("-inf")] * (m + 1)
        for i in range(m - 1, -1, -1):
            c = coefs[i] * bounds[i]
            lo[i] = lo[i + 1] + min(0, c)
            hi[i] = hi[i + 1] + max(0, c)
            cmin[i] = min(cmin[i + 1], coefs[i])
            cmax[i] = max(cmax[i + 1], coefs[i])
        suf.append((lo, hi, cmin, cmax))
    tail = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        tail[i] = tail[i + 1] + bounds[i]
    vec = [0] * m

    def feasible(i, remaining, partial):
        # can positions i.. still satisfy every constraint with sum == remaining?
        for (coefs, k), (lo, hi, cmin, cmax), p in zip(cons, suf, partial):
            if i == m:
                if p + k != 0:
                    return False
                continue
            a = max(lo[i], remaining * cmin[i])
            b = min(hi[i], remaining * cmax[i])
            if not (a <= -(p + k) <= b):
                return False
        return True

    def rec(i, remaining, partial):
        if i == m:
            if remaining == 0 and feasible(m, 0, partial):
                yield tuple(vec)
            return
        lo_v = max(0, remaining - tail[i + 1])
        for v in range(lo_v, min(bounds[i], remaining) + 1):
            vec[i] = v
            nxt = [p + coefs[i] * v for (coefs, _), p in zip(cons, partial)]
            if feasible(i + 1, remaining - v, nxt):
                yield from rec(i + 1, remaining - v, nxt)

    for t in range(tail[0] + 1):
        yield from rec(0, t, [0] * len(cons))


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def solutions(lengths: Sequence[int],
              equations: Sequence[tuple[Sequence[int], Sequence[int]]],
              chars: str) -> Iterator[tuple[str, ...]]:
    """Images (one str per variable) solving every equation, in lex order.

    Equation sides list variable indices (>= 0) and constants encoded as
    ``-(code + 1)``. Side lengths must already agree under ``lengths``.
    """
    m = len(lengths)
    if not equations:
        yield from product(*(all_words(chars, n) for n in lengths))
        return
    base = [0] * (m + 1)
    for i, n in enumerate(lengths):
        base[i + 1] = base[i] + n
    total = base[m]
    parent = list(range(total + len(chars)))

    def expand(side):
        out = []
        for item in side:
            if item >= 0:
                out.extend(range(base[item], base[item + 1]))
            else:
                out.append(total - item - 1)
        return out

    for lhs, rhs in equations:
        left, right = expand(lhs), expand(rhs)
        if len(left) != len(right):
            return
        for x, y in zip(left, right):
            rx, ry = _find(parent, x), _find(parent, y)
            if rx != ry:
                # keep constant nodes as roots
                if rx >= total:
                    parent[ry] = rx
                else:
                    parent[rx] = ry
    # classes: either pinned to a constant or free (numbered by first position)
    fixed: dict[int, str] = {}
    for c in range(len(chars)):
        r = _find(parent, total + c)
        if r in fixed:
            return
        fixed[r] = chars[c]
    free: dict[int, int] = {}
    slots: list = []
    for pos in range(total):
        r = _find(parent, pos)
        if r in fixed:
            slots.append(fixed[r])
        else:
            slots.append(free.setdefault(r, len(free)))
    spans = [(base[i], base[i + 1]) for i in range(m)]
    for assignment in product(chars, repeat=len(free)):
        letters = [s if isinstance(s, str) else assignment[s] for s in slots]
        yield tuple("".join(letters[a:b]) for a, b in spans)


def str_root_length(s: str) -> int:
    return (s + s).find(s, 1)


def str_exponent(s: str) -> int:
    return len(s) // str_root_length(s) if s else 0


def str_periodic(images: Sequence[str]) -> bool:
    root = None
    for img in images:
        if img:
            r = img[:str_root_length(img)]
            if root is None:
                root = r
            elif r != root:
                return False
    return True
