"""Explicit high-power witnesses.

``construct_unique_letter_morphism`` maps a primitive word with a letter
occurring once onto any power of itself by an injective morphism.
``construct_lower_bound_instance`` builds, for even n, a word of length 2n
where every letter occurs twice, together with an injective morphism into
{a, b} mapping it to an (n-1)-th power.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .morphisms import Morphism, apply
from .words import BINARY, Alphabet, Word, is_primitive


@dataclass(frozen=True)
class HighPowerWitness:
    w: Word
    h: Morphism
    exponent: int
    base: Word

    def __post_init__(self):
        if apply(self.h, self.w) != self.base ** self.exponent:
            raise AssertionError("h(w) is not base^exponent")


def construct_unique_letter_morphism(w: Word, a: str, n: int, *, strict: bool = True
                                     ) -> HighPowerWitness:
    """h(a) = a(vua)^(n-1) and h(c) = c otherwise, where w = u a v.

    With ``strict=False`` the primitivity check on w is skipped and the
    returned base is w itself, whatever its root.
    """
    if n < 1:
        raise PreconditionError("exponent must be positive")
    if w.count(a) != 1:
        raise PreconditionError(f"letter {a!r} must occur exactly once in {w}")
    if strict and not is_primitive(w):
        raise PreconditionError(f"{w} is not primitive")
    i = w.symbols.index(a)
    u, v = w.symbols[:i], w.symbols[i + 1:]
    sigma = w.alphabet
    images = tuple(
        Word((a,) + (v + u + (a,)) * (n - 1), sigma) if c == a else Word((c,), sigma)
        for c in sigma)
    return HighPowerWitness(w, Morphism(sigma, sigma, images), n, w)


def lower_bound_letters(n: int) -> Alphabet:
    return Alphabet(tuple(f"x{i}" for i in range(1, n + 1)))


def construct_lower_bound_instance(n: int) -> HighPowerWitness:
    if n < 4 or n % 2:
        raise PreconditionError("n must be an even integer >= 4")
    sigma = lower_bound_letters(n)
    x = sigma.letters
    symbols = tuple(c for c in x[:n - 2] for _ in range(2))
    symbols += (x[n - 2], x[n - 1], x[n - 1], x[n - 2])
    images = [("a",) * (2 * n - 2 * i - 2) + ("b",) + ("a",) * (2 * i)
              for i in range(1, n - 1)]
    images += [("b",), ("a",) * (n - 1)]
    h = Morphism(sigma, BINARY, tuple(Word(img, BINARY) for img in images))
    base = Word(("a",) * (2 * n - 4) + ("b",) + ("a",) * (2 * n - 2) + ("b",), BINARY)
    return HighPowerWitness(Word(symbols, sigma), h, n - 1, base)
