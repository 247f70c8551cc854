"""Morphisms of free monoids and the three morphism families."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import chain
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, PreconditionError
from .words import BINARY, Alphabet, Word, format_symbols, root_length, tokenize


class Family(enum.Enum):
    ALL = "all"
    NONPERIODIC = "nonperiodic"
    INJECTIVE = "injective"

    @classmethod
    def parse(cls, name: "str | Family") -> "Family":
        if isinstance(name, Family):
            return name
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ParseError(f"unknown morphism family {name!r}") from None


@dataclass(frozen=True)
class Morphism:
    """A total map from domain letters to words over the codomain.

    ``images[i]`` is the image of ``domain.letters[i]``. Classification
    (periodic / injective) is computed lazily and cached on the instance.
    """

    domain: Alphabet
    codomain: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self):
        images = tuple(
            img if isinstance(img, Word) and img.alphabet == self.codomain
            else Word(tuple(img), self.codomain)
            for img in self.images)
        if len(images) != len(self.domain):
            raise PreconditionError("every domain letter needs exactly one image")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_dict(cls, mapping: Mapping[str, "str | Sequence[str] | Word"],
                  domain: "Alphabet | str | None" = None,
                  codomain: "Alphabet | str | None" = None) -> "Morphism":
        domain = Alphabet.of(domain) if domain is not None else Alphabet(tuple(mapping))
        codomain = Alphabet.of(codomain) if codomain is not None else None
        missing = [x for x in domain if x not in mapping]
        if missing:
            raise PreconditionError(f"no image given for {missing}")
        extra = [x for x in mapping if x not in domain]
        if extra:
            raise PreconditionError(f"letters {extra} are not in the domain")
        raw = []
        for letter in domain:
            img = mapping[letter]
            if isinstance(img, Word):
                raw.append(img.symbols)
            elif isinstance(img, str):
                raw.append(tokenize(img, codomain))
            else:
                raw.append(tuple(img))
        if codomain is None:
            used = sorted(set(chain.from_iterable(raw)))
            codomain = Alphabet(tuple(used)) if used else BINARY
        return cls(domain, codomain, tuple(Word(r, codomain) for r in raw))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Morphism":
        return cls(alphabet, alphabet, tuple(Word((x,), alphabet) for x in alphabet))

    def image(self, letter: str) -> Word:
        try:
            return self.images[self.domain.index(letter)]
        except KeyError:
            raise PreconditionError(f"letter {letter!r} outside the domain") from None

    def as_dict(self) -> dict[str, Word]:
        return dict(zip(self.domain.letters, self.images))

    @cached_property
    def table(self) -> dict[str, tuple[str, ...]]:
        return {a: img.symbols for a, img in zip(self.domain.letters, self.images)}

    @cached_property
    def periodic(self) -> bool:
        roots = {img.symbols[:root_length(img.symbols)] for img in self.images if img.symbols}
        return len(roots) <= 1

    @cached_property
    def injective(self) -> bool:
        codes = [img.symbols for img in self.images]
        if any(not c for c in codes) or len(set(codes)) != len(codes):
            return False
        return is_code(codes)

    def restrict(self, letters: Iterable[str]) -> "Morphism":
        letters = tuple(letters)
        return Morphism(Alphabet(letters), self.codomain, tuple(self.image(x) for x in letters))

    def extend(self, extra: Mapping[str, "Word | Sequence[str]"]) -> "Morphism":
        """Add images for new domain letters (appended after existing ones)."""
        clash = [x for x in extra if x in self.domain]
        if clash:
            raise PreconditionError(f"letters {clash} already in the domain")
        domain = self.domain.union(extra)
        images = self.images + tuple(
            Word(v.symbols if isinstance(v, Word) else tuple(v), self.codomain)
            for v in extra.values())
        return Morphism(domain, self.codomain, images)

    def __str__(self) -> str:
        return format_morphism(self)


def apply(h: Morphism, w: Word) -> Word:
    """h(w): concatenate letter images in order."""
    table = h.table
    try:
        out = tuple(chain.from_iterable(table[x] for x in w.symbols))
    except KeyError as exc:
        raise PreconditionError(f"letter {exc.args[0]!r} outside the domain of h") from None
    return Word(out, h.codomain)


def is_code(words: Sequence[Sequence]) -> bool:
    """Sardinas–Patterson test: is the finite set uniquely decodable?"""
    code = {tuple(w) for w in words}
    if () in code:
        return False
    frontier = {y[len(x):] for x in code for y in code
                if x != y and y[:len(x)] == x}
    seen: set = set()
    while frontier:
        if () in frontier:
            return False
        seen |= frontier
        nxt = set()
        for s in frontier:
            for c in code:
                if c[:len(s)] == s:
                    nxt.add(c[len(s):])
                if s[:len(c)] == c:
                    nxt.add(s[len(c):])
        frontier = nxt - seen
    return True


def is_periodic(h: Morphism) -> bool:
    return h.periodic


def is_injective(h: Morphism) -> bool:
    return h.injective


def in_family(h: Morphism, family: Family) -> bool:
    if family is Family.ALL:
        return True
    if family is Family.NONPERIODIC:
        return not h.periodic
    return h.injective


def compose(g: Morphism, h: Morphism) -> Morphism:
    """g ∘ h, i.e. first h then g."""
    if h.codomain != g.domain:
        raise PreconditionError(
            f"cannot compose: codomain {{{h.codomain}}} != domain {{{g.domain}}}")
    return Morphism(h.domain, g.codomain, tuple(apply(g, img) for img in h.images))


def binary_encoding(alphabet: Alphabet, target: Alphabet = BINARY) -> Morphism:
    """g(c_i) = a^i b: injective and maps primitive words to primitive words."""
    if len(target) != 2:
        raise PreconditionError("binary encoding needs a two-letter target")
    a, b = target.letters
    return Morphism(alphabet, target, tuple(
        Word((a,) * (i + 1) + (b,), target) for i in range(len(alphabet))))


def canonical(h: Morphism) -> Morphism:
    """Rename codomain letters in order of first occurrence across the images."""
    order = list(dict.fromkeys(chain.from_iterable(img.symbols for img in h.images)))
    order += [x for x in h.codomain if x not in order]
    mapping = dict(zip(order, h.codomain.letters))
    return Morphism(h.domain, h.codomain,
                    tuple(img.rename(mapping, h.codomain) for img in h.images))


def to_binary(h: Morphism, target: Alphabet = BINARY) -> Morphism:
    """Move h into a binary codomain without changing family or exponents."""
    if len(h.codomain) > 2:
        return compose(binary_encoding(h.codomain, target), h)
    letters = dict(zip(h.codomain.letters, target.letters))
    return Morphism(h.domain, target, tuple(img.rename(letters, target) for img in h.images))


def parse_morphism(text: str, domain: "Alphabet | str | None" = None,
                   codomain: "Alphabet | str | None" = None) -> Morphism:
    """Parse ``a->abb;b->ba;c->``."""
    mapping: dict[str, str] = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        if "->" not in part:
            raise ParseError(f"expected 'letter->image' in {part!r}")
        letter, image = part.split("->", 1)
        letter = letter.strip()
        if not letter:
            raise ParseError(f"missing letter in {part!r}")
        if letter in mapping:
            raise ParseError(f"letter {letter!r} mapped twice")
        mapping[letter] = image
    if not mapping:
        raise ParseError("empty morphism")
    return Morphism.from_dict(mapping, domain, codomain)


def format_morphism(h: Morphism) -> str:
    return ";".join(f"{a}->{format_symbols(img.symbols)}"
                    for a, img in zip(h.domain.letters, h.images))
