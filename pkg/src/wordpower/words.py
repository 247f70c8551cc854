"""Words over declared alphabets and the basic periodicity toolkit.

Words are immutable tuples of opaque letters (strings). A letter may be
longer than one character (``x1``, ``_x``); such words are written with
spaces between letters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ParseError, PreconditionError

_RESERVED = set(",;:=>")


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct letters. Order is declaration order."""

    letters: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise PreconditionError("alphabet must contain at least one letter")
        for letter in letters:
            if not isinstance(letter, str) or not letter:
                raise PreconditionError(f"invalid letter {letter!r}")
            if any(ch.isspace() or ch in _RESERVED for ch in letter) or letter == "ε":
                raise PreconditionError(f"letter {letter!r} uses a reserved character")
        index = {letter: i for i, letter in enumerate(letters)}
        if len(index) != len(letters):
            raise PreconditionError(f"duplicate letters in alphabet {letters}")
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, source: "str | Iterable[str] | Alphabet") -> "Alphabet":
        """Build an alphabet from ``"ab"``, ``"x1,x2"`` or an iterable of letters."""
        if isinstance(source, Alphabet):
            return source
        if isinstance(source, str):
            source = source.strip()
            if "," in source:
                return cls(tuple(s.strip() for s in source.split(",")))
            if any(ch.isspace() for ch in source):
                return cls(tuple(source.split()))
            return cls(tuple(source))
        return cls(tuple(source))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __contains__(self, letter: object) -> bool:
        return letter in self._index

    def __str__(self) -> str:
        return ",".join(self.letters)

    def index(self, letter: str) -> int:
        return self._index[letter]

    @property
    def single_char(self) -> bool:
        return all(len(letter) == 1 for letter in self.letters)

    def union(self, other: "Alphabet | Iterable[str]") -> "Alphabet":
        extra = [x for x in other if x not in self._index]
        return Alphabet(self.letters + tuple(dict.fromkeys(extra)))

    def issubset(self, other: "Alphabet") -> bool:
        return all(letter in other for letter in self.letters)


BINARY = Alphabet(("a", "b"))


def tokenize(text: str, alphabet: Alphabet | None = None) -> tuple[str, ...]:
    """Split a word literal into letters.

    Whitespace-separated text is split on whitespace; otherwise every
    character is a letter, except that declared multi-character letters are
    matched greedily (longest first).
    """
    text = text.strip()
    if text in ("", "ε"):
        return ()
    if any(ch.isspace() for ch in text):
        return tuple(text.split())
    if alphabet is None or alphabet.single_char:
        return tuple(text)
    ordered = sorted(alphabet.letters, key=len, reverse=True)
    out = []
    i = 0
    while i < len(text):
        for letter in ordered:
            if text.startswith(letter, i):
                out.append(letter)
                i += len(letter)
                break
        else:
            raise ParseError(f"cannot tokenize {text!r} at position {i} over {alphabet}")
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A finite word; ``alphabet`` is the declared alphabet, not ``alphabet(w)``."""

    symbols: tuple[str, ...]
    alphabet: Alphabet

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        stray = set(symbols).difference(self.alphabet.letters)
        if stray:
            raise PreconditionError(
                f"letters {sorted(stray)} not in alphabet {{{self.alphabet}}}")

    @classmethod
    def parse(cls, text: str, alphabet: "Alphabet | str | None" = None) -> "Word":
        if alphabet is not None:
            alphabet = Alphabet.of(alphabet)
        symbols = tokenize(text, alphabet)
        if alphabet is None:
            if not symbols:
                raise ParseError("cannot infer an alphabet for the empty word")
            alphabet = Alphabet(tuple(sorted(set(symbols))))
        return cls(symbols, alphabet)

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Word":
        return cls((), alphabet)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.symbols[item], self.alphabet)
        return self.symbols[item]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise PreconditionError("cannot concatenate words over different alphabets")
        return Word(self.symbols + other.symbols, self.alphabet)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            raise PreconditionError("negative power of a word")
        return Word(self.symbols * k, self.alphabet)

    def __str__(self) -> str:
        return format_symbols(self.symbols)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def count(self, letter: str) -> int:
        return self.symbols.count(letter)

    def letters(self) -> tuple[str, ...]:
        """alphabet(w): letters that occur, in declaration order."""
        used = set(self.symbols)
        return tuple(x for x in self.alphabet.letters if x in used)

    def over(self, alphabet: Alphabet) -> "Word":
        return Word(self.symbols, alphabet)

    def rename(self, mapping: Mapping[str, str], alphabet: Alphabet) -> "Word":
        return Word(tuple(mapping.get(x, x) for x in self.symbols), alphabet)


def word(text: str, alphabet: "Alphabet | str | None" = None) -> Word:
    """Shorthand for :meth:`Word.parse`."""
    return Word.parse(text, alphabet)


def format_symbols(symbols: Sequence[str]) -> str:
    if all(len(x) == 1 for x in symbols):
        return "".join(symbols)
    return " ".join(symbols)


# -- sequence-level algorithms (work on tuples and str alike) ---------------

def border_array(seq: Sequence) -> list[int]:
    """Failure function: border[i] is the longest proper border of seq[:i+1]."""
    border = [0] * len(seq)
    k = 0
    for i in range(1, len(seq)):
        while k and seq[i] != seq[k]:
            k = border[k - 1]
        if seq[i] == seq[k]:
            k += 1
        border[i] = k
    return border


def root_length(seq: Sequence) -> int:
    """Length of the primitive root of a nonempty sequence."""
    n = len(seq)
    if isinstance(seq, str):
        # same answer as the border method, but the scan runs in C
        return (seq + seq).find(seq, 1)
    period = n - border_array(seq)[-1]
    return period if n % period == 0 else n


def exponent_of(seq: Sequence) -> int:
    """Exponent k with seq = root^k; 0 for the empty sequence."""
    if not seq:
        return 0
    return len(seq) // root_length(seq)


def primitive_root(w: Word) -> tuple[Word, int]:
    """Return ``(root, k)`` with root primitive and ``root ** k == w``."""
    if not w.symbols:
        raise PreconditionError("empty word has no primitive root")
    p = root_length(w.symbols)
    return w[:p], len(w) // p


def is_primitive(w: Word) -> bool:
    if not w.symbols:
        raise PreconditionError("empty word is neither primitive nor nonprimitive")
    return root_length(w.symbols) == len(w)


def are_conjugate(u: Word, v: Word) -> bool:
    a, b = u.symbols, v.symbols
    if len(a) != len(b):
        return False
    if not a:
        return True
    return any(a[i:] + a[:i] == b for i in range(len(a)))


def is_internal_factor(u: Word, v: Word) -> bool:
    """True iff v = x u y with x and y both nonempty."""
    a, b = u.symbols, v.symbols
    return any(b[i:i + len(a)] == a for i in range(1, len(b) - len(a)))


def fine_wilf_root(u: Word, v: Word) -> Word | None:
    """Common root of length gcd(|u|, |v|) if u^ω and v^ω agree long enough."""
    if not u.symbols or not v.symbols:
        raise PreconditionError("fine_wilf_root needs nonempty words")
    a, b = u.symbols, v.symbols
    g = gcd(len(a), len(b))
    threshold = len(a) + len(b) - g
    if any(a[i % len(a)] != b[i % len(b)] for i in range(threshold)):
        return None
    root = a[:g]
    assert root * (len(a) // g) == a and root * (len(b) // g) == b
    return Word(root, u.alphabet)
