"""Bounded-search oracle for word equations.

Nothing here ever claims unsatisfiability: a failed search is reported as
``UnknownAtBound``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .equations import EquationSystem, check_solution
from .errors import PreconditionError
from .morphisms import Family, Morphism, apply, in_family
from .pex import BRUTE_FORCE_LIMIT, _FamilyCheck, iter_power_morphisms
from .search import (Budget, Codec, SearchCapExceeded, length_vectors, solutions,
                     str_exponent)
from .words import BINARY, Alphabet, Word


class Status(enum.Enum):
    SAT = "Sat"
    UNKNOWN_AT_BOUND = "UnknownAtBound"


@dataclass(frozen=True)
class SolveOutcome:
    status: Status
    witness: Morphism | None
    bound_used: int
    caveats: tuple[str, ...] = field(default=())
    base: Word | None = None

    def __post_init__(self):
        assert (self.status is Status.SAT) == (self.witness is not None)

    @property
    def sat(self) -> bool:
        return self.status is Status.SAT


def _encode_system(s: EquationSystem, codec: Codec):
    index = {x: i for i, x in enumerate(s.variables)}

    def item(x):
        return index[x] if x in index else -(codec.code(x) + 1)

    eqs, constraints = [], []
    m = len(s.variables)
    for e in s.equations:
        lhs = [item(x) for x in e.lhs.symbols]
        rhs = [item(x) for x in e.rhs.symbols]
        coefs = [0] * m
        const = 0
        for side, sign in ((lhs, 1), (rhs, -1)):
            for i in side:
                if i >= 0:
                    coefs[i] += sign
                else:
                    const += sign
        eqs.append((lhs, rhs))
        constraints.append((coefs, const))
    return eqs, constraints


def _validate(s: EquationSystem, family: Family, max_len: int, codomain: Alphabet) -> None:
    if max_len < 0:
        raise PreconditionError("length bound must be nonnegative")
    if not s.constant_free:
        if family is not Family.ALL:
            raise PreconditionError("systems with constants are solved over the family 'all'")
        missing = [c for c in s.constants if c not in codomain]
        if missing:
            raise PreconditionError(f"codomain must contain the constants {missing}")


def iter_solutions(s: EquationSystem, family: Family | str, max_len: int,
                   codomain: Alphabet = BINARY, *,
                   bounds: Mapping[str, int] | None = None,
                   budget: Budget | None = None) -> Iterator[Morphism]:
    """Every solution in the family with images within the bounds, in search order."""
    family = Family.parse(family)
    _validate(s, family, max_len, codomain)
    codec = Codec(codomain)
    eqs, constraints = _encode_system(s, codec)
    per_var = [(bounds or {}).get(x, max_len) for x in s.variables]
    ok = _FamilyCheck(family)
    budget = budget or Budget()
    for lengths in length_vectors(per_var, constraints):
        for images in solutions(lengths, eqs, codec.chars):
            budget.spend()
            if ok(images):
                yield Morphism(s.variables, codomain,
                               tuple(Word(codec.decode(img), codomain) for img in images))


def solve_bounded(s: EquationSystem, family: Family | str, max_len: int,
                  codomain: Alphabet = BINARY, *,
                  bounds: Mapping[str, int] | None = None) -> SolveOutcome:
    """First solution in the family with every image of length <= max_len.

    ``bounds`` overrides the length bound for individual variables.
    """
    family = Family.parse(family)
    budget = Budget.from_env()
    try:
        for h in iter_solutions(s, family, max_len, codomain, bounds=bounds, budget=budget):
            assert check_solution(s, h) and in_family(h, family)
            return SolveOutcome(Status.SAT, h, max_len)
    except SearchCapExceeded:
        return SolveOutcome(Status.UNKNOWN_AT_BOUND, None, max_len, ("search cap",))
    return SolveOutcome(Status.UNKNOWN_AT_BOUND, None, max_len)


def find_power_witness(w: Word, n: int, family: Family | str, max_len: int,
                       codomain: Alphabet = BINARY) -> SolveOutcome:
    """Search h on w's declared alphabet with h(w) a nonempty n-th power.

    This is the equation (w, x^n) with the image of x read off h(w)
    instead of being searched.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    family = Family.parse(family)
    codec = Codec(codomain)
    budget = Budget.from_env()
    try:
        for images, s in iter_power_morphisms(w, w.alphabet, n, family, max_len,
                                              codomain, budget):
            h = Morphism(w.alphabet, codomain,
                         tuple(Word(codec.decode(img), codomain) for img in images))
            image = apply(h, w)
            base = image[:len(image) // n]
            assert base ** n == image and in_family(h, family)
            return SolveOutcome(Status.SAT, h, max_len, base=base)
    except SearchCapExceeded:
        return SolveOutcome(Status.UNKNOWN_AT_BOUND, None, max_len, ("search cap",))
    return SolveOutcome(Status.UNKNOWN_AT_BOUND, None, max_len)


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _nonprimitive_candidates(items, lengths, total, chars):
    m = len(lengths)
    if len(chars) ** sum(lengths) <= BRUTE_FORCE_LIMIT:
        yield solutions(lengths, (), chars)
        return
    # h(w) is nonprimitive iff it is a p-th power for some prime p
    for p in _prime_factors(total):
        eq = [(items, [m] * p)]
        yield (imgs[:m] for imgs in solutions(tuple(lengths) + (total // p,), eq, chars))


def find_nonprimitive_witness(w: Word, family: Family | str, max_len: int,
                              codomain: Alphabet = BINARY) -> SolveOutcome:
    """Search h on w's declared alphabet with h(w) nonempty and nonprimitive."""
    family = Family.parse(family)
    sigma = w.alphabet
    codec = Codec(codomain)
    index = {a: i for i, a in enumerate(sigma)}
    items = [index[x] for x in w.symbols]
    counts = [w.count(a) for a in sigma]
    ok = _FamilyCheck(family)
    budget = Budget.from_env()
    m = len(sigma)
    try:
        for lengths in length_vectors([max_len] * m):
            total = sum(c * l for c, l in zip(counts, lengths))
            if total < 2:
                continue
            for group in _nonprimitive_candidates(items, lengths, total, codec.chars):
                for images in group:
                    budget.spend()
                    s = "".join([images[i] for i in items])
                    if str_exponent(s) >= 2 and ok(images):
                        h = Morphism(sigma, codomain, tuple(
                            Word(codec.decode(img), codomain) for img in images))
                        image = apply(h, w)
                        base = image[:len(image) // str_exponent(s)]
                        return SolveOutcome(Status.SAT, h, max_len, base=base)
    except SearchCapExceeded:
        return SolveOutcome(Status.UNKNOWN_AT_BOUND, None, max_len, ("search cap",))
    return SolveOutcome(Status.UNKNOWN_AT_BOUND, None, max_len)
