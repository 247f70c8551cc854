"""Exponent sets pex_H(w) and gex_H(w) (words mapped onto n-th powers).

``pex`` collects exponents n such that some morphism in the family maps w
onto r^n with r primitive; ``gex`` drops the primitivity requirement and is
the divisor closure of ``pex``. Bounded search gives observations; the
closed forms below turn them into exact sets where a theorem applies.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .constructions import construct_unique_letter_morphism
from .errors import PreconditionError
from .morphisms import (Family, Morphism, apply, canonical, in_family, is_code,
                        to_binary)
from .search import (Budget, Codec, SearchCapExceeded, length_vectors,
                     solutions, str_exponent, str_periodic)
from .words import BINARY, Alphabet, Word, is_primitive, primitive_root

BRUTE_FORCE_LIMIT = 64


def enumerate_morphisms(domain: Alphabet, codomain: Alphabet,
                        max_total_image_len: int | None = None, *,
                        max_image_len: int | None = None) -> Iterator[Morphism]:
    """Every morphism within the length bounds, each once, in search order."""
    if max_total_image_len is None and max_image_len is None:
        raise PreconditionError("give a total or a per-image length bound")
    if (max_total_image_len or 0) < 0 or (max_image_len or 0) < 0:
        raise PreconditionError("length bounds must be nonnegative")
    m = len(domain)
    cap = max_image_len if max_image_len is not None else max_total_image_len
    top = m * cap if max_total_image_len is None else min(max_total_image_len, m * cap)
    codec = Codec(codomain)
    for lengths in length_vectors([cap] * m):
        if sum(lengths) > top:
            break
        for images in solutions(lengths, (), codec.chars):
            yield Morphism(domain, codomain,
                           tuple(Word(codec.decode(s), codomain) for s in images))


# -- closed forms ------------------------------------------------------------

def gex_from_pex(pex: Iterable[int], max_exponent: int) -> set[int]:
    return {d for n in pex for d in range(1, min(n, max_exponent) + 1) if n % d == 0}


def semigroup_values(counts: Iterable[int], max_exponent: int) -> set[int]:
    """{sum k_i * counts_i : k_i >= 0} without 0, truncated to [1, max_exponent]."""
    gens = sorted({c for c in counts if c > 0})
    reach = [False] * (max_exponent + 1)
    reach[0] = True
    for t in range(1, max_exponent + 1):
        reach[t] = any(g <= t and reach[t - g] for g in gens)
    return {t for t in range(1, max_exponent + 1) if reach[t]}


def _semigroup_coefficients(counts: dict[str, int], n: int) -> dict[str, int] | None:
    """Some nonnegative k with sum k[a] * counts[a] == n, or None."""
    letters = [a for a, c in counts.items() if c > 0]
    best: list = [None] * (n + 1)
    best[0] = {}
    for t in range(1, n + 1):
        for a in letters:
            c = counts[a]
            if c <= t and best[t - c] is not None:
                k = dict(best[t - c])
                k[a] = k.get(a, 0) + 1
                best[t] = k
                break
    return best[n]


def _letter_counts(w: Word) -> list[int]:
    return [w.count(a) for a in w.letters()]


def pex_scale_by_primitive_power(pex_of_root: Iterable[int], k: int, max_exponent: int
                                 ) -> tuple[set[int], set[int]]:
    """pex and gex of r^k from pex of the primitive root r."""
    if k < 1:
        raise PreconditionError("k must be positive")
    pex_of_root = set(pex_of_root)
    pex = {k * n for n in pex_of_root if k * n <= max_exponent}
    gex_root = gex_from_pex(pex_of_root, max(pex_of_root, default=0))
    divisors_k = [d for d in range(1, k + 1) if k % d == 0]
    gex = {d * m for d in divisors_k for m in gex_root if d * m <= max_exponent}
    return pex, gex


def pex_all_morphisms_closed_form(w: Word, sigma: Alphabet, pex_nonperiodic: Iterable[int],
                                  max_exponent: int) -> set[int]:
    """pex over all morphisms: nonperiodic part plus the periodic semigroup."""
    if not set(w.letters()).issubset(sigma.letters):
        raise PreconditionError("alphabet(w) must be contained in sigma")
    counts = [w.count(a) for a in sigma]
    return ({n for n in pex_nonperiodic if 1 <= n <= max_exponent}
            | semigroup_values(counts, max_exponent))


def pex_enlarged_domain_closed_form(w: Word, sigma: Alphabet, pex_restricted: Iterable[int],
                                    max_exponent: int) -> tuple[set[int], set[int]]:
    """Nonperiodic pex/gex when sigma has letters that w does not use."""
    if not set(w.letters()).issubset(sigma.letters):
        raise PreconditionError("alphabet(w) must be contained in sigma")
    if len(w.letters()) == len(sigma):
        raise PreconditionError("theorem precondition violated: alphabet(w) equals sigma")
    pex = pex_all_morphisms_closed_form(w, sigma, pex_restricted, max_exponent)
    return pex, set(range(1, max_exponent + 1))


class InjKind(enum.Enum):
    INFINITE = "Infinite"
    FINITE_BOUNDED = "FiniteBounded"


class InjReason(enum.Enum):
    LETTER_ONCE_IN_ROOT = "LetterOnceInRoot"
    UPPER_BOUND_THEOREM = "UpperBoundTheorem"
    BINARY_EXACT = "BinaryExact"


@dataclass(frozen=True)
class InjClassification:
    kind: InjKind
    reason: InjReason
    upper_bound: int | None = None
    known_exact: frozenset[int] | None = None

    def __post_init__(self):
        assert (self.kind is InjKind.INFINITE) == (self.reason is InjReason.LETTER_ONCE_IN_ROOT)


def classify_injective(w: Word) -> InjClassification:
    """Where pex over injective morphisms stands for w.

    Infinite when a letter occurs once in the primitive root; exactly {k}
    for binary roots; otherwise every exponent is below k * |root|.
    """
    root, k = primitive_root(w)
    if any(root.count(a) == 1 for a in root.letters()):
        return InjClassification(InjKind.INFINITE, InjReason.LETTER_ONCE_IN_ROOT)
    if len(root.letters()) == 2:
        return InjClassification(InjKind.FINITE_BOUNDED, InjReason.BINARY_EXACT,
                                 upper_bound=k, known_exact=frozenset({k}))
    return InjClassification(InjKind.FINITE_BOUNDED, InjReason.UPPER_BOUND_THEOREM,
                             upper_bound=k * (len(root) - 1))


def pex_closed_form(w: Word, family: Family, sigma: Alphabet | None = None,
                    max_exponent: int = 1) -> set[int] | None:
    """Exact pex_family(w) ∩ [1, max_exponent] when a theorem pins it down."""
    sigma = sigma or w.alphabet
    if not w.symbols:
        raise PreconditionError("w must be nonempty")
    root, k = primitive_root(w)
    used = w.letters()
    multiples = set(range(k, max_exponent + 1, k))
    if family is Family.INJECTIVE:
        c = classify_injective(w)
        if c.kind is InjKind.INFINITE:
            return multiples
        if c.known_exact is not None:
            return {n for n in c.known_exact if n <= max_exponent}
        return None
    if family is Family.ALL:
        inner = pex_closed_form(w, Family.NONPERIODIC, Alphabet(used), max_exponent)
        if inner is None:
            return None
        return pex_all_morphisms_closed_form(w, Alphabet(used), inner, max_exponent)
    # nonperiodic
    if len(sigma) == 1:
        return set()
    if len(used) < len(sigma):
        return pex_closed_form(w, Family.ALL, Alphabet(used), max_exponent)
    if len(used) == 2:
        # on a binary domain nonperiodic and injective coincide
        return pex_closed_form(w, Family.INJECTIVE, sigma, max_exponent)
    if any(root.count(a) == 1 for a in root.letters()):
        return multiples
    return None


# -- bounded search -----------------------------------------------------------

class Completeness(enum.Enum):
    PROVEN_COMPLETE = "ProvenComplete"
    COMPLETE_UP_TO_BOUND = "CompleteUpToBound"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class PexQuery:
    w: Word
    family: Family
    domain_alphabet: Alphabet
    max_exponent: int
    max_image_len: int

    def __post_init__(self):
        if not self.w.symbols:
            raise PreconditionError("w must be nonempty")
        if not set(self.w.symbols).issubset(self.domain_alphabet.letters):
            raise PreconditionError("alphabet(w) must be contained in the domain alphabet")
        if self.max_exponent < 1 or self.max_image_len < 0:
            raise PreconditionError("max_exponent must be positive, max_image_len nonnegative")

    @classmethod
    def of(cls, w: Word, family: Family | str, max_exponent: int, max_image_len: int,
           domain_alphabet: Alphabet | None = None) -> "PexQuery":
        return cls(w, Family.parse(family), domain_alphabet or w.alphabet,
                   max_exponent, max_image_len)


@dataclass(frozen=True)
class PexWitness:
    morphism: Morphism
    root: Word
    source: str = "search"


@dataclass
class PexReport:
    query: PexQuery
    observed_pex: set[int]
    observed_gex: set[int]
    witnesses: dict[int, PexWitness]
    gex_witnesses: dict[int, tuple[Morphism, Word]]
    complete: Completeness
    caveats: list[str] = field(default_factory=list)
    searched: int = 0

    def verify(self) -> None:
        w, fam = self.query.w.over(self.query.domain_alphabet), self.query.family
        for n, wit in self.witnesses.items():
            assert is_primitive(wit.root)
            assert apply(wit.morphism, w) == wit.root ** n
            assert in_family(wit.morphism, fam)
        for d, (h, base) in self.gex_witnesses.items():
            assert apply(h, w) == base ** d and in_family(h, fam)
        assert self.observed_gex == gex_from_pex(self.observed_pex, self.query.max_exponent)


class _FamilyCheck:
    def __init__(self, family: Family):
        self.family = family
        self._inj: dict = {}

    def __call__(self, images: tuple[str, ...]) -> bool:
        if self.family is Family.ALL:
            return True
        if self.family is Family.NONPERIODIC:
            return not str_periodic(images)
        if any(not s for s in images) or len(set(images)) != len(images):
            return False
        if images not in self._inj:
            self._inj[images] = is_code(images)
        return self._inj[images]


def _power_candidates(items, counts, lengths, n, chars):
    """Images (over the search letters) that may map ``items`` onto an n-th power."""
    total = sum(c * l for c, l in zip(counts, lengths))
    if len(chars) ** sum(lengths) <= BRUTE_FORCE_LIMIT:
        for images in solutions(lengths, (), chars):
            yield images
        return
    m = len(lengths)
    eq = [(list(items), [m] * n)]
    for images in solutions(tuple(lengths) + (total // n,), eq, chars):
        yield images[:m]


def iter_power_morphisms(w: Word, sigma: Alphabet, n: int, family: Family,
                         max_image_len: int, codomain: Alphabet = BINARY,
                         budget: Budget | None = None,
                         bounds: list[int] | None = None) -> Iterator[tuple[tuple[str, ...], str]]:
    """Yield (internal images, h(w)) for morphisms sending w onto a nonempty n-th power."""
    codec = Codec(codomain)
    index = {a: i for i, a in enumerate(sigma)}
    items = [index[x] for x in w.symbols]
    counts = [w.count(a) for a in sigma]
    ok = _FamilyCheck(family)
    budget = budget or Budget()
    for lengths in length_vectors(bounds or [max_image_len] * len(sigma)):
        total = sum(c * l for c, l in zip(counts, lengths))
        if total == 0 or total % n:
            continue
        for images in _power_candidates(items, counts, lengths, n, codec.chars):
            budget.spend()
            s = "".join([images[i] for i in items])
            if str_exponent(s) % n == 0 and ok(images):
                yield images, s


def _decode_morphism(images, sigma: Alphabet, codec: Codec) -> Morphism:
    return Morphism(sigma, codec.alphabet,
                    tuple(Word(codec.decode(s), codec.alphabet) for s in images))


def _constructed_witness(w: Word, family: Family, sigma: Alphabet, n: int) -> Morphism | None:
    """A theorem-backed morphism in the family mapping w onto an n-th power of a primitive word."""
    root, k = primitive_root(w)
    if n % k:
        return None
    m = n // k
    once = [a for a in root.letters() if root.count(a) == 1]
    if once and (family is not Family.NONPERIODIC or len(sigma) >= 2):
        wit = construct_unique_letter_morphism(root.over(sigma), once[0], m)
        return to_binary(wit.h)
    spare = [a for a in sigma if a not in w.letters()]
    if family is Family.ALL or (family is Family.NONPERIODIC and spare):
        coeffs = _semigroup_coefficients({a: w.count(a) for a in sigma}, n)
        if coeffs is None:
            return None
        images = {a: "a" * coeffs.get(a, 0) for a in sigma}
        if family is Family.NONPERIODIC:
            images[spare[0]] = "b"
        return Morphism.from_dict(images, sigma, BINARY)
    return None


def pex_bounded(q: PexQuery, *, constructions: bool = True) -> PexReport:
    """Observe pex/gex by searching morphisms into {a, b} with images <= L.

    Exponents missed by the bounded search are filled in from explicit
    constructions when ``constructions`` is set; those witnesses are tagged
    ``source="construction"`` and may exceed the length bound.
    """
    sigma = q.domain_alphabet
    w = q.w.over(sigma)
    N = q.max_exponent
    codec = Codec(BINARY)
    index = {a: i for i, a in enumerate(sigma)}
    items = [index[x] for x in w.symbols]
    counts = [w.count(a) for a in sigma]
    ok = _FamilyCheck(q.family)
    budget = Budget.from_env()
    wanted = set(range(1, N + 1))
    found: dict[int, PexWitness] = {}
    caveats = []
    capped = False
    try:
        for lengths in length_vectors([q.max_image_len] * len(sigma)):
            total = sum(c * l for c, l in zip(counts, lengths))
            if total == 0:
                continue
            for n in [n for n in sorted(wanted) if total % n == 0]:
                if n not in wanted:
                    continue
                for images in _power_candidates(items, counts, lengths, n, codec.chars):
                    budget.spend()
                    s = "".join([images[i] for i in items])
                    e = str_exponent(s)
                    if e in wanted and e % n == 0 and ok(images):
                        h = canonical(_decode_morphism(images, sigma, codec))
                        root, e2 = primitive_root(apply(h, w))
                        assert e2 == e
                        found[e] = PexWitness(h, root)
                        wanted.discard(e)
                        if n not in wanted:
                            break
            if not wanted:
                break
    except SearchCapExceeded:
        capped = True
        caveats.append(f"search cap {budget.limit} reached")
    if constructions:
        for n in sorted(wanted):
            h = _constructed_witness(w, q.family, sigma, n)
            if h is None:
                continue
            h = canonical(h)
            root, e = primitive_root(apply(h, w))
            assert e == n and in_family(h, q.family)
            found[n] = PexWitness(h, root, "construction")
        if any(wit.source == "construction" for wit in found.values()):
            caveats.append("some witnesses come from explicit constructions beyond L")
    pex = set(found)
    gex_witnesses = {}
    for n in sorted(found):
        wit = found[n]
        for d in range(1, n + 1):
            if n % d == 0 and d not in gex_witnesses:
                gex_witnesses[d] = (wit.morphism, wit.root ** (n // d))
    closed = pex_closed_form(w, q.family, sigma, N)
    if capped:
        complete = Completeness.UNKNOWN
    elif closed is not None and closed == pex:
        complete = Completeness.PROVEN_COMPLETE
    else:
        complete = Completeness.COMPLETE_UP_TO_BOUND
        caveats.append(f"CompleteUpToBound L={q.max_image_len}")
    report = PexReport(q, pex, gex_from_pex(pex, N), found, gex_witnesses,
                       complete, caveats, budget.spent)
    report.verify()
    return report
