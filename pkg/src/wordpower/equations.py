"""Word equations, systems, and the reductions between the power problems.

Reductions implemented here, each with witness transport in both
directions:

* ``pow_to_equation``     w, n   -> (w, x^n)
* ``nonprim_to_system``   w      -> {(w, x^2 y^3), (xy, yx)}
* ``balance_system``      system -> one balanced equation, same nonperiodic solutions
* ``eqsatcf_to_eqsat``    system -> system with constants (nonperiodic <-> any solution)
* ``eqsatcf_to_pow``      system -> u v^(n-1)
* ``eqsatcf_to_nonprim``  system -> Z^4 u Z^4 v
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Sequence

from .errors import ParseError, PreconditionError
from .morphisms import Morphism, apply, is_periodic, to_binary
from .words import Alphabet, Word, exponent_of, format_symbols, primitive_root, tokenize

FRESH_VARIABLES = ("_x", "_y", "_z")
FRESH_CONSTANTS = ("_a", "_b")


@dataclass(frozen=True)
class Equation:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if self.lhs.alphabet != self.rhs.alphabet:
            raise PreconditionError("both sides must be declared over the same alphabet")

    @property
    def length(self) -> int:
        return len(self.lhs) + len(self.rhs)

    def __str__(self) -> str:
        return f"{format_symbols(self.lhs.symbols)} = {format_symbols(self.rhs.symbols)}"


@dataclass(frozen=True)
class EquationSystem:
    variables: Alphabet
    constants: Alphabet | None
    equations: tuple[Equation, ...]

    def __post_init__(self):
        consts = self.constants.letters if self.constants else ()
        overlap = set(consts) & set(self.variables.letters)
        if overlap:
            raise PreconditionError(f"symbols {sorted(overlap)} are both variables and constants")
        symbols = self.symbols
        object.__setattr__(self, "equations", tuple(
            Equation(e.lhs.over(symbols), e.rhs.over(symbols)) for e in self.equations))

    @classmethod
    def of(cls, equations: Iterable["Equation | tuple | str"], variables: "Alphabet | str",
           constants: "Alphabet | str | None" = None) -> "EquationSystem":
        variables = Alphabet.of(variables)
        constants = Alphabet.of(constants) if constants else None
        symbols = variables.union(constants or ())
        eqs = []
        for e in equations:
            if isinstance(e, str):
                eqs.append(_parse_equation(e, symbols))
            elif isinstance(e, Equation):
                eqs.append(e)
            else:
                lhs, rhs = e
                eqs.append(Equation(_as_word(lhs, symbols), _as_word(rhs, symbols)))
        return cls(variables, constants, tuple(eqs))

    @property
    def symbols(self) -> Alphabet:
        return self.variables.union(self.constants or ())

    @property
    def constant_free(self) -> bool:
        return self.constants is None

    @property
    def length(self) -> int:
        return sum(e.length for e in self.equations)

    def unused_variables(self) -> tuple[str, ...]:
        used = set(chain.from_iterable(e.lhs.symbols + e.rhs.symbols for e in self.equations))
        return tuple(x for x in self.variables if x not in used)

    def __str__(self) -> str:
        return format_system(self)


def _as_word(value, symbols: Alphabet) -> Word:
    if isinstance(value, Word):
        return value.over(symbols)
    if isinstance(value, str):
        return Word(tokenize(value, symbols), symbols)
    return Word(tuple(value), symbols)


def _parse_equation(line: str, symbols: Alphabet) -> Equation:
    if line.count("=") != 1:
        raise ParseError(f"expected exactly one '=' in {line!r}")
    lhs, rhs = line.split("=")
    try:
        return Equation(Word(tokenize(lhs, symbols), symbols), Word(tokenize(rhs, symbols), symbols))
    except PreconditionError as exc:
        raise ParseError(f"{line!r}: {exc}") from None


def as_system(e: Equation, constants: "Alphabet | None" = None) -> EquationSystem:
    """Wrap a single equation; every non-constant letter is a variable."""
    consts = set(constants.letters) if constants else set()
    variables = Alphabet(tuple(x for x in e.lhs.alphabet if x not in consts))
    return EquationSystem(variables, constants, (e,))


def parse_system(text: str) -> EquationSystem:
    """Parse ``vars:x,y,z`` / ``consts:`` headers followed by ``lhs = rhs`` lines."""
    lines = text.splitlines()
    if len(lines) < 2 or not lines[0].startswith("vars:") or not lines[1].startswith("consts:"):
        raise ParseError("system text must start with 'vars:' and 'consts:' lines")
    try:
        variables = Alphabet.of(lines[0][len("vars:"):])
        raw_consts = lines[1][len("consts:"):].strip()
        constants = Alphabet.of(raw_consts) if raw_consts else None
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None
    symbols = variables.union(constants or ())
    equations = tuple(_parse_equation(line, symbols) for line in lines[2:] if line.strip())
    return EquationSystem(variables, constants, equations)


def format_system(s: EquationSystem) -> str:
    consts = ",".join(s.constants.letters) if s.constants else ""
    lines = [f"vars:{','.join(s.variables.letters)}", f"consts:{consts}"]
    lines += [str(e) for e in s.equations]
    return "\n".join(lines) + "\n"


def check_solution(s: EquationSystem, h: Morphism) -> bool:
    """Does h (extended by the identity on constants) equalize every equation?"""
    missing = [x for x in s.variables if x not in h.domain]
    if missing:
        raise PreconditionError(f"morphism has no image for variables {missing}")
    table = dict(h.table)
    for c in (s.constants or ()):
        if c not in h.codomain:
            raise PreconditionError(f"constant {c!r} is not a codomain letter")
        table[c] = (c,)
    for e in s.equations:
        left = chain.from_iterable(table[x] for x in e.lhs.symbols)
        right = chain.from_iterable(table[x] for x in e.rhs.symbols)
        if tuple(left) != tuple(right):
            return False
    return True


def is_balanced(e: Equation, constants: Iterable[str] = ()) -> bool:
    constants = set(constants)
    if constants & set(e.lhs.symbols + e.rhs.symbols):
        raise PreconditionError("balance is only defined for constant-free equations")
    return all(e.lhs.count(x) == e.rhs.count(x) for x in set(e.lhs.symbols + e.rhs.symbols))


def xy_words(variables: Alphabet) -> tuple[Word, Word]:
    """X = prod_i prod_j x_i x_j and Y = prod_i prod_j x_j x_i."""
    xs = variables.letters
    X = tuple(s for xi in xs for xj in xs for s in (xi, xj))
    Y = tuple(s for xi in xs for xj in xs for s in (xj, xi))
    return Word(X, variables), Word(Y, variables)


def _require_constant_free(s: EquationSystem) -> None:
    if not s.constant_free:
        raise PreconditionError("system must be constant-free")


def balance_system(s: EquationSystem) -> Equation:
    """One balanced equation with the same nonperiodic solutions as s."""
    _require_constant_free(s)
    if not s.equations:
        raise PreconditionError("empty system")
    if any(not e.lhs.symbols or not e.rhs.symbols for e in s.equations):
        raise PreconditionError("every equation needs two nonempty sides")
    n = s.length
    X, Y = xy_words(s.variables)
    block = (X.symbols * n + Y.symbols * n) * 2
    lhs = tuple(chain.from_iterable(e.lhs.symbols + block + e.rhs.symbols for e in s.equations))
    rhs = tuple(chain.from_iterable(e.rhs.symbols + block + e.lhs.symbols for e in s.equations))
    return Equation(Word(lhs, s.variables), Word(rhs, s.variables))


def _fresh(taken: Iterable[str], names: Sequence[str]) -> None:
    clash = set(taken) & set(names)
    if clash:
        raise PreconditionError(f"fresh symbols {sorted(clash)} collide with input symbols")


def eqsatcf_to_eqsat(s: EquationSystem) -> EquationSystem:
    """Add (X, x a y) and (Y, x b z): nonperiodic solvability becomes plain solvability."""
    _require_constant_free(s)
    _fresh(s.variables, FRESH_VARIABLES + FRESH_CONSTANTS)
    x, y, z = FRESH_VARIABLES
    a, b = FRESH_CONSTANTS
    variables = s.variables.union(FRESH_VARIABLES)
    constants = Alphabet(FRESH_CONSTANTS)
    symbols = variables.union(constants)
    X, Y = xy_words(s.variables)
    extra = (Equation(X.over(symbols), Word((x, a, y), symbols)),
             Equation(Y.over(symbols), Word((x, b, z), symbols)))
    return EquationSystem(variables, constants,
                          tuple(Equation(e.lhs.over(symbols), e.rhs.over(symbols))
                                for e in s.equations) + extra)


def pow_to_equation(w: Word, n: int) -> Equation:
    """(w, x^n) over alphabet(w) plus a fresh x."""
    if n < 1:
        raise PreconditionError("n must be positive")
    _fresh(w.alphabet, FRESH_VARIABLES[:1])
    symbols = w.alphabet.union(FRESH_VARIABLES[:1])
    return Equation(w.over(symbols), Word((FRESH_VARIABLES[0],) * n, symbols))


def nonprim_to_system(w: Word) -> EquationSystem:
    """{(w, x^2 y^3), (xy, yx)}."""
    _fresh(w.alphabet, FRESH_VARIABLES[:2])
    x, y = FRESH_VARIABLES[:2]
    variables = w.alphabet.union((x, y))
    return EquationSystem(variables, None, (
        Equation(w.over(variables), Word((x, x, y, y, y), variables)),
        Equation(Word((x, y), variables), Word((y, x), variables))))


def eqsatcf_to_pow(s: EquationSystem, n: int) -> Word:
    """u v^(n-1) for the balanced form (u, v) of s."""
    if n < 2:
        raise PreconditionError("n must be at least 2")
    e = balance_system(s)
    return Word(e.lhs.symbols + e.rhs.symbols * (n - 1), s.variables)


def nonprim_block(s: EquationSystem, e: Equation) -> Word:
    """Z = X^|uv| Y^|uv| for the balanced equation e = (u, v)."""
    X, Y = xy_words(s.variables)
    k = e.length
    return Word(X.symbols * k + Y.symbols * k, s.variables)


def eqsatcf_to_nonprim(s: EquationSystem) -> Word:
    """Z^4 u Z^4 v for the balanced form (u, v) of s."""
    e = balance_system(s)
    z4 = nonprim_block(s, e).symbols * 4
    return Word(z4 + e.lhs.symbols + z4 + e.rhs.symbols, s.variables)


# -- witness transport ---------------------------------------------------------

def _nonperiodic_solution(s: EquationSystem, h: Morphism) -> None:
    if not check_solution(s, h):
        raise PreconditionError("morphism does not solve the system")
    if is_periodic(h.restrict(s.variables)):
        raise PreconditionError("morphism is periodic")


def extend_power_witness(w: Word, n: int, h: Morphism) -> Morphism:
    """h(w) = u^n  ->  solution of (w, x^n) with x -> u."""
    image = apply(h, w)
    e = exponent_of(image.symbols)
    if not image.symbols or e % n:
        raise PreconditionError(f"h(w) is not a nonempty {n}-th power")
    u = image.symbols[:len(image) // n]
    return h.extend({FRESH_VARIABLES[0]: u})


def split_exponent(n: int) -> tuple[int, int]:
    """n = 2i + 3j with i minimal, then j."""
    if n < 2:
        raise PreconditionError("n must be at least 2")
    i = next(i for i in range(n // 2 + 1) if (n - 2 * i) % 3 == 0)
    return i, (n - 2 * i) // 3


def extend_nonprim_witness(w: Word, h: Morphism) -> Morphism:
    """h(w) = u^n with n >= 2  ->  x -> u^i, y -> u^j where n = 2i + 3j."""
    image = apply(h, w)
    if not image.symbols:
        raise PreconditionError("h(w) is empty")
    root, n = primitive_root(image)
    i, j = split_exponent(n)
    x, y = FRESH_VARIABLES[:2]
    return h.extend({x: root.symbols * i, y: root.symbols * j})


def lift_to_constants(s: EquationSystem, h: Morphism) -> Morphism:
    """Nonperiodic solution of s -> solution of eqsatcf_to_eqsat(s)."""
    _nonperiodic_solution(s, h)
    g = to_binary(h.restrict(s.variables))
    X, Y = xy_words(s.variables)
    hx, hy = apply(g, X).symbols, apply(g, Y).symbols
    i = next((k for k, (p, q) in enumerate(zip(hx, hy)) if p != q), None)
    if i is None or len(hx) != len(hy):
        raise PreconditionError("h(X) and h(Y) do not differ; h is periodic")
    a, b = FRESH_CONSTANTS
    rename = {hx[i]: a, hy[i]: b}
    constants = Alphabet(FRESH_CONSTANTS)
    renamed = Morphism(g.domain, constants,
                       tuple(img.rename(rename, constants) for img in g.images))
    hx = tuple(rename[c] for c in hx)
    hy = tuple(rename[c] for c in hy)
    x, y, z = FRESH_VARIABLES
    return renamed.extend({x: hx[:i], y: hx[i + 1:], z: hy[i + 1:]})


def restrict_to_system(s: EquationSystem, h: Morphism) -> Morphism:
    """Backward transport shared by every reduction: forget auxiliary letters."""
    g = h.restrict(s.variables)
    _nonperiodic_solution(s, g)
    return g


def pow_witness_from_solution(s: EquationSystem, n: int, h: Morphism) -> tuple[Morphism, Word]:
    """Nonperiodic solution of s -> (h, base) with h(u v^(n-1)) = base^n."""
    _nonperiodic_solution(s, h)
    h = h.restrict(s.variables)
    e = balance_system(s)
    base = apply(h, e.lhs)
    assert apply(h, eqsatcf_to_pow(s, n)) == base ** n and base.symbols
    return h, base


def nonprim_witness_from_solution(s: EquationSystem, h: Morphism) -> tuple[Morphism, Word]:
    """Nonperiodic solution of s -> (h, base) with h(Z^4 u Z^4 v) = base^2."""
    _nonperiodic_solution(s, h)
    h = h.restrict(s.variables)
    e = balance_system(s)
    z4 = nonprim_block(s, e) ** 4
    base = apply(h, z4 + e.lhs)
    assert apply(h, eqsatcf_to_nonprim(s)) == base ** 2 and base.symbols
    return h, base


def solution_from_power_image(s: EquationSystem, target: Word, h: Morphism,
                              n: int | None = None) -> Morphism:
    """h nonperiodic with h(target) a nonempty power -> solution of s.

    ``target`` is the word built by ``eqsatcf_to_pow`` (pass its n) or by
    ``eqsatcf_to_nonprim`` (any exponent >= 2 is accepted).
    """
    image = apply(h, target)
    e = exponent_of(image.symbols)
    if not image.symbols or (e % n if n else e < 2):
        raise PreconditionError("h(target) is not the required power")
    return restrict_to_system(s, h)
