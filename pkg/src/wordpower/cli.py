"""Command-line front end.

Every invocation prints one report document (JSON by default) with the
fields ``command``, ``inputs``, ``result`` and ``caveats`` in that order.
Exit status: 0 on success, 1 on a domain error, 2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .constructions import construct_lower_bound_instance, construct_unique_letter_morphism
from .equations import (EquationSystem, balance_system, check_solution, eqsatcf_to_eqsat,
                        eqsatcf_to_nonprim, eqsatcf_to_pow, format_system, is_balanced,
                        nonprim_to_system, parse_system, pow_to_equation, xy_words)
from .errors import ParseError, WordPowerError
from .morphisms import (Family, apply, format_morphism, in_family, is_injective, is_periodic,
                        parse_morphism)
from .pex import PexQuery, classify_injective, pex_bounded, pex_closed_form
from .solver import find_nonprimitive_witness, find_power_witness, solve_bounded
from .words import Alphabet, Word, is_primitive, primitive_root

FIELDS = ("command", "inputs", "result", "caveats")


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    result: dict[str, Any]
    caveats: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {name: getattr(self, name) for name in FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        if list(data) != list(FIELDS):
            raise ParseError(f"report fields must be exactly {FIELDS}")
        return cls(**data)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for section in ("inputs", "result"):
            lines.append(f"{section}:")
            for key, value in getattr(self, section).items():
                lines.append(f"  {key}: {json.dumps(value)}")
        lines.append("caveats:")
        lines.extend(f"  - {c}" for c in self.caveats)
        return "\n".join(lines)


def _w(word: Word) -> str:
    return "".join(word.symbols)


def _parse_word(text: str, alphabet: str | None) -> Word:
    try:
        return Word.parse(text, Alphabet.of(alphabet) if alphabet else None)
    except WordPowerError as exc:
        raise ParseError(str(exc)) from None


def _parse_morphism(text: str, domain: str | None = None, codomain: str | None = None):
    try:
        return parse_morphism(text, domain, codomain)
    except WordPowerError as exc:
        raise ParseError(str(exc)) from None


def _read_system(path: str) -> EquationSystem:
    return parse_system(Path(path).read_text())


def _unused_caveat(s: EquationSystem) -> list[str]:
    unused = s.unused_variables()
    return [f"unused variables: {','.join(unused)}"] if unused else []


# -- commands -------------------------------------------------------------------

def cmd_pex(args) -> Report:
    w = _parse_word(args.word, args.alphabet)
    sigma = Alphabet.of(args.sigma) if args.sigma else w.alphabet
    q = PexQuery(w.over(sigma), Family.parse(args.family), sigma, args.max_exp, args.max_len)
    report = pex_bounded(q, constructions=not args.no_constructions)
    report.verify()
    closed = pex_closed_form(q.w, q.family, sigma, q.max_exponent)
    witnesses = {str(n): {"morphism": format_morphism(wit.morphism), "root": _w(wit.root),
                          "source": wit.source}
                 for n, wit in sorted(report.witnesses.items())}
    return Report("pex", {"word": _w(w), "sigma": list(sigma), "family": q.family.value,
                          "max_exp": q.max_exponent, "max_len": q.max_image_len},
                  {"observed_pex": sorted(report.observed_pex),
                   "observed_gex": sorted(report.observed_gex),
                   "complete": report.complete.value,
                   "closed_form": sorted(closed) if closed is not None else None,
                   "witnesses": witnesses,
                   "searched": report.searched},
                  report.caveats)


def cmd_classify(args) -> Report:
    w = _parse_word(args.word, args.alphabet)
    c = classify_injective(w)
    return Report("classify-inj", {"word": _w(w)},
                  {"kind": c.kind.value, "reason": c.reason.value,
                   "upper_bound": c.upper_bound,
                   "known_exact": sorted(c.known_exact) if c.known_exact is not None else None})


def cmd_construct(args) -> Report:
    if args.which == "unique-letter":
        w = _parse_word(args.word, args.alphabet)
        wit = construct_unique_letter_morphism(w, args.letter, args.n)
        inputs = {"kind": "unique-letter", "word": _w(w), "letter": args.letter, "n": args.n}
    else:
        wit = construct_lower_bound_instance(args.n)
        inputs = {"kind": "lower-bound", "n": args.n}
    image = apply(wit.h, wit.w)
    assert image == wit.base ** wit.exponent and is_injective(wit.h)
    return Report("construct", inputs,
                  {"w": _w(wit.w), "alphabet": list(wit.w.alphabet),
                   "morphism": format_morphism(wit.h), "exponent": wit.exponent,
                   "base": _w(wit.base), "image_length": len(image),
                   "injective": is_injective(wit.h)})


def cmd_reduce(args) -> Report:
    kind = args.which
    caveats: list[str] = []
    if kind in ("pow-to-eq", "nonprim-to-eq"):
        w = _parse_word(args.word, args.alphabet)
        inputs = {"word": _w(w)}
        if kind == "pow-to-eq":
            inputs["n"] = args.n
            e = pow_to_equation(w, args.n)
            system = EquationSystem(e.lhs.alphabet, None, (e,))
        else:
            system = nonprim_to_system(w)
        return Report(f"reduce {kind}", inputs,
                      {"system": format_system(system), "length": system.length})
    s = _read_system(args.system)
    caveats += _unused_caveat(s)
    inputs = {"system": format_system(s)}
    if kind == "balance":
        e = balance_system(s)
        result = {"lhs": _w(e.lhs), "rhs": _w(e.rhs), "length": e.length,
                  "balanced": is_balanced(e)}
    elif kind == "cf-to-const":
        t = eqsatcf_to_eqsat(s)
        result = {"system": format_system(t), "length": t.length}
    elif kind == "eq-to-pow":
        inputs["n"] = args.n
        w = eqsatcf_to_pow(s, args.n)
        result = {"word": _w(w), "alphabet": list(w.alphabet), "length": len(w)}
    else:
        w = eqsatcf_to_nonprim(s)
        result = {"word": None if args.omit_word else _w(w),
                  "alphabet": list(w.alphabet), "length": len(w)}
    return Report(f"reduce {kind}", inputs, result, caveats)


def cmd_solve(args) -> Report:
    family = Family.parse(args.family)
    codomain = Alphabet.of(args.codomain)
    if args.system:
        s = _read_system(args.system)
        out = solve_bounded(s, family, args.max_len, codomain)
        if out.sat:
            assert check_solution(s, out.witness) and in_family(out.witness, family)
        inputs = {"system": format_system(s)}
        caveats = _unused_caveat(s)
    else:
        w = _parse_word(args.word, args.alphabet)
        if args.n:
            out = find_power_witness(w, args.n, family, args.max_len, codomain)
        else:
            out = find_nonprimitive_witness(w, family, args.max_len, codomain)
        if out.sat:
            image = apply(out.witness, w)
            assert out.base is not None and image == out.base ** (len(image) // len(out.base))
        inputs = {"word": _w(w), "n": args.n}
        caveats = []
    inputs.update(family=family.value, max_len=args.max_len, codomain=list(codomain))
    result = {"status": out.status.value,
              "witness": format_morphism(out.witness) if out.witness else None,
              "bound_used": out.bound_used}
    if out.base is not None:
        result["base"] = _w(out.base)
    if not out.sat:
        caveats.append(f"UnknownAtBound L={args.max_len}")
    return Report("solve", inputs, result, caveats + list(out.caveats))


def cmd_check(args) -> Report:
    kind = args.which
    if kind == "primitive":
        w = _parse_word(args.word, args.alphabet)
        root, k = primitive_root(w)
        return Report("check primitive", {"word": _w(w)},
                      {"primitive": is_primitive(w), "root": _w(root), "exponent": k})
    h = _parse_morphism(args.morphism, codomain=args.codomain)
    if kind == "injective":
        return Report("check injective", {"morphism": format_morphism(h)},
                      {"injective": is_injective(h)})
    if kind == "periodic":
        return Report("check periodic", {"morphism": format_morphism(h)},
                      {"periodic": is_periodic(h)})
    s = _read_system(args.system)
    if s.constants:
        h = _parse_morphism(args.morphism, s.variables, args.codomain or s.constants)
    return Report("check solution", {"system": format_system(s), "morphism": format_morphism(h)},
                  {"solution": check_solution(s, h), "periodic": is_periodic(h)})


def cmd_xy(args) -> Report:
    variables = Alphabet.of(args.vars) if args.vars else Alphabet(
        tuple(f"x{i}" for i in range(1, args.n + 1)))
    X, Y = xy_words(variables)
    return Report("xy-words", {"vars": list(variables)},
                  {"X": _w(X), "Y": _w(Y), "length": len(X)})


# -- argument parsing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="wordpower", parents=[common],
                                     description="Map words to powers under morphism families.")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_args(p, required=True):
        p.add_argument("--word", required=required)
        p.add_argument("--alphabet", help="declared alphabet, e.g. a,b or x1,x2")

    p = sub.add_parser("pex", parents=[common], help="bounded pex/gex search")
    word_args(p)
    p.add_argument("--sigma", help="domain alphabet (defaults to --alphabet)")
    p.add_argument("--family", default="nonperiodic")
    p.add_argument("--max-exp", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--no-constructions", action="store_true")
    p.set_defaults(run=cmd_pex)

    p = sub.add_parser("classify-inj", parents=[common], help="classify pex over injective morphisms")
    word_args(p)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("construct", parents=[common], help="explicit high-power witnesses")
    csub = p.add_subparsers(dest="which", required=True)
    q = csub.add_parser("unique-letter", parents=[common])
    word_args(q)
    q.add_argument("--letter", required=True)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(run=cmd_construct)
    q = csub.add_parser("lower-bound", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(run=cmd_construct)

    p = sub.add_parser("reduce", parents=[common], help="reductions between problems")
    rsub = p.add_subparsers(dest="which", required=True)
    for name in ("pow-to-eq", "nonprim-to-eq"):
        q = rsub.add_parser(name, parents=[common])
        word_args(q)
        if name == "pow-to-eq":
            q.add_argument("--n", type=int, required=True)
        q.set_defaults(run=cmd_reduce)
    for name in ("eq-to-pow", "eq-to-nonprim", "cf-to-const", "balance"):
        q = rsub.add_parser(name, parents=[common])
        q.add_argument("--system", required=True)
        if name == "eq-to-pow":
            q.add_argument("--n", type=int, required=True)
        if name == "eq-to-nonprim":
            q.add_argument("--omit-word", action="store_true")
        q.set_defaults(run=cmd_reduce)

    p = sub.add_parser("solve", parents=[common], help="bounded equation / power solving")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--system")
    target.add_argument("--word")
    p.add_argument("--alphabet")
    p.add_argument("--n", type=int, help="with --word: power to reach (default: any >= 2)")
    p.add_argument("--family", default="nonperiodic")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--codomain", default="a,b")
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("check", parents=[common], help="predicates")
    ksub = p.add_subparsers(dest="which", required=True)
    for name in ("injective", "periodic"):
        q = ksub.add_parser(name, parents=[common])
        q.add_argument("--morphism", required=True)
        q.add_argument("--codomain")
        q.set_defaults(run=cmd_check)
    q = ksub.add_parser("primitive", parents=[common])
    word_args(q)
    q.set_defaults(run=cmd_check)
    q = ksub.add_parser("solution", parents=[common])
    q.add_argument("--system", required=True)
    q.add_argument("--morphism", required=True)
    q.add_argument("--codomain")
    q.set_defaults(run=cmd_check)

    p = sub.add_parser("xy-words", parents=[common], help="the separator words X and Y")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--vars")
    p.set_defaults(run=cmd_xy)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.run(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (WordPowerError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(report.to_json() if args.format == "json" else report.to_text())
    return 0


def entry() -> None:
    sys.exit(main())
