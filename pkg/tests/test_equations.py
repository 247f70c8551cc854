import itertools
import random

import pytest

from wordpower.equations import (Equation, EquationSystem, balance_system, check_solution,
                                 eqsatcf_to_eqsat, eqsatcf_to_nonprim, eqsatcf_to_pow,
                                 extend_nonprim_witness, extend_power_witness, format_system,
                                 is_balanced, lift_to_constants, nonprim_to_system,
                                 nonprim_witness_from_solution, parse_system, pow_to_equation,
                                 pow_witness_from_solution, restrict_to_system,
                                 solution_from_power_image, split_exponent, xy_words)
from wordpower.errors import ParseError, PreconditionError
from wordpower.morphisms import Morphism, apply, canonical, is_periodic, parse_morphism
from wordpower.solver import find_power_witness, iter_solutions, solve_bounded
from wordpower.words import BINARY, Alphabet, word

from conftest import naive_exponent

EX21 = "x->aba;y->a;z->baab"


def system(*eqs, variables="xyz"):
    return EquationSystem.of(eqs, variables)


def sol(text, s):
    return parse_morphism(text, s.variables, "ab")


class TestModel:
    def test_length(self):
        assert system("xx = yzy", "xy = yx").length == 9

    def test_overlap_rejected(self):
        with pytest.raises(PreconditionError):
            EquationSystem.of(["x = a"], "xa", "a")

    def test_unused_variables(self):
        assert system("xy = yx").unused_variables() == ("z",)

    @pytest.mark.parametrize("text", [
        "vars:x,y,z\nconsts:\nxx = yzy\n",
        "vars:x,y\nconsts:\nxy = yx\nxx = yy\n",
        "vars:x,y,_x,_y,_z\nconsts:_a,_b\nxy = yx\nxxxyyxyy = _x _a _y\nxxyxxyyy = _x _b _z\n",
    ])
    def test_format_round_trip_is_byte_identical(self, text):
        assert format_system(parse_system(text)) == text

    @pytest.mark.parametrize("bad", ["xx = yzy\n", "vars:x\nconsts:\nx == x\n",
                                     "vars:x\nconsts:\nx = q\n", "vars:x,x\nconsts:\n"])
    def test_malformed(self, bad):
        with pytest.raises(ParseError):
            parse_system(bad)


class TestCheckSolution:
    def test_examples(self):
        s = system("xx = yzy")
        assert check_solution(s, sol(EX21, s))
        assert not check_solution(s, sol("x->a;y->a;z->a", s))
        c = system("xy = yx", variables="xy")
        assert check_solution(c, sol("x->a;y->aa", c))

    def test_missing_variable(self):
        s = system("xx = yzy")
        with pytest.raises(PreconditionError):
            check_solution(s, parse_morphism("x->a;y->a", None, "ab"))

    def test_constants_fixed(self):
        s = EquationSystem.of(["x b = a y"], "xy", "ab")
        h = parse_morphism("x->a;y->b", "xy", "ab")
        assert check_solution(s, h)
        assert not check_solution(s, parse_morphism("x->b;y->a", "xy", "ab"))


class TestBalance:
    @pytest.mark.parametrize("lhs,rhs,expected", [("xy", "yx", True), ("xx", "yzy", False),
                                                  ("xyxy", "yyxx", True)])
    def test_is_balanced(self, lhs, rhs, expected):
        e = system(f"{lhs} = {rhs}").equations[0]
        assert is_balanced(e) is expected

    def test_xy_words(self):
        X, Y = xy_words(Alphabet.of("x1,x2"))
        assert "".join(X.symbols) == "x1x1x1x2x2x1x2x2"
        assert "".join(Y.symbols) == "x1x1x2x1x1x2x2x2"
        X, Y = xy_words(Alphabet(("x1",)))
        assert X == Y and len(X) == 2
        X, _ = xy_words(Alphabet.of("xyz"))
        blocks = [X.symbols[i:i + 2] for i in range(0, 18, 2)]
        assert len(X) == 18 and sorted(blocks) == sorted(itertools.product("xyz", repeat=2))

    def test_commutation_example(self):
        s = system("xy = yx", variables="xy")
        X, Y = xy_words(s.variables)
        block = (X ** 4 + Y ** 4) ** 2
        xy, yx = word("xy", "xy"), word("yx", "xy")
        assert balance_system(s) == Equation(xy + block + yx, yx + block + xy)

    def test_balanced_and_solutions_preserved(self):
        for s in [system("xx = yzy"), system("xyz = zyx"), system("xy = yx", "xx = yy")]:
            e = balance_system(s)
            assert is_balanced(e) and len(e.lhs) == len(e.rhs)
            t = EquationSystem(s.variables, None, (e,))
            for h in iter_solutions(s, "all", 2):
                assert check_solution(t, h)

    def test_nonperiodic_solution_sets_agree(self):
        s = system("xx = yzy")
        t = EquationSystem(s.variables, None, (balance_system(s),))
        a = {canonical(h) for h in iter_solutions(s, "nonperiodic", 4)}
        b = {canonical(h) for h in iter_solutions(t, "nonperiodic", 4)}
        assert a == b and a

    @pytest.mark.parametrize("s", [EquationSystem.of([], "xy"), EquationSystem.of(["x = "], "x"),
                                   EquationSystem.of(["x = a"], "x", "a")])
    def test_preconditions(self, s):
        with pytest.raises(PreconditionError):
            balance_system(s)


class TestReductionShapes:
    def test_cf_to_const(self):
        t = eqsatcf_to_eqsat(system("xy = yx", variables="xy"))
        assert len(t.variables) == 5 and len(t.constants) == 2 and len(t.equations) == 3

    def test_fresh_collision(self):
        with pytest.raises(PreconditionError):
            eqsatcf_to_eqsat(EquationSystem.of(["_x = y"], "_x,y"))

    def test_pow_to_equation(self):
        assert str(pow_to_equation(word("aabb"), 2)) == "aabb = _x _x"
        assert pow_to_equation(word("aa"), 3).rhs.symbols == ("_x",) * 3

    def test_nonprim_to_system(self):
        s = nonprim_to_system(word("aabb"))
        assert [str(e) for e in s.equations] == ["aabb = _x _x _y _y _y", "_x _y = _y _x"]
        assert s.length == 4 + 5 + 4

    def test_nonprim_to_system_aa_solvable(self):
        s = nonprim_to_system(word("aa", "ab"))
        h = parse_morphism("a->a;b->b;_x->a;_y->", s.variables, "ab")
        assert check_solution(s, h) and not is_periodic(h)

    def test_pow_length(self):
        s = system("xx = yzy")
        e = balance_system(s)
        for n in (2, 3, 4):
            assert len(eqsatcf_to_pow(s, n)) == len(e.lhs) + (n - 1) * len(e.rhs)

    def test_nonprim_length(self):
        s = system("xy = yx", variables="xy")
        e = balance_system(s)
        z = 2 * e.length * 2 * len(s.variables) ** 2
        assert len(eqsatcf_to_nonprim(s)) == 8 * z + e.length


class TestTransport:
    def test_split_exponent(self):
        for n in range(2, 40):
            i, j = split_exponent(n)
            assert 2 * i + 3 * j == n
            assert all((n - 2 * k) % 3 for k in range(i))

    def test_power_witness_round_trip(self):
        w = word("abbacc")
        out = find_power_witness(w, 2, "nonperiodic", 4)
        h = extend_power_witness(w, 2, out.witness)
        e = pow_to_equation(w, 2)
        s = EquationSystem(e.lhs.alphabet, None, (e,))
        assert check_solution(s, h) and not is_periodic(h)

    def test_nonprim_witness_round_trip(self):
        w = word("abab")
        h = parse_morphism("a->ab;b->b", "ab", "ab")
        for k in range(1, 5):
            g = parse_morphism(f"a->{'a' * k};b->", "ab", "ab")
            ext = extend_nonprim_witness(w, g)
            assert check_solution(nonprim_to_system(w), ext)
        ext = extend_nonprim_witness(w, h)
        assert check_solution(nonprim_to_system(w), ext) and not is_periodic(ext)

    def test_lift_and_restrict(self):
        s = system("xx = yzy")
        h = sol(EX21, s)
        t = eqsatcf_to_eqsat(s)
        lifted = lift_to_constants(s, h)
        assert check_solution(t, lifted)
        back = restrict_to_system(s, lifted)
        assert check_solution(s, back) and not is_periodic(back)

    def test_lift_rejects_periodic(self):
        s = system("xy = yx", variables="xy")
        with pytest.raises(PreconditionError):
            lift_to_constants(s, sol("x->a;y->aa", s))

    def test_pow_and_nonprim_targets(self):
        s = system("xx = yzy")
        h = sol(EX21, s)
        for n in (2, 3):
            g, base = pow_witness_from_solution(s, n, h)
            target = eqsatcf_to_pow(s, n)
            assert apply(g, target) == base ** n
            assert solution_from_power_image(s, target, g, n) == g
        g, base = nonprim_witness_from_solution(s, h)
        target = eqsatcf_to_nonprim(s)
        assert apply(g, target) == base ** 2
        assert solution_from_power_image(s, target, g) == g

    def test_power_image_requires_power(self):
        s = system("xx = yzy")
        h = sol("x->ab;y->a;z->b", s)
        with pytest.raises(PreconditionError):
            solution_from_power_image(s, eqsatcf_to_pow(s, 2), h, 2)


def test_separator_words_four_way():
    rng = random.Random(2024)
    for _ in range(200):
        variables = Alphabet.of(rng.choice(["x1,x2", "x1,x2,x3"]))
        images = {x: "".join(rng.choice("ab") for _ in range(rng.randint(0, 3)))
                  for x in variables}
        h = Morphism.from_dict(images, variables, BINARY)
        X, Y = xy_words(variables)
        for n in (2, 3):
            big = apply(h, X ** n + Y ** n)
            conds = [is_periodic(h), apply(h, X) == apply(h, Y),
                     apply(h, X + Y) == apply(h, Y + X),
                     not big.symbols or naive_exponent(big.symbols) > 1]
            assert len(set(conds)) == 1, (images, n, conds)


def test_pow_to_equation_matches_gex_search():
    from conftest import words_upto
    L = 3
    for t in words_upto("ab", 5, 1):
        w = word("".join(t), "ab")
        for n in (1, 2, 3):
            direct = find_power_witness(w, n, "nonperiodic", L)
            e = pow_to_equation(w, n)
            s = EquationSystem(e.lhs.alphabet, None, (e,))
            # the searched x has to be long enough to hold h(w)^(1/n)
            out = solve_bounded(s, "nonperiodic", L, bounds={"_x": L * len(w) // n})
            assert direct.sat == out.sat, (w, n)
            if out.sat:
                assert out.witness.restrict(w.alphabet) == direct.witness
