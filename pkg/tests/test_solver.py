import itertools

import pytest

from wordpower.equations import EquationSystem, check_solution
from wordpower.errors import PreconditionError
from wordpower.morphisms import format_morphism, is_periodic
from wordpower.solver import (Status, find_nonprimitive_witness, find_power_witness,
                              iter_solutions, solve_bounded)
from wordpower.words import word

from conftest import (naive_apply, naive_exponent, naive_injective, naive_morphisms,
                      naive_periodic)

FIXTURES = ["xx = yzy", "xy = yx", "xyz = zyx", "xxy = yxx", "xy = zx", "xyx = yxy",
            "xxx = yyzz", "xz = zy"]


def system(*eqs, variables="xyz"):
    return EquationSystem.of(eqs, variables)


def brute_first(s, family, L):
    vs = list(s.variables)
    for imgs in naive_morphisms(vs, "ab", L):
        images = dict(zip(vs, imgs))
        if all(naive_apply(images, e.lhs.symbols) == naive_apply(images, e.rhs.symbols)
               for e in s.equations):
            if family == "nonperiodic" and naive_periodic(images):
                continue
            return ";".join(f"{x}->{''.join(images[x])}" for x in vs)
    return None


class TestSolveBounded:
    def test_example_first_witness(self):
        s = system("xx = yzy")
        out = solve_bounded(s, "nonperiodic", 4)
        assert out.status is Status.SAT and out.bound_used == 4
        assert format_morphism(out.witness) == "x->aba;y->a;z->baab"
        assert check_solution(s, out.witness)

    @pytest.mark.parametrize("eq", ["xxx = yyzz", "xy = yx"])
    def test_unknown(self, eq):
        vs = "xyz" if "z" in eq else "xy"
        out = solve_bounded(system(eq, variables=vs), "nonperiodic", 3)
        assert out.status is Status.UNKNOWN_AT_BOUND and out.witness is None

    @pytest.mark.parametrize("eq", FIXTURES)
    @pytest.mark.parametrize("family", ["all", "nonperiodic"])
    def test_first_witness_matches_brute_force(self, eq, family):
        s = system(eq)
        out = solve_bounded(s, family, 3)
        expected = brute_first(s, family, 3)
        assert (format_morphism(out.witness) if out.sat else None) == expected

    def test_all_solutions_match_brute_force(self):
        s = system("xy = zx")
        got = [format_morphism(h) for h in iter_solutions(s, "all", 2)]
        vs = list(s.variables)
        expected = []
        for imgs in naive_morphisms(vs, "ab", 2):
            images = dict(zip(vs, imgs))
            if naive_apply(images, "xy") == naive_apply(images, "zx"):
                expected.append(";".join(f"{x}->{''.join(images[x])}" for x in vs))
        assert got == expected

    @pytest.mark.parametrize("eq", FIXTURES)
    def test_monotone_and_deterministic(self, eq):
        s = system(eq)
        outs = [solve_bounded(s, "nonperiodic", L) for L in range(5)]
        first = next((o for o in outs if o.sat), None)
        if first:
            i = outs.index(first)
            assert all(o.sat for o in outs[i:])
        assert solve_bounded(s, "nonperiodic", 4) == outs[4]

    def test_constants(self):
        s = EquationSystem.of(["x b = a y"], "xy", "ab")
        out = solve_bounded(s, "all", 2)
        assert out.sat and check_solution(s, out.witness)
        with pytest.raises(PreconditionError):
            solve_bounded(s, "nonperiodic", 2)
        with pytest.raises(PreconditionError):
            solve_bounded(EquationSystem.of(["x = c"], "x", "c"), "all", 2)

    def test_lyndon_schutzenberger_all_bounds(self):
        for k, m, n in itertools.product((2, 3), repeat=3):
            s = EquationSystem.of([("x" * k, "y" * m + "z" * n)], "xyz")
            for L in range(5):
                assert not solve_bounded(s, "nonperiodic", L).sat

    def test_search_cap(self, monkeypatch):
        monkeypatch.setenv("WORDPOWER_MAX_SEARCH", "3")
        out = solve_bounded(system("xx = yzy"), "nonperiodic", 4)
        assert out.status is Status.UNKNOWN_AT_BOUND and "search cap" in out.caveats

    def test_negative_bound(self):
        with pytest.raises(PreconditionError):
            solve_bounded(system("xy = yx"), "all", -1)


class TestPowerWitness:
    def test_aa_over_binary(self):
        out = find_power_witness(word("aa", "ab"), 2, "nonperiodic", 1)
        assert format_morphism(out.witness) == "a->a;b->b"

    def test_aabb(self):
        assert not find_power_witness(word("aabb"), 2, "nonperiodic", 3).sat

    def test_abbacc(self):
        out = find_power_witness(word("abbacc"), 2, "nonperiodic", 4)
        assert format_morphism(out.witness) == "a->a;b->b;c->b"
        assert str(out.base) == "abb" and not is_periodic(out.witness)

    def test_matches_brute_force(self):
        for w in ["aab", "abab", "abba", "aabab", "abc", "aabc"]:
            sigma = sorted(set(w))
            for n in (2, 3):
                out = find_power_witness(word(w), n, "nonperiodic", 2)
                expected = None
                for imgs in naive_morphisms(sigma, "ab", 2):
                    images = dict(zip(sigma, imgs))
                    image = naive_apply(images, w)
                    if image and naive_exponent(image) % n == 0 and not naive_periodic(images):
                        expected = ";".join(f"{a}->{''.join(images[a])}" for a in sigma)
                        break
                assert (format_morphism(out.witness) if out.sat else None) == expected

    def test_nonprimitive(self):
        out = find_nonprimitive_witness(word("abbacc"), "nonperiodic", 2)
        assert out.sat
        image = [c for x in "abbacc" for c in out.witness.image(x).symbols]
        assert naive_exponent(image) >= 2
        assert not find_nonprimitive_witness(word("aabb"), "nonperiodic", 3).sat

    def test_nonprimitive_matches_brute_force(self):
        for w in ["aab", "abab", "abba", "abbacc", "abcab"]:
            sigma = sorted(set(w))
            out = find_nonprimitive_witness(word(w), "injective", 2)
            expected = None
            for imgs in naive_morphisms(sigma, "ab", 2):
                images = dict(zip(sigma, imgs))
                image = naive_apply(images, w)
                if image and naive_exponent(image) >= 2 and naive_injective(images, 5):
                    expected = ";".join(f"{a}->{''.join(images[a])}" for a in sigma)
                    break
            assert (format_morphism(out.witness) if out.sat else None) == expected

