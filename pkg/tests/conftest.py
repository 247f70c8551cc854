"""Brute-force oracles shared by the test modules.

These deliberately avoid the library's own algorithms (borders, union-find,
Sardinas-Patterson) so that agreement means something.
"""

from __future__ import annotations

import itertools

import pytest


def naive_exponent(seq) -> int:
    """Largest k with seq equal to a k-fold repetition of its prefix."""
    seq = tuple(seq)
    n = len(seq)
    if n == 0:
        return 0
    return max(k for k in range(1, n + 1) if n % k == 0 and seq[:n // k] * k == seq)


def naive_primitive(seq) -> bool:
    return naive_exponent(seq) == 1


def words_upto(letters, max_len, min_len=0):
    for n in range(min_len, max_len + 1):
        yield from itertools.product(letters, repeat=n)


def naive_apply(images: dict, w) -> tuple:
    return tuple(c for x in w for c in images[x])


def naive_periodic(images: dict) -> bool:
    letters = list(images)
    return all(naive_apply(images, (x, y)) == naive_apply(images, (y, x))
               for x in letters for y in letters)


def naive_injective(images: dict, max_len: int = 6) -> bool:
    seen = {}
    for w in words_upto(list(images), max_len):
        img = naive_apply(images, w)
        if img in seen and seen[img] != w:
            return False
        seen[img] = w
    return True


def length_order(bounds):
    """Length vectors ordered by total, then lexicographically."""
    vecs = itertools.product(*(range(b + 1) for b in bounds))
    return sorted(vecs, key=lambda v: (sum(v), v))


def naive_morphisms(domain, codomain, max_len):
    """All image tuples with every image of length <= max_len, in search order."""
    for lengths in length_order([max_len] * len(domain)):
        yield from itertools.product(*(list(itertools.product(codomain, repeat=l))
                                       for l in lengths))


def naive_pex(w, domain, family, max_exp, max_len, codomain=("a", "b")) -> set[int]:
    out = set()
    for imgs in naive_morphisms(domain, codomain, max_len):
        images = dict(zip(domain, imgs))
        image = naive_apply(images, w)
        if not image:
            continue
        k = naive_exponent(image)
        if k > max_exp:
            continue
        if family == "nonperiodic" and naive_periodic(images):
            continue
        if family == "injective" and not (all(images.values())
                                          and len(set(images.values())) == len(images)
                                          and naive_injective(images, 5)):
            continue
        out.add(k)
    return out


@pytest.fixture
def no_cap(monkeypatch):
    monkeypatch.delenv("WORDPOWER_MAX_SEARCH", raising=False)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
