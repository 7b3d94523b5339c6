import random

import pytest

from conftest import (all_digraphs, oracle_antipode_terms,
                      oracle_character_polynomial, random_digraph)
from hopfdg import (BASIC, BinPoly, Character, Digraph, EDGE, EMPTY,
                    FormalSum, SizeLimitError, antipode, antipode_of_sum,
                    basic_char, character_of_sum, character_polynomial,
                    character_polynomial_of_sum, disjoint_union, edge_char)
from hopfdg.rings import Q


def as_term_dict(s: FormalSum) -> dict:
    return {t.edges: c for t, c in s.items()}


def test_characters_on_small_graphs(g3):
    assert basic_char(EMPTY) == 1
    assert basic_char(Digraph("ab")) == 1
    assert basic_char(g3) == 0
    assert edge_char(g3) == Q ** 3
    assert edge_char(EMPTY) == 1
    assert BASIC(g3) == 0
    assert EDGE(Digraph("ab", (("a", "b"),))) == Q


def test_antipode_golden(g3):
    s = antipode(g3)
    items = list(s.items())
    assert [(t.edge_list, c) for t, c in items] == [
        ((("0", "1"), ("0", "2"), ("1", "2")), -1),
        ((("0", "1"),), 1),
        ((("1", "2"),), 1),
        ((), -1),
    ]


def test_antipode_empty_and_singletons():
    assert as_term_dict(antipode(EMPTY)) == {frozenset(): 1}
    one = Digraph("a")
    assert as_term_dict(antipode(one)) == {frozenset(): -1}
    two = Digraph("ab")
    # two isolated vertices: 2 orderings minus the single block
    assert as_term_dict(antipode(two)) == {frozenset(): 1}


def test_antipode_matches_oracle_exhaustive():
    for labels in ("", "a", "ab", "abc"):
        for g in all_digraphs(labels):
            assert as_term_dict(antipode(g)) == oracle_antipode_terms(g)


def test_antipode_matches_oracle_random():
    rng = random.Random(5)
    for n in (4, 5):
        for _ in range(60):
            g = random_digraph(rng, "abcde"[:n])
            assert as_term_dict(antipode(g)) == oracle_antipode_terms(g)


def test_antipode_parallel_matches_sequential():
    rng = random.Random(7)
    for _ in range(3):
        g = random_digraph(rng, "abcdef")
        assert as_term_dict(antipode(g, workers=2)) == as_term_dict(antipode(g))


def test_antipode_is_an_involution_on_sums():
    # applying the antipode twice returns the original graph as a sum
    rng = random.Random(9)
    for _ in range(25):
        g = random_digraph(rng, "abcd")
        twice = antipode_of_sum(antipode(g))
        assert as_term_dict(twice) == {g.edges: 1}


def test_antipode_respects_products():
    rng = random.Random(13)
    for _ in range(20):
        g = random_digraph(rng, "abc")
        h = random_digraph(rng, "xy")
        u = disjoint_union(g, h)
        expect: dict = {}
        for tg, cg in antipode(g).items():
            for th, ch in antipode(h).items():
                key = disjoint_union(tg, th).edges
                expect[key] = expect.get(key, 0) + cg * ch
        expect = {k: v for k, v in expect.items() if v}
        assert as_term_dict(antipode(u)) == expect


def test_antipode_size_gate():
    big = Digraph([f"v{i}" for i in range(10)])
    with pytest.raises(SizeLimitError):
        antipode(big)
    assert len(antipode(big, max_vertices=10)) == 1


def test_character_polynomial_golden(g3):
    assert character_polynomial(g3, BASIC).coeffs == (0, 0, 0, 1)
    edge = character_polynomial(g3, EDGE)
    assert edge.coeffs == (0, Q ** 3, 2 * Q, 1)


def test_character_polynomial_matches_oracle():
    rng = random.Random(21)
    graphs = list(all_digraphs("ab")) + list(all_digraphs("abc"))
    graphs += [random_digraph(rng, "abcd") for _ in range(40)]
    graphs += [random_digraph(rng, "abcde") for _ in range(15)]
    for g in graphs:
        assert character_polynomial(g, BASIC) == oracle_character_polynomial(g, basic_char)
        assert character_polynomial(g, EDGE) == oracle_character_polynomial(g, edge_char)


def test_generic_engine_matches_fast_engine():
    # a bare callable skips the edge-count fast path on purpose
    rng = random.Random(23)
    for _ in range(25):
        g = random_digraph(rng, "abcd")
        assert character_polynomial(g, basic_char) == character_polynomial(g, BASIC)
        assert character_polynomial(g, edge_char) == character_polynomial(g, EDGE)


def test_character_polynomial_parallel_matches_sequential():
    rng = random.Random(29)
    for _ in range(3):
        g = random_digraph(rng, "abcdef")
        seq = character_polynomial(g, EDGE)
        par = character_polynomial(g, EDGE, workers=3)
        assert seq == par


def test_character_polynomial_is_multiplicative():
    rng = random.Random(31)
    for _ in range(20):
        g = random_digraph(rng, "abc")
        h = random_digraph(rng, "xy")
        u = disjoint_union(g, h)
        for char in (BASIC, EDGE):
            pg = character_polynomial(g, char)
            ph = character_polynomial(h, char)
            pu = character_polynomial(u, char)
            for n in range(-3, 5):
                assert pu.eval(n) == pg.eval(n) * ph.eval(n)


def test_character_polynomial_degree_and_unit():
    assert character_polynomial(EMPTY, BASIC) == BinPoly((1,))
    g = Digraph("abcd")
    # no edges: coefficient of C(n,k) counts surjective colorings per block count
    poly = character_polynomial(g, BASIC)
    assert poly.eval(1) == 1
    assert poly.eval(2) == 16
    assert poly.eval(3) == 81


def test_custom_character_through_generic_engine(g3):
    indicator = Character("discrete", lambda g: 1 if not g.edges else 0)
    assert character_polynomial(g3, indicator) == character_polynomial(g3, BASIC)
    counting = Character("size", lambda g: 2 ** len(g.vertices), None)
    poly = character_polynomial(g3, counting)
    # blocks partition the vertices, so every admissible composition gives 2^3
    base = character_polynomial(g3, Character("one", lambda g: 1))
    assert poly == base.scale(8)


def test_formal_sum_linearity(g3):
    s = FormalSum.of(g3.vertices, [(g3, 2), (g3.composition_minor([{"0"}, {"1", "2"}]), -1)])
    assert character_of_sum(s, edge_char) == 2 * Q ** 3 - Q
    lhs = character_polynomial_of_sum(s, EDGE)
    rhs = character_polynomial(g3, EDGE).scale(2) \
        + character_polynomial(g3.composition_minor([{"0"}, {"1", "2"}]), EDGE).scale(-1)
    assert lhs == rhs


def test_formal_sum_validates_and_merges(g3):
    with pytest.raises(ValueError):
        FormalSum.of(("0", "1"), [(g3, 1)])
    merged = FormalSum.of(g3.vertices, [(g3, 1), (g3, -1)])
    assert len(merged) == 0
    assert merged.coefficient(g3) == 0


def test_polynomial_endpoints_match_the_character():
    # eval at 0 kills every non-empty graph, eval at 1 returns the raw
    # character value, and the degree never exceeds the vertex count
    rng = random.Random(53)
    for _ in range(25):
        g = random_digraph(rng, "abcd")
        for char, raw in ((BASIC, basic_char), (EDGE, edge_char)):
            poly = character_polynomial(g, char)
            assert poly.eval(0) == 0
            assert poly.eval(1) == raw(g)
            assert poly.degree() <= len(g.vertices)
    assert character_polynomial(EMPTY, BASIC).eval(0) == 1
    assert character_polynomial(EMPTY, EDGE).eval(1) == 1
