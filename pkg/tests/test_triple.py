import random

import pytest

from helpers import (
    acyclic_triangle_triple,
    cyclic_triple,
    path_triple,
    random_triple,
)
from skewmut import (
    EQUAL,
    GREATER,
    LESS,
    CanonicalForm,
    Diagram,
    Disconnected,
    RadicalSum,
    RadicalTriple,
    WrongSize,
    compare_radical_sums,
    parse_triple,
)


def test_from_diagram_oriented_triangle():
    g = Diagram(3, [(0, 1, 4), (1, 2, 4), (2, 0, 4)])
    t = RadicalTriple.from_diagram(g)
    assert t.squared_weights == (4, 4, 4)
    assert t.cyclic


def test_from_diagram_path():
    g = Diagram(3, [(0, 1, 4), (1, 2, 1)])
    t = RadicalTriple.from_diagram(g)
    assert sorted(t.squared_weights) == [0, 1, 4]
    assert not t.cyclic


def test_from_diagram_wrong_size():
    with pytest.raises(WrongSize):
        RadicalTriple.from_diagram(Diagram(4, [(0, 1, 1)]))


def test_from_diagram_disconnected():
    with pytest.raises(Disconnected):
        RadicalTriple.from_diagram(Diagram(3, [(0, 1, 1)]))


def test_incidence_pairs_each_vertex_with_the_other_edges():
    t = cyclic_triple((1, 4, 9))
    assert t.incidence(0) == (4, 9)
    assert t.incidence(1) == (9, 1)
    assert t.incidence(2) == (1, 4)


def test_diagram_round_trip_preserves_orientation():
    rng = random.Random(90)
    for _ in range(60):
        t = random_triple(rng)
        assert RadicalTriple.from_diagram(t.to_diagram()) == t


def test_tree_mutation_at_the_middle_doubles_the_small_edge():
    # path with radical weights (a, 1) becomes the oriented triangle (a, a, 1)
    for a2 in (1, 2, 3, 4, 9, 25):
        t = path_triple(a2, 1)
        m = t.mutate(1)
        assert m.cyclic
        assert sorted(m.squared_weights) == sorted((a2, a2, 1))


def test_markov_style_triple_is_fixed():
    t = cyclic_triple((4, 4, 4))
    for k in range(3):
        m = t.mutate(k)
        assert m.cyclic and sorted(m.squared_weights) == [4, 4, 4]
    # cross-check through the diagram layer
    for k in range(3):
        assert t.mutate(k).to_diagram() == t.to_diagram().mutate(k)


def test_large_opposite_weight_opens_the_triangle():
    # cyclic radical (1, 2, 5): mutating off the 5 gives acyclic (1, 2, 3)
    t = cyclic_triple((25, 4, 1))  # weight opposite vertex 0 is 25
    m = t.mutate(0)
    assert not m.cyclic
    assert sorted(m.squared_weights) == [1, 4, 9]


def test_mutation_is_involutive():
    rng = random.Random(91)
    for _ in range(200):
        t = random_triple(rng)
        for k in range(3):
            assert t.mutate(k).mutate(k) == t


def test_triple_mutation_agrees_with_diagram_mutation():
    rng = random.Random(92)
    for _ in range(200):
        t = random_triple(rng)
        for k in range(3):
            assert t.mutate(k).to_diagram() == t.to_diagram().mutate(k)


def test_s_value_examples():
    assert cyclic_triple((1, 1, 1)).s_value() == RadicalSum([1, 1, 1])
    assert compare_radical_sums(cyclic_triple((4, 4, 4)).s_value(), RadicalSum([36])) == EQUAL
    assert path_triple(2, 2).s_value().terms == (2, 2)


def test_compare_adjacent_at_source_or_sink_is_equal():
    rng = random.Random(93)
    for _ in range(100):
        t = random_triple(rng)
        for k in range(3):
            if t.is_source_or_sink(k):
                assert t.compare_adjacent(k) == EQUAL


def test_compare_adjacent_on_135():
    # cyclic radical (1, 3, 5): both the 3- and 5-vertices strictly descend
    t = RadicalTriple((1, 9, 25), (1, 1, 1))
    assert t.compare_adjacent(0) == GREATER  # off the weight-1 edge
    assert t.compare_adjacent(1) == LESS
    assert t.compare_adjacent(2) == LESS


def test_compare_adjacent_on_markov_triple_is_flat():
    t = cyclic_triple((4, 4, 4))
    assert [t.compare_adjacent(k) for k in range(3)] == [EQUAL, EQUAL, EQUAL]


def test_compare_adjacent_matches_real_s_comparison():
    rng = random.Random(94)
    for _ in range(150):
        t = random_triple(rng)
        for k in range(3):
            assert t.compare_adjacent(k) == compare_radical_sums(
                t.mutate(k).s_value(), t.s_value()
            )


def test_acyclic_triples_are_local_minima():
    rng = random.Random(95)
    for _ in range(100):
        t = random_triple(rng)
        if not t.cyclic:
            assert t.is_local_minimum()


def test_local_minimum_examples():
    assert cyclic_triple((4, 4, 4)).is_local_minimum()
    # cyclic radical (2, 2, 5): off the 5-edge the weight drops to 1
    assert not cyclic_triple((25, 4, 4)).is_local_minimum()


def test_descend_from_acyclic_is_trivial():
    rng = random.Random(96)
    for _ in range(50):
        t = random_triple(rng)
        if t.cyclic:
            continue
        form, witness = t.descend_to_minimum()
        assert witness == []
        assert form == t.canonical_form()


def test_descend_from_135():
    t = RadicalTriple((1, 9, 25), (1, 1, 1))
    form, witness = t.descend_to_minimum()
    assert form == CanonicalForm((9, 4, 1), False)
    assert witness  # a genuine descent happened


def test_descend_fixed_point():
    form, witness = cyclic_triple((4, 4, 4)).descend_to_minimum()
    assert form == CanonicalForm((4, 4, 4), True)
    assert witness == []


def test_descent_witness_strictly_decreases_s():
    rng = random.Random(97)
    for _ in range(100):
        t = random_triple(rng, max_part=8)
        _, witness = t.descend_to_minimum()
        current = t
        for k in witness:
            nxt = current.mutate(k)
            assert compare_radical_sums(nxt.s_value(), current.s_value()) == LESS
            current = nxt
        assert current.is_local_minimum()


def _is_mutation_cyclic(t):
    form, _ = t.descend_to_minimum()
    return form.cyclic


def test_two_decreasing_directions_force_a_small_edge():
    # if one vertex strictly decreases s and another does not increase it,
    # the triple has an edge of weight < 4 and its class is mutation-acyclic
    rng = random.Random(98)
    hits = 0
    for _ in range(400):
        t = random_triple(rng, max_part=7)
        cmps = [t.compare_adjacent(k) for k in range(3)]
        pairs = [
            (i, j)
            for i in range(3)
            for j in range(3)
            if i != j and cmps[i] == LESS and cmps[j] != GREATER
        ]
        if pairs:
            hits += 1
            assert t.cyclic  # acyclic triples never descend
            assert min(t.squared_weights) < 4
            assert not _is_mutation_cyclic(t)
    assert hits > 20


def test_cyclic_with_small_edge_has_a_descent():
    rng = random.Random(99)
    hits = 0
    for _ in range(500):
        t = random_triple(rng, max_part=7, allow_path=False)
        if t.cyclic and min(t.squared_weights) < 4:
            hits += 1
            assert t.decreasing_vertices()
    assert hits > 30


def test_forced_descent_on_mutation_cyclic_triples():
    # walking up from a mutation-cyclic local minimum: at every non-minimal
    # point exactly one vertex descends, and it faces the unique heaviest edge
    rng = random.Random(100)
    seeds = [cyclic_triple((9, 9, 9)), cyclic_triple((4, 16, 16)), cyclic_triple((16, 16, 16))]
    for _ in range(200):
        t = rng.choice(seeds)
        for _ in range(rng.randint(1, 5)):
            ups = [k for k in range(3) if t.compare_adjacent(k) == GREATER]
            if not ups:
                break
            t = t.mutate(rng.choice(ups))
        drops = t.decreasing_vertices()
        if not drops:
            continue
        assert len(drops) == 1
        k = drops[0]
        heaviest = max(t.squared_weights)
        assert t.squared_weights.count(heaviest) == 1
        assert t.squared_weights.index(heaviest) == k


def test_equal_moves_keep_all_weights():
    rng = random.Random(101)
    for _ in range(200):
        t = random_triple(rng)
        for k in range(3):
            if t.compare_adjacent(k) == EQUAL:
                assert sorted(t.mutate(k).squared_weights) == sorted(t.squared_weights)


def test_validation_rejects_bad_triples():
    with pytest.raises(Disconnected):
        RadicalTriple((1, 0, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        RadicalTriple((1, 1, 2), (1, 1, 1))  # product 2 is not a square
    with pytest.raises(ValueError):
        RadicalTriple((1, 1, 1), (1, 1, 0))  # orientation missing on a present edge


def test_text_round_trip():
    for text in ("cyclic 4 4 4", "acyclic 9 4 1", "acyclic 4 0 1", "cyclic 2 2 1"):
        assert parse_triple(text).to_text() == text
    with pytest.raises(ValueError):
        parse_triple("cyclic 4 0 4")
    with pytest.raises(ValueError):
        parse_triple("sideways 1 2 3")


def test_canonical_form_identifies_reflections_and_reversal():
    # the two orientations of a triangle share a canonical form when related
    # by reversing every edge
    t = cyclic_triple((4, 4, 9))
    reversed_t = RadicalTriple((4, 4, 9), (-1, -1, -1))
    assert t.canonical_form() == reversed_t.canonical_form()
    # reflections of an acyclic triple keep the canonical form
    t = acyclic_triangle_triple((1, 4, 4))
    for k in range(3):
        if t.is_source_or_sink(k):
            assert t.mutate(k).canonical_form() == t.canonical_form()
