from __future__ import annotations

import random

from symcover.enumeration import (
    are_isomorphic,
    as_graph,
    canonical_form,
    connected_graphs_up_to_isomorphism,
    graphs_up_to_isomorphism,
)
from symcover.graphs import build_graph

from conftest import c4, cycle, fish


def test_known_class_counts():
    assert [len(graphs_up_to_isomorphism(n)) for n in range(1, 8)] == [
        1, 2, 4, 11, 34, 156, 1044,
    ]


def test_known_connected_counts():
    assert [len(connected_graphs_up_to_isomorphism(n)) for n in range(1, 7)] == [
        1, 1, 2, 6, 21, 112,
    ]


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(109)
    for _ in range(40):
        n = rng.randint(1, 7)
        edges = frozenset(
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
        )
        perm = list(range(n))
        rng.shuffle(perm)
        mapped = frozenset(
            (min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in edges
        )
        assert canonical_form(n, edges) == canonical_form(n, mapped)


def test_canonical_form_separates_nonisomorphic():
    path = frozenset({(0, 1), (1, 2)})
    star_center_zero = frozenset({(0, 1), (0, 2)})
    triangle = frozenset({(0, 1), (0, 2), (1, 2)})
    assert canonical_form(3, path) == canonical_form(3, star_center_zero)
    assert canonical_form(3, path) != canonical_form(3, triangle)


def test_colored_forms_distinguish_subsets():
    edges = frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})
    center = canonical_form(4, edges, [1, 0, 0, 0])
    pair_adjacent = canonical_form(4, edges, [1, 1, 0, 0])
    pair_opposite = canonical_form(4, edges, [1, 0, 1, 0])
    rotated = canonical_form(4, edges, [0, 1, 0, 1])
    assert pair_adjacent != pair_opposite
    assert pair_opposite == rotated
    assert center != pair_adjacent


def test_are_isomorphic_examples():
    assert are_isomorphic(c4(), build_graph(
        ["a", "b", "c", "d"], [("a", "c"), ("c", "b"), ("b", "d"), ("d", "a")]
    ))
    assert not are_isomorphic(c4(), build_graph(
        ["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]
    ))
    assert not are_isomorphic(cycle(5), cycle(6))


def test_every_small_graph_appears():
    # spot-check the atlas against direct membership by isomorphism
    atlas6 = [as_graph(6, e) for e in connected_graphs_up_to_isomorphism(6)]
    assert sum(1 for g in atlas6 if are_isomorphic(g, fish())) == 1
    assert sum(1 for g in atlas6 if are_isomorphic(g, cycle(6))) == 1
