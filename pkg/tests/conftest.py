from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from symcover.graphs import StarCompleteSpec, add_whiskers, attach_star_complete, build_graph

FIXTURES = Path(__file__).parent.parent / "src" / "symcover" / "fixtures"


def c4():
    return build_graph(
        ["x1", "x2", "x3", "x4"],
        [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x1", "x4")],
    )


def p3():
    return build_graph(["x1", "x2", "x3"], [("x1", "x2"), ("x2", "x3")])


def single_edge():
    return build_graph(["x", "y"], [("x", "y")])


def cycle(n):
    return build_graph(
        [f"x{i}" for i in range(1, n + 1)],
        [(f"x{i}", f"x{i % n + 1}") for i in range(1, n + 1)],
    )


def five_vertex_example():
    # a 4-clique minus one edge, plus a pendant path: two triangles meet
    # along x2-x4 and x5 hangs off x3
    return build_graph(
        ["x1", "x2", "x3", "x4", "x5"],
        [("x1", "x2"), ("x1", "x4"), ("x2", "x3"), ("x2", "x4"), ("x3", "x4"), ("x3", "x5")],
    )


def fish():
    # 4-cycle x1..x4 with a triangle x1, x5, x6 attached at x1
    graph, _ = attach_star_complete(c4(), StarCompleteSpec("x1", (3,)))
    return graph


def whiskered_fish():
    return add_whiskers(fish(), ["x5"]).graph


@pytest.fixture(scope="session")
def small_graph_atlas():
    """All graphs on up to 7 vertices, one labeled representative per class."""
    from symcover.enumeration import as_graph, graphs_up_to_isomorphism

    atlas = []
    for n in range(1, 8):
        atlas.extend(as_graph(n, e) for e in graphs_up_to_isomorphism(n))
    return atlas
