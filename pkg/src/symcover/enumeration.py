"""Exhaustive enumeration of small graphs up to isomorphism.

Graphs on n vertices are represented as frozensets of index pairs (i, j)
with i < j.  Canonical forms are computed by brute force: vertices are
partitioned by an iterated neighborhood invariant and the edge bitmask is
maximized over all permutations that respect the partition.  That is
exponential in the worst case but entirely adequate below ~8 vertices,
which is all this package ever enumerates.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator, Sequence

from .graphs import Graph, build_graph

EdgeSet = frozenset[tuple[int, int]]


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(combinations(range(n), 2))}


def _edge_mask(edges: EdgeSet, pair_index: dict[tuple[int, int], int]) -> int:
    mask = 0
    for e in edges:
        mask |= 1 << pair_index[e]
    return mask


def _refined_classes(n: int, edges: EdgeSet, colors: Sequence[int] | None) -> list[list[int]]:
    """Partition vertices by an isomorphism-invariant signature."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        nbrs[i].add(j)
        nbrs[j].add(i)
    sig: list[tuple] = [
        (colors[v] if colors else 0, len(nbrs[v])) for v in range(n)
    ]
    for _ in range(2):
        sig = [
            (*sig[v], tuple(sorted(sig[w] for w in nbrs[v])))
            for v in range(n)
        ]
    classes: dict[tuple, list[int]] = {}
    for v in range(n):
        classes.setdefault(sig[v], []).append(v)
    return [classes[key] for key in sorted(classes)]


def _class_respecting_permutations(classes: list[list[int]]) -> Iterator[tuple[int, ...]]:
    """All relabelings sending the i-th invariant class to the i-th block of
    positions; only within-class arrangements vary.  The block layout depends
    only on the (sorted) class signatures, so isomorphic graphs search the
    same target space.
    """
    total = sum(len(cls) for cls in classes)
    offsets = []
    base = 0
    for cls in classes:
        offsets.append(base)
        base += len(cls)

    def rec(i: int, mapping: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(classes):
            yield tuple(mapping)
            return
        for arrangement in permutations(classes[i]):
            for off, v in enumerate(arrangement):
                mapping[v] = offsets[i] + off
            yield from rec(i + 1, mapping)

    yield from rec(0, [0] * total)


def canonical_form(n: int, edges: EdgeSet, colors: Sequence[int] | None = None) -> tuple:
    """A label-independent key for (graph, optional vertex coloring)."""
    pair_index = _pair_index(n)
    classes = _refined_classes(n, edges, colors)
    best_mask = -1
    best_colors: tuple[int, ...] | None = None
    for perm in _class_respecting_permutations(classes):
        mask = 0
        for i, j in edges:
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            mask |= 1 << pair_index[(a, b)]
        if colors is None:
            if mask > best_mask:
                best_mask = mask
        else:
            mapped = [0] * n
            for v in range(n):
                mapped[perm[v]] = colors[v]
            key = (mask, tuple(mapped))
            if best_colors is None or key > (best_mask, best_colors):
                best_mask, best_colors = key
    if colors is None:
        return (n, best_mask)
    return (n, best_mask, best_colors)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test for small graphs."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    return canonical_form(*_as_indexed(g)) == canonical_form(*_as_indexed(h))


def _as_indexed(graph: Graph) -> tuple[int, EdgeSet]:
    index = {name: i for i, name in enumerate(graph.vertex_names)}
    edges = frozenset(
        (min(index[u], index[v]), max(index[u], index[v])) for u, v in graph.edges
    )
    return graph.vertex_count, edges


def graphs_up_to_isomorphism(n: int) -> list[EdgeSet]:
    """All graphs on exactly n vertices, one representative per class.

    Built by vertex augmentation: every representative on n-1 vertices is
    extended by a new vertex with every possible neighborhood, then
    deduplicated by canonical form.  Results are sorted by canonical form,
    so the order is reproducible.
    """
    if n == 0:
        return [frozenset()]
    reps: dict[tuple, EdgeSet] = {}
    new = n - 1
    for smaller in graphs_up_to_isomorphism(n - 1):
        for neighborhood in range(1 << (n - 1)):
            edges = set(smaller)
            for v in range(n - 1):
                if neighborhood >> v & 1:
                    edges.add((v, new))
            candidate = frozenset(edges)
            key = canonical_form(n, candidate)
            if key not in reps:
                reps[key] = candidate
    return [reps[key] for key in sorted(reps)]


def _is_connected(n: int, edges: EdgeSet) -> bool:
    if n <= 1:
        return True
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        nbrs[i].add(j)
        nbrs[j].add(i)
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == n


def connected_graphs_up_to_isomorphism(n: int) -> list[EdgeSet]:
    return [e for e in graphs_up_to_isomorphism(n) if _is_connected(n, e)]


def as_graph(n: int, edges: EdgeSet, prefix: str = "x") -> Graph:
    """Materialize an indexed edge set as a named graph x1..xn."""
    names = [f"{prefix}{i + 1}" for i in range(n)]
    return build_graph(names, sorted((names[i], names[j]) for i, j in edges))
