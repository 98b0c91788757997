"""Bitmask subroutines shared by the graph layer and the decomposability engine.

Vertices are indices 0..n-1; vertex subsets and adjacency rows are Python
ints used as bitsets.  Everything here is exact and deterministic: iteration
is always in increasing bit order and Bron-Kerbosch uses a fixed pivot rule.
"""

from __future__ import annotations

from typing import Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def has_edge_within(adj: Sequence[int], mask: int) -> bool:
    """True if the induced subgraph on ``mask`` contains at least one edge."""
    for v in bits(mask):
        if adj[v] & mask:
            return True
    return False


def isolated_stripped(adj: Sequence[int], mask: int) -> int:
    """Submask of ``mask`` keeping only vertices with a neighbor in ``mask``."""
    kept = 0
    for v in bits(mask):
        if adj[v] & mask:
            kept |= 1 << v
    return kept


def components(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components of the induced subgraph, as masks, in bit order."""
    out = []
    remaining = mask
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= adj[v] & mask
            frontier = grown & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def is_forest(adj: Sequence[int], mask: int) -> bool:
    """True if the induced subgraph on ``mask`` has no cycle.

    A graph is a forest iff every component has exactly one more vertex
    than it has edges.
    """
    for comp in components(adj, mask):
        edge_ends = sum((adj[v] & comp).bit_count() for v in bits(comp))
        if edge_ends // 2 != comp.bit_count() - 1:
            return False
    return True


def has_cycle_dfs(adj: Sequence[int], mask: int) -> bool:
    """Cycle detection by depth-first search back edges.

    Independent of :func:`is_forest`; kept as a cross-check oracle.
    """
    visited = 0
    for root in bits(mask):
        if visited >> root & 1:
            continue
        stack = [(root, -1)]
        visited |= 1 << root
        while stack:
            v, parent = stack.pop()
            skipped_parent = False
            for w in bits(adj[v] & mask):
                if w == parent and not skipped_parent:
                    # one parent link is tree edge, a second is a multi-edge
                    # and cannot occur in a simple graph
                    skipped_parent = True
                    continue
                if visited >> w & 1:
                    return True
                visited |= 1 << w
                stack.append((w, v))
    return False


def maximal_independent_sets(adj: Sequence[int], mask: int) -> Iterator[int]:
    """Yield the maximal independent sets of the induced subgraph on ``mask``.

    Bron-Kerbosch with pivoting on the complement graph.  The empty graph
    has the single maximal independent set 0.
    """
    # non-neighborhood rows restricted to mask; independent sets are cliques
    # of this complement adjacency
    na = {v: mask & ~adj[v] & ~(1 << v) for v in bits(mask)}

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if p == 0 and x == 0:
            yield r
            return
        pivot = -1
        best = -1
        for u in bits(p | x):
            score = (p & na[u]).bit_count()
            if score > best:
                best = score
                pivot = u
        cand = p & ~na[pivot]
        for v in bits(cand):
            yield from expand(r | (1 << v), p & na[v], x & na[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from expand(0, mask, 0)


def independent_sets(adj: Sequence[int], mask: int) -> Iterator[int]:
    """Yield every independent set (including the empty one) within ``mask``."""

    def expand(chosen: int, todo: int) -> Iterator[int]:
        if todo == 0:
            yield chosen
            return
        low = todo & -todo
        v = low.bit_length() - 1
        yield from expand(chosen, todo & ~low)
        if not (adj[v] & chosen):
            yield from expand(chosen | low, todo & ~low & ~adj[v])

    # the second recursion already prunes neighbors, so sets are generated once
    yield from expand(0, mask)
