"""Independent brute-force reference implementations used only by tests.

Everything here is written the dumbest defensible way (subset enumeration,
permutation search, naive recursion) so that the tested code paths and the
oracles cannot share a bug.
"""

from __future__ import annotations

from itertools import combinations, permutations

from symcover.graphs import Graph
from symcover.ideals import Monomial, MonomialIdeal


def subsets(names):
    names = list(names)
    for size in range(len(names) + 1):
        yield from (set(c) for c in combinations(names, size))


def brute_independent(graph: Graph, chosen: set[str]) -> bool:
    return not any(u in chosen and v in chosen for u, v in graph.edges)


def brute_maximal_independent_sets(graph: Graph) -> set[frozenset[str]]:
    independents = [s for s in subsets(graph.vertex_names) if brute_independent(graph, s)]
    out = set()
    for s in independents:
        if not any(s < t for t in independents):
            out.add(frozenset(s))
    return out


def brute_minimal_vertex_covers(graph: Graph) -> set[frozenset[str]]:
    everything = set(graph.vertex_names)
    return {frozenset(everything - m) for m in brute_maximal_independent_sets(graph)}


def dfs_has_cycle(graph: Graph, removed: set[str]) -> bool:
    """Back-edge detection, written independently of the library's checks."""
    kept = [v for v in graph.vertex_names if v not in removed]
    adj = {v: [w for w in graph.neighbors(v) if w not in removed] for v in kept}
    color: dict[str, int] = {}

    def visit(v: str, parent: str | None) -> bool:
        color[v] = 1
        for w in adj[v]:
            if w == parent:
                parent = None  # skip the tree edge once; simple graphs have no repeats
                continue
            if w in color:
                return True
            if visit(w, v):
                return True
        return False

    for v in kept:
        if v not in color and visit(v, None):
            return True
    return False


def brute_minimum_cycle_cover(graph: Graph) -> set[str]:
    for size in range(graph.vertex_count + 1):
        for combo in combinations(graph.vertex_names, size):
            if not dfs_has_cycle(graph, set(combo)):
                return set(combo)
    raise AssertionError("unreachable")


def brute_symbolic_generators(graph: Graph, k: int, bound: int) -> set[Monomial]:
    """Divisibility-minimal vectors with a_u + a_v >= k per edge, entries <= bound."""
    names = graph.vertex_names
    feasible = []

    def rec(i: int, vec: list[int]) -> None:
        if i == len(names):
            feasible.append(tuple(vec))
            return
        for val in range(bound + 1):
            vec.append(val)
            rec(i + 1, vec)
            vec.pop()

    rec(0, [])
    ok = [
        v for v in feasible
        if all(v[names.index(a)] + v[names.index(b)] >= k for a, b in graph.edges)
    ]
    minimal = [
        v for v in ok
        if not any(w != v and all(wi <= vi for wi, vi in zip(w, v)) for w in ok)
    ]
    return {Monomial.of({names[i]: e for i, e in enumerate(v) if e}) for v in minimal}


def brute_is_shedding(graph: Graph, x: str) -> bool:
    """Literal reading: no independent set of G - N[x] is maximal in G - x."""
    closed = graph.closed_neighborhood(x)
    outside = [v for v in graph.vertex_names if v not in closed]
    deleted = [v for v in graph.vertex_names if v != x]
    deleted_graph = graph.induced_subgraph(deleted)
    maximal = brute_maximal_independent_sets(deleted_graph)
    for s in subsets(outside):
        if brute_independent(graph, s) and frozenset(s) in maximal:
            return False
    return True


def brute_vertex_decomposable(graph: Graph) -> bool:
    """Definition-shaped recursion without memoization or reductions."""
    if graph.edge_count == 0:
        return True
    for x in graph.vertex_names:
        if not brute_is_shedding(graph, x):
            continue
        deletion = graph.delete_vertices([x])
        link = graph.delete_vertices(graph.closed_neighborhood(x))
        if brute_vertex_decomposable(deletion) and brute_vertex_decomposable(link):
            return True
    return False


def naive_colon_is_linear(chosen: list[Monomial], candidate: Monomial) -> bool:
    colons = [g.colon(candidate) for g in chosen]
    variables = {c.exps[0][0] for c in colons if c.degree == 1}
    return all(any(c.exponent(v) >= 1 for v in variables) for c in colons)


def naive_has_linear_quotients(ideal: MonomialIdeal) -> bool:
    """Prefix-pruned search over permutations in raw input order, no memo."""
    gens = list(ideal.generators)

    def rec(order: list[Monomial], rest: list[Monomial]) -> bool:
        if not rest:
            return True
        for i, g in enumerate(rest):
            if naive_colon_is_linear(order, g):
                if rec(order + [g], rest[:i] + rest[i + 1 :]):
                    return True
        return False

    return rec([], gens)


def exhaustive_linear_quotients_orders(ideal: MonomialIdeal):
    """Yield every accepting permutation; only for very small ideals."""
    gens = list(ideal.generators)
    for perm in permutations(gens):
        if all(naive_colon_is_linear(list(perm[:i]), perm[i]) for i in range(1, len(perm))):
            yield list(perm)
