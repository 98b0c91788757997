"""Finite simple graphs with named vertices and the constructions built on them.

The graph layer keeps three pieces of structure that the rest of the package
relies on:

* vertices are ordered (insertion order is canonical),
* edges are ordered (insertion order defines the edge indexing e_1..e_m used
  by duplication tuples),
* every vertex carries provenance: plain ``base`` vertices, ``shadow``
  vertices produced by duplication (base name + copy index), and ``whisker``
  vertices attached as pendants.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import _bitgraph


class GraphError(ValueError):
    """Raised for malformed graphs or graph operations on bad input."""


# ---------------------------------------------------------------------------
# vertices

@dataclass(frozen=True)
class Vertex:
    """A named vertex with provenance.

    ``kind`` is one of ``"base"``, ``"shadow"`` (a duplication copy, with
    ``base`` the original name and ``copy`` >= 1) or ``"whisker"`` (a pendant
    vertex, with ``support`` the vertex it hangs from and ``index`` >= 1).
    """

    name: str
    kind: str = "base"
    base: str | None = None
    copy: int | None = None
    support: str | None = None
    index: int | None = None

    def __post_init__(self) -> None:
        if not self.name:
            raise GraphError("vertex name must be nonempty")
        if self.kind == "base":
            if self.base is not None or self.copy is not None:
                raise GraphError(f"base vertex {self.name!r} cannot carry shadow fields")
            if self.support is not None or self.index is not None:
                raise GraphError(f"base vertex {self.name!r} cannot carry whisker fields")
        elif self.kind == "shadow":
            if self.base is None or self.copy is None or self.copy < 1:
                raise GraphError(f"shadow vertex {self.name!r} needs a base name and copy >= 1")
        elif self.kind == "whisker":
            if self.support is None or self.index is None or self.index < 1:
                raise GraphError(f"whisker vertex {self.name!r} needs a support and index >= 1")
        else:
            raise GraphError(f"unknown vertex kind {self.kind!r}")


def shadow_vertex(base: str, copy: int) -> Vertex:
    """The duplication copy ``base``.``copy``, named accordingly."""
    return Vertex(name=f"{base}.{copy}", kind="shadow", base=base, copy=copy)


# ---------------------------------------------------------------------------
# graphs

class Graph:
    """Finite simple undirected graph over named, ordered vertices."""

    __slots__ = ("_vertices", "_by_name", "_edges", "_edge_set", "_adj", "_index")

    def __init__(self, vertices: Sequence[Vertex | str], edges: Sequence[tuple[str, str]] = ()):
        verts: list[Vertex] = []
        by_name: dict[str, Vertex] = {}
        for v in vertices:
            vert = Vertex(v) if isinstance(v, str) else v
            if vert.name in by_name:
                raise GraphError(f"duplicate vertex name {vert.name!r}")
            by_name[vert.name] = vert
            verts.append(vert)

        edge_list: list[tuple[str, str]] = []
        edge_set: set[frozenset[str]] = set()
        adj: dict[str, set[str]] = {v.name: set() for v in verts}
        for u, w in edges:
            if u not in by_name:
                raise GraphError(f"edge endpoint {u!r} is not a vertex")
            if w not in by_name:
                raise GraphError(f"edge endpoint {w!r} is not a vertex")
            if u == w:
                raise GraphError(f"loop at {u!r} is not allowed")
            key = frozenset((u, w))
            if key in edge_set:
                raise GraphError(f"duplicate edge {{{u}, {w}}}")
            edge_set.add(key)
            edge_list.append((u, w))
            adj[u].add(w)
            adj[w].add(u)

        self._vertices = tuple(verts)
        self._by_name = by_name
        self._edges = tuple(edge_list)
        self._edge_set = frozenset(edge_set)
        self._adj = {name: frozenset(nbrs) for name, nbrs in adj.items()}
        self._index = {v.name: i for i, v in enumerate(verts)}

    # -- basic accessors ----------------------------------------------------

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def vertex_names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self._vertices)

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return self._edges

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_vertex(self, name: str) -> bool:
        return name in self._by_name

    def vertex(self, name: str) -> Vertex:
        try:
            return self._by_name[name]
        except KeyError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def index_of(self, name: str) -> int:
        self.vertex(name)
        return self._index[name]

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self._edge_set

    def neighbors(self, name: str) -> frozenset[str]:
        self.vertex(name)
        return self._adj[name]

    def closed_neighborhood(self, name: str) -> frozenset[str]:
        return self.neighbors(name) | {name}

    def degree(self, name: str) -> int:
        return len(self.neighbors(name))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self._vertices, self._edge_set))

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"

    # -- bitmask view -------------------------------------------------------

    def adjacency_masks(self) -> list[int]:
        """Adjacency rows as bitsets over the vertex order."""
        idx = self._index
        rows = [0] * len(self._vertices)
        for u, w in self._edges:
            rows[idx[u]] |= 1 << idx[w]
            rows[idx[w]] |= 1 << idx[u]
        return rows

    def full_mask(self) -> int:
        return (1 << len(self._vertices)) - 1

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.index_of(name)
        return mask

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self._vertices[i].name for i in _bitgraph.bits(mask))

    # -- subgraphs ----------------------------------------------------------

    def induced_subgraph(self, names: Iterable[str]) -> Graph:
        """Induced subgraph, keeping vertex and edge order."""
        keep = set(names)
        for name in keep:
            self.vertex(name)
        verts = [v for v in self._vertices if v.name in keep]
        edges = [(u, w) for u, w in self._edges if u in keep and w in keep]
        return Graph(verts, edges)

    def delete_vertices(self, names: Iterable[str]) -> Graph:
        drop = set(names)
        for name in drop:
            self.vertex(name)
        return self.induced_subgraph(n for n in self.vertex_names if n not in drop)

    def connected_components(self) -> list[tuple[str, ...]]:
        adj = self.adjacency_masks()
        full = self.full_mask()
        return [self.names_of(comp) for comp in _bitgraph.components(adj, full)]

    # -- independence and covers ---------------------------------------------

    def is_independent_set(self, names: Iterable[str]) -> bool:
        """True iff no edge of the graph joins two of the given vertices."""
        chosen = set(names)
        for name in chosen:
            self.vertex(name)
        return not any(u in chosen and w in chosen for u, w in self._edges)

    def maximal_independent_sets(self) -> list[frozenset[str]]:
        """All inclusion-maximal independent sets, canonically ordered.

        Order: by size, then lexicographically by vertex indices.
        """
        adj = self.adjacency_masks()
        found = list(_bitgraph.maximal_independent_sets(adj, self.full_mask()))
        keyed = sorted(
            (mask.bit_count(), tuple(_bitgraph.bits(mask)), mask) for mask in found
        )
        return [frozenset(self.names_of(mask)) for _, _, mask in keyed]

    def minimal_vertex_covers(self) -> list[frozenset[str]]:
        """Complements of the maximal independent sets, canonically ordered."""
        everything = set(self.vertex_names)
        covers = [frozenset(everything - mis) for mis in self.maximal_independent_sets()]
        index = self._index
        return sorted(covers, key=lambda c: (len(c), sorted(index[n] for n in c)))

    def is_simplicial_vertex(self, name: str) -> bool:
        """True iff the closed neighborhood of the vertex induces a clique."""
        nbrs = sorted(self.neighbors(name))
        return all(self.has_edge(a, b) for a, b in combinations(nbrs, 2))

    # -- cycles ---------------------------------------------------------------

    def is_cycle_cover(self, names: Iterable[str]) -> bool:
        """True iff removing the given vertices leaves an acyclic graph."""
        drop = set(names)
        for name in drop:
            self.vertex(name)
        adj = self.adjacency_masks()
        mask = self.full_mask() & ~self.mask_of(drop)
        return _bitgraph.is_forest(adj, mask)

    def minimum_cycle_cover(self) -> frozenset[str]:
        """A smallest vertex set meeting every cycle, exact by increasing size.

        Ties are broken by canonical vertex order, so the result is
        deterministic.  Search is exhaustive; intended for small graphs.
        """
        adj = self.adjacency_masks()
        full = self.full_mask()
        names = self.vertex_names
        for size in range(len(names) + 1):
            for combo in combinations(range(len(names)), size):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                if _bitgraph.is_forest(adj, full & ~mask):
                    return frozenset(names[i] for i in combo)
        raise AssertionError("the full vertex set is always a cycle cover")


def build_graph(vertex_names: Sequence[str], edge_pairs: Sequence[tuple[str, str]]) -> Graph:
    """Build a simple graph; the order of ``edge_pairs`` is the edge indexing."""
    return Graph(list(vertex_names), list(edge_pairs))


# ---------------------------------------------------------------------------
# fresh vertex names

_NUMBERED = re.compile(r"^(.*?)(\d+)$")


def fresh_names(existing: Iterable[str], count: int, fallback_stem: str) -> list[str]:
    """Deterministic fresh names that do not collide with ``existing``.

    When every existing name is ``<stem><integer>`` with one common stem, the
    numbering simply continues (x1..x4 grows x5, x6, ...), matching how the
    constructions here are usually drawn.  Otherwise names are derived from
    ``fallback_stem``.
    """
    taken = set(existing)
    stems = set()
    top = 0
    for name in taken:
        m = _NUMBERED.match(name)
        if not m:
            stems = set()
            break
        stems.add(m.group(1))
        top = max(top, int(m.group(2)))
    out: list[str] = []
    if len(stems) == 1 and taken:
        stem = next(iter(stems))
        nxt = top + 1
        while len(out) < count:
            cand = f"{stem}{nxt}"
            nxt += 1
            if cand not in taken:
                out.append(cand)
                taken.add(cand)
        return out
    nxt = 1
    while len(out) < count:
        cand = f"{fallback_stem}{nxt}"
        nxt += 1
        if cand not in taken:
            out.append(cand)
            taken.add(cand)
    return out


# ---------------------------------------------------------------------------
# whiskering

@dataclass(frozen=True)
class WhiskeredGraph:
    """A graph together with provenance of the whiskers added to it.

    ``graph`` is the whiskered graph, ``base`` the graph before whiskering,
    ``support_set`` the vertices that received whiskers, and
    ``whisker_edges`` maps each support vertex to its whisker edges
    (support, leaf).  Edge order in ``graph`` is: all base edges first, then
    whisker edges grouped by support in canonical vertex order.
    """

    graph: Graph
    base: Graph
    support_set: frozenset[str]
    whisker_edges: Mapping[str, tuple[tuple[str, str], ...]]

    def __post_init__(self) -> None:
        for support, wedges in self.whisker_edges.items():
            if not wedges:
                raise GraphError(f"support vertex {support!r} has no whisker edges")
            for sup, leaf in wedges:
                if sup != support or support not in self.support_set:
                    raise GraphError(f"whisker edge ({sup}, {leaf}) not anchored in the support set")
                if self.graph.degree(leaf) != 1:
                    raise GraphError(f"whisker vertex {leaf!r} must have degree 1")
                if self.graph.vertex(leaf).kind != "whisker":
                    raise GraphError(f"whisker vertex {leaf!r} lacks whisker provenance")
        stripped = self.graph.delete_vertices(self.leaf_names())
        if stripped != self.base:
            raise GraphError("removing the whiskers does not recover the base graph")

    def leaf_names(self) -> tuple[str, ...]:
        return tuple(
            leaf for support in sorted(self.whisker_edges, key=self.graph.index_of)
            for _, leaf in self.whisker_edges[support]
        )


def add_whiskers(
    graph: Graph,
    supports: Iterable[str],
    counts: Mapping[str, int] | int = 1,
) -> WhiskeredGraph:
    """Attach pendant vertices at each support vertex.

    ``counts`` gives the number of whiskers per support vertex (an int means
    that many at every support; default one each).
    """
    support_list = sorted(set(supports), key=graph.index_of)
    if isinstance(counts, int):
        counts = {s: counts for s in support_list}
    total = 0
    for s in support_list:
        c = counts.get(s, 0)
        if c < 1:
            raise GraphError(f"whisker count for {s!r} must be >= 1, got {c}")
        total += c

    names = fresh_names(graph.vertex_names, total, fallback_stem="w")
    verts: list[Vertex | str] = list(graph.vertices)
    edges = list(graph.edges)
    whisker_edges: dict[str, tuple[tuple[str, str], ...]] = {}
    pos = 0
    for s in support_list:
        mine: list[tuple[str, str]] = []
        for i in range(counts[s]):
            leaf = names[pos]
            pos += 1
            verts.append(Vertex(name=leaf, kind="whisker", support=s, index=i + 1))
            edges.append((s, leaf))
            mine.append((s, leaf))
        whisker_edges[s] = tuple(mine)

    return WhiskeredGraph(
        graph=Graph(verts, edges),
        base=graph,
        support_set=frozenset(support_list),
        whisker_edges=whisker_edges,
    )


# ---------------------------------------------------------------------------
# gluing and star complete attachments

def glue_along_edge(g: Graph, h: Graph, edge: tuple[str, str]) -> Graph:
    """Glue a fresh copy of ``h`` onto ``g`` by identifying the shared edge.

    The two endpoints of ``edge`` are identified; every other vertex of the
    copy is renamed with a ``y`` prefix (x3 -> y3), suffixed if that collides.
    """
    u, v = edge
    if not g.has_edge(u, v):
        raise GraphError(f"edge {{{u}, {v}}} is not an edge of the first graph")
    if not h.has_edge(u, v):
        raise GraphError(f"edge {{{u}, {v}}} is not an edge of the second graph")

    used = set(g.vertex_names)
    rename: dict[str, str] = {u: u, v: v}
    for name in h.vertex_names:
        if name in (u, v):
            continue
        cand = "y" + name[1:] if name.startswith("x") else "y" + name
        bump = 2
        fresh = cand
        while fresh in used:
            fresh = f"{cand}_{bump}"
            bump += 1
        rename[name] = fresh
        used.add(fresh)

    verts: list[Vertex | str] = list(g.vertices)
    verts.extend(rename[name] for name in h.vertex_names if name not in (u, v))
    edges = list(g.edges)
    for a, b in h.edges:
        if frozenset((a, b)) == frozenset((u, v)):
            continue
        edges.append((rename[a], rename[b]))
    return Graph(verts, edges)


@dataclass(frozen=True)
class StarCompleteSpec:
    """Cliques to be joined at a common vertex of a graph.

    Each entry of ``clique_sizes`` counts the vertices of one clique
    including the common vertex, so an entry of 2 is a pendant edge.
    """

    attach_at: str
    clique_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.clique_sizes:
            raise GraphError("star complete attachment needs at least one clique")
        for s in self.clique_sizes:
            if s < 2:
                raise GraphError(f"clique size must be >= 2, got {s}")

    @property
    def classification(self) -> str:
        """``"pure"`` iff every maximal clique has at least 3 vertices."""
        return "pure" if min(self.clique_sizes) >= 3 else "non-pure"


def attach_star_complete(graph: Graph, spec: StarCompleteSpec) -> tuple[Graph, str]:
    """Attach the specified cliques at the common vertex; returns (graph, purity)."""
    center = spec.attach_at
    graph.vertex(center)
    total_new = sum(s - 1 for s in spec.clique_sizes)
    names = fresh_names(graph.vertex_names, total_new, fallback_stem="k")

    verts: list[Vertex | str] = list(graph.vertices)
    edges = list(graph.edges)
    pos = 0
    whisker_index = 0
    for size in spec.clique_sizes:
        mine = names[pos : pos + size - 1]
        pos += size - 1
        if size == 2:
            whisker_index += 1
            verts.append(Vertex(name=mine[0], kind="whisker", support=center, index=whisker_index))
        else:
            verts.extend(mine)
        ring = [center, *mine]
        for a, b in combinations(ring, 2):
            edges.append((a, b))
    return Graph(verts, edges), spec.classification


# ---------------------------------------------------------------------------
# file formats

def render_graph_text(graph: Graph) -> str:
    """Plain text form: one ``vertices:`` header, then ``edge:`` lines in order."""
    lines = ["vertices: " + " ".join(graph.vertex_names)]
    lines.extend(f"edge: {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    vertices: list[str] | None = None
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise GraphError(f"line {lineno}: repeated vertices header")
            vertices = line[len("vertices:"):].split()
        elif line.startswith("edge:"):
            parts = line[len("edge:"):].split()
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: an edge needs exactly two endpoints")
            edges.append((parts[0], parts[1]))
        else:
            raise GraphError(f"line {lineno}: unrecognized line {line!r}")
    if vertices is None:
        raise GraphError("missing 'vertices:' header line")
    return build_graph(vertices, edges)


def graph_to_json_dict(graph: Graph, whiskered: WhiskeredGraph | None = None) -> dict:
    doc: dict = {
        "vertices": list(graph.vertex_names),
        "edges": [[u, v] for u, v in graph.edges],
    }
    if whiskered is not None:
        doc["whiskers"] = [
            {"support": support, "leaf": leaf}
            for support in sorted(whiskered.whisker_edges, key=graph.index_of)
            for _, leaf in whiskered.whisker_edges[support]
        ]
    return doc


def graph_from_json_dict(doc: Mapping) -> Graph:
    try:
        vertices = list(doc["vertices"])
        edges = [(str(u), str(v)) for u, v in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph document: {exc}") from exc
    graph = build_graph([str(v) for v in vertices], edges)
    whiskers = doc.get("whiskers") or []
    if whiskers:
        rebuilt: list[Vertex | str] = []
        leaf_support = {str(w["leaf"]): str(w["support"]) for w in whiskers}
        seen: dict[str, int] = {}
        for v in graph.vertices:
            if v.name in leaf_support:
                support = leaf_support[v.name]
                seen[support] = seen.get(support, 0) + 1
                rebuilt.append(Vertex(name=v.name, kind="whisker", support=support, index=seen[support]))
            else:
                rebuilt.append(v)
        graph = Graph(rebuilt, graph.edges)
    return graph


def load_graph(path: str) -> Graph:
    """Read a graph file, sniffing JSON versus the plain text format."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_json_dict(json.loads(text))
    return parse_graph_text(text)


def save_graph(graph: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if path.endswith(".json"):
            json.dump(graph_to_json_dict(graph), fh, indent=2, sort_keys=True)
            fh.write("\n")
        else:
            fh.write(render_graph_text(graph))
