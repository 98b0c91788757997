"""Vertex decomposability of independence complexes, at the graph level.

A graph is vertex decomposable when it is edgeless, or when it has a
shedding vertex x (no independent set of G - N[x] is maximal in G - x)
whose deletion G - x and link G - N[x] are both vertex decomposable.

The engine below answers that question exactly with three sound reductions:

* verdicts are memoized on vertex subsets of one ambient graph (deletion and
  link are both induced subgraphs, so every recursive instance is a mask),
* isolated vertices are stripped before lookup (they never change the
  verdict),
* connected components are decided independently (the independence complex
  of a disjoint union is the join, which is vertex decomposable iff both
  factors are).

Candidate shedding vertices are tried in canonical vertex order, neighbors
of simplicial vertices first; those are always shedding, which mirrors the
way whiskered graphs are actually decomposed and finds certificates fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import _bitgraph
from .graphs import Graph, GraphError
from .ideals import Monomial, cover_ideal, is_linear_quotients_order


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class CertificateLeaf:
    """An edgeless stage; its independence complex is a simplex."""

    vertices: tuple[str, ...]


@dataclass(frozen=True)
class CertificateNode:
    """One shedding step with its deletion and link branches."""

    shedding: str
    deletion: "DecompositionCertificate"
    link: "DecompositionCertificate"


DecompositionCertificate = CertificateLeaf | CertificateNode


def render_certificate(cert: DecompositionCertificate, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(cert, CertificateLeaf):
        return f"{pad}simplex {{{', '.join(cert.vertices)}}}"
    lines = [
        f"{pad}shed {cert.shedding}",
        f"{pad}  del:",
        render_certificate(cert.deletion, indent + 2),
        f"{pad}  link:",
        render_certificate(cert.link, indent + 2),
    ]
    return "\n".join(lines)


def certificate_vertices(cert: DecompositionCertificate) -> frozenset[str]:
    if isinstance(cert, CertificateLeaf):
        return frozenset(cert.vertices)
    deleted = certificate_vertices(cert.deletion)
    return deleted | {cert.shedding}


def validate_certificate(graph: Graph, cert: DecompositionCertificate) -> bool:
    """Walk a certificate and re-check every claim it makes."""
    if certificate_vertices(cert) != frozenset(graph.vertex_names):
        return False
    if isinstance(cert, CertificateLeaf):
        return graph.edge_count == 0
    x = cert.shedding
    if not graph.has_vertex(x) or not is_shedding_vertex(graph, x):
        return False
    deletion = graph.delete_vertices([x])
    link = graph.delete_vertices(graph.closed_neighborhood(x))
    if certificate_vertices(cert.link) != frozenset(link.vertex_names):
        return False
    return validate_certificate(deletion, cert.deletion) and validate_certificate(link, cert.link)


# ---------------------------------------------------------------------------
# shedding vertices

def is_shedding_vertex(graph: Graph, name: str) -> bool:
    """Neighbor-containment test: every maximal independent set of G - x
    must contain a neighbor of x."""
    graph.vertex(name)
    adj = graph.adjacency_masks()
    i = graph.index_of(name)
    mask = graph.full_mask() & ~(1 << i)
    nbrs = adj[i]
    for mis in _bitgraph.maximal_independent_sets(adj, mask):
        if not (mis & nbrs):
            return False
    return True


def is_shedding_vertex_by_definition(graph: Graph, name: str) -> bool:
    """Literal test: no independent set of G - N[x] is maximal in G - x.

    Kept as an oracle for the neighbor-containment form; it enumerates all
    independent sets, so use it only on small graphs.
    """
    graph.vertex(name)
    adj = graph.adjacency_masks()
    i = graph.index_of(name)
    deleted = graph.full_mask() & ~(1 << i)
    beyond = deleted & ~adj[i]
    for candidate in _bitgraph.independent_sets(adj, beyond):
        extendable = False
        for w in _bitgraph.bits(deleted & ~candidate):
            if not (adj[w] & candidate):
                extendable = True
                break
        if not extendable:
            # the candidate is a maximal independent set of G - x
            return False
    return True


# ---------------------------------------------------------------------------
# the engine

class DecompositionEngine:
    """Exact vertex-decomposability over induced subgraphs of one graph.

    One engine instance shares its memo tables across every query about
    induced subgraphs of the ambient graph, which is what the sequence
    checker and the scenario harness rely on.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self._adj = graph.adjacency_masks()
        self._full = graph.full_mask()
        self._verdict: dict[int, bool] = {}
        self._choice: dict[int, int] = {}
        self._cert_cache: dict[int, DecompositionCertificate] = {}

    # -- mask arithmetic ----------------------------------------------------

    def _closed(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def mask_of_names(self, names) -> int:
        return self.graph.mask_of(names)

    # -- shedding -----------------------------------------------------------

    def sheds(self, mask: int, v: int) -> bool:
        """Shedding test for vertex v inside the induced subgraph ``mask``.

        Equivalent to the neighbor-containment form but enumerates maximal
        independent sets of the smaller graph G - N[v]: v fails to shed
        exactly when one of them also dominates every neighbor of v (making
        it maximal in G - v as well).
        """
        adj = self._adj
        nbrs = adj[v] & mask
        beyond = mask & ~self._closed(v)
        for t in _bitgraph.maximal_independent_sets(adj, beyond):
            blocked = False
            for w in _bitgraph.bits(nbrs):
                if not (adj[w] & t):
                    blocked = True
                    break
            if not blocked:
                return False
        return True

    def shedding_vertices(self, mask: int) -> list[int]:
        return [v for v in _bitgraph.bits(mask) if self.sheds(mask, v)]

    # -- decomposability ----------------------------------------------------

    def _candidates(self, mask: int) -> Iterator[int]:
        adj = self._adj
        simplicial_nbrs = 0
        for v in _bitgraph.bits(mask):
            nbrs = adj[v] & mask
            clique = True
            probe = nbrs
            while probe:
                low = probe & -probe
                u = low.bit_length() - 1
                probe ^= low
                if (nbrs & ~self._closed(u)):
                    clique = False
                    break
            if clique and nbrs:
                simplicial_nbrs |= nbrs
        yield from _bitgraph.bits(simplicial_nbrs)
        yield from _bitgraph.bits(mask & ~simplicial_nbrs)

    def is_vd_mask(self, mask: int) -> bool:
        """Vertex decomposability of the induced subgraph on ``mask``."""
        core = _bitgraph.isolated_stripped(self._adj, mask)
        for comp in _bitgraph.components(self._adj, core):
            if not self._vd_component(comp):
                return False
        return True

    def _vd_component(self, cmask: int) -> bool:
        known = self._verdict.get(cmask)
        if known is not None:
            return known
        verdict = False
        for v in self._candidates(cmask):
            if not self.sheds(cmask, v):
                continue
            deletion = cmask & ~(1 << v)
            link = cmask & ~self._closed(v)
            if self.is_vd_mask(deletion) and self.is_vd_mask(link):
                self._choice[cmask] = v
                verdict = True
                break
        self._verdict[cmask] = verdict
        return verdict

    def is_vd(self) -> bool:
        return self.is_vd_mask(self._full)

    # -- certificates ---------------------------------------------------------

    def certificate_for_mask(self, mask: int) -> DecompositionCertificate | None:
        if not self.is_vd_mask(mask):
            return None
        cached = self._cert_cache.get(mask)
        if cached is not None:
            return cached
        if not _bitgraph.has_edge_within(self._adj, mask):
            cert: DecompositionCertificate = CertificateLeaf(self.graph.names_of(mask))
        else:
            core = _bitgraph.isolated_stripped(self._adj, mask)
            comp = next(
                c for c in _bitgraph.components(self._adj, core)
                if _bitgraph.has_edge_within(self._adj, c)
            )
            v = self._choice[comp]
            deletion = self.certificate_for_mask(mask & ~(1 << v))
            link = self.certificate_for_mask(mask & ~self._closed(v))
            assert deletion is not None and link is not None
            cert = CertificateNode(self.graph.vertices[v].name, deletion, link)
        self._cert_cache[mask] = cert
        return cert

    def certificate(self) -> DecompositionCertificate | None:
        return self.certificate_for_mask(self._full)


def is_vertex_decomposable(graph: Graph) -> DecompositionCertificate | None:
    """Certificate of vertex decomposability, or None when there is none."""
    return DecompositionEngine(graph).certificate()


def vertex_decomposable(graph: Graph) -> bool:
    """Verdict only; skips building the certificate tree."""
    return DecompositionEngine(graph).is_vd()


# ---------------------------------------------------------------------------
# shedding sequences

@dataclass(frozen=True)
class SequenceStep:
    """One step of a shedding sequence: the vertex, whether it sheds in the
    graph it was applied to, and the two graphs it produces."""

    vertex: str
    sheds: bool
    after_deletion: Graph
    after_deletion_vd: bool
    after_link: Graph
    after_link_vd: bool


@dataclass(frozen=True)
class SheddingSequenceTrace:
    vertices: tuple[str, ...]
    steps: tuple[SequenceStep, ...]
    final_graph: Graph
    final_vd: bool
    verdict: bool


def check_shedding_sequence(graph: Graph, vertices: Sequence[str]) -> SheddingSequenceTrace:
    """Verify a shedding sequence z_1..z_m.

    Conditions: each z_i sheds in the graph left after deleting
    z_1..z_{i-1}; each closed-neighborhood removal at z_i leaves a vertex
    decomposable graph; and the final deletion-only graph is vertex
    decomposable.  A true verdict certifies the input graph vertex
    decomposable.
    """
    seen: set[str] = set()
    for name in vertices:
        graph.vertex(name)
        if name in seen:
            raise GraphError(f"repeated vertex {name!r} in shedding sequence")
        seen.add(name)

    engine = DecompositionEngine(graph)
    current = graph.full_mask()
    steps: list[SequenceStep] = []
    for name in vertices:
        v = graph.index_of(name)
        if not (current >> v & 1):
            raise GraphError(f"vertex {name!r} was already removed by an earlier step")
        sheds = engine.sheds(current, v)
        deletion = current & ~(1 << v)
        link = current & ~engine._closed(v)
        deletion_graph = graph.induced_subgraph(graph.names_of(deletion))
        link_graph = graph.induced_subgraph(graph.names_of(link))
        steps.append(
            SequenceStep(
                vertex=name,
                sheds=sheds,
                after_deletion=deletion_graph,
                after_deletion_vd=engine.is_vd_mask(deletion),
                after_link=link_graph,
                after_link_vd=engine.is_vd_mask(link),
            )
        )
        current = deletion

    final_vd = engine.is_vd_mask(current)
    verdict = final_vd and all(s.sheds and s.after_link_vd for s in steps)
    return SheddingSequenceTrace(
        vertices=tuple(vertices),
        steps=tuple(steps),
        final_graph=graph.induced_subgraph(graph.names_of(current)),
        final_vd=final_vd,
        verdict=verdict,
    )


# ---------------------------------------------------------------------------
# from certificates to generator orders

def _shelling_facets(engine: DecompositionEngine, mask: int,
                     cert: DecompositionCertificate) -> list[frozenset[str]]:
    """Unwind a certificate into a shelling of the independence complex.

    Facets of the deletion branch come first, then the link branch's facets
    each extended by the shedding vertex; at an edgeless stage the whole
    vertex set is the unique facet.
    """
    if isinstance(cert, CertificateLeaf):
        return [frozenset(cert.vertices)]
    graph = engine.graph
    v = graph.index_of(cert.shedding)
    deletion_facets = _shelling_facets(engine, mask & ~(1 << v), cert.deletion)
    link_facets = _shelling_facets(engine, mask & ~engine._closed(v), cert.link)
    return deletion_facets + [f | {cert.shedding} for f in link_facets]


def linear_order_from_certificate(
    graph: Graph, cert: DecompositionCertificate
) -> list[Monomial]:
    """Generator ordering of the cover ideal extracted from a certificate.

    The certificate unwinds to a shelling of the independence complex;
    complementing each facet gives the minimal vertex covers in an order
    whose cover-product generators have linear quotients.  The output is
    re-validated before being returned; a validation failure means the
    construction itself is broken and raises.
    """
    if not validate_certificate(graph, cert):
        raise GraphError("certificate does not certify this graph")
    ideal = cover_ideal(graph)
    if ideal.is_whole_ring:
        return []
    engine = DecompositionEngine(graph)
    facets = _shelling_facets(engine, graph.full_mask(), cert)
    everything = set(graph.vertex_names)
    order = [Monomial.of({v: 1 for v in everything - facet}) for facet in facets]
    if len(order) != len(ideal.generators) or set(order) != set(ideal.generators):
        raise AssertionError(
            "internal error: shelling facets do not match the minimal covers"
        )
    if not is_linear_quotients_order(ideal, order):
        raise AssertionError(
            "internal error: certificate unwinding produced a non-linear-quotients order"
        )
    return order
