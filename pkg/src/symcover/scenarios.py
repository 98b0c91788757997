"""Scenario harness: run the theorem-shaped checks on concrete inputs.

Each verifier builds the graphs a theorem talks about, runs the relevant
decisions (cycle cover, whisker dominance, vertex decomposability, linear
quotients), and returns a ScenarioReport.  When a theorem's hypothesis
fails, the verifier never turns the conclusion into an assertion: it keeps
running in exploration mode and records what it observed, because the
interesting counterexamples are exactly the hypothesis-violating runs.

Reports render deterministically; wall-clock duration is kept on the object
but never rendered, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Mapping, Sequence

from .decomposability import check_shedding_sequence, vertex_decomposable
from .duplication import (
    DuplicationTuple,
    coerce_tuple,
    duplicate_edges,
    duplicate_vertices,
    satisfies_whisker_dominance,
    shadows_of,
)
from .enumeration import as_graph, canonical_form, connected_graphs_up_to_isomorphism
from .graphs import (
    Graph,
    GraphError,
    StarCompleteSpec,
    add_whiskers,
    attach_star_complete,
    glue_along_edge,
    render_graph_text,
)
from .ideals import has_linear_quotients, symbolic_power


# ---------------------------------------------------------------------------
# reports

@dataclass
class ScenarioStep:
    """One check inside a scenario; ``expected`` is None for observations."""

    name: str
    observed: str
    expected: str | None = None

    @property
    def passed(self) -> bool | None:
        if self.expected is None:
            return None
        return self.observed == self.expected


@dataclass
class ScenarioReport:
    scenario: str
    inputs: dict[str, str]
    steps: list[ScenarioStep] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    duration: float = 0.0

    @property
    def overall_pass(self) -> bool:
        return all(step.passed is not False for step in self.steps)

    def observe(self, name: str, observed: str) -> ScenarioStep:
        step = ScenarioStep(name, observed)
        self.steps.append(step)
        return step

    def expect(self, name: str, observed: str, expected: str) -> ScenarioStep:
        step = ScenarioStep(name, observed, expected)
        self.steps.append(step)
        return step

    def flag(self, message: str) -> None:
        self.flags.append(message)

    def to_text(self) -> str:
        lines = [f"scenario: {self.scenario}"]
        for key, value in self.inputs.items():
            lines.append(f"input {key}: {value}")
        for message in self.flags:
            lines.append(f"flag: {message}")
        for step in self.steps:
            if step.expected is None:
                lines.append(f"step {step.name}: observed={step.observed}")
            else:
                word = "pass" if step.passed else "FAIL"
                lines.append(
                    f"step {step.name}: observed={step.observed} "
                    f"expected={step.expected} [{word}]"
                )
        lines.append(f"overall: {'PASS' if self.overall_pass else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "inputs": dict(self.inputs),
            "flags": list(self.flags),
            "steps": [
                {"name": s.name, "observed": s.observed, "expected": s.expected,
                 "passed": s.passed}
                for s in self.steps
            ],
            "overall_pass": self.overall_pass,
        }


def graph_digest(graph: Graph) -> str:
    return hashlib.sha256(render_graph_text(graph).encode()).hexdigest()[:12]


def _yesno(value: bool) -> str:
    return "yes" if value else "no"


def _edge_list(graph: Graph) -> str:
    return ",".join(f"{u}-{v}" for u, v in graph.edges)


# ---------------------------------------------------------------------------
# theorem verifiers

def verify_main_theorem(
    graph: Graph,
    cycle_cover: Sequence[str],
    counts: Mapping[str, int] | int = 1,
    k_max: int = 2,
    lq_k_max: int = 2,
    lq_generator_cap: int = 200,
) -> ScenarioReport:
    """Whisker at a claimed cycle cover, then duplicate and test.

    For each k up to ``k_max`` the k-fold vertex duplication of the
    whiskered graph must be vertex decomposable, and for k up to
    ``lq_k_max`` the k-th symbolic power of its cover ideal must have
    linear quotients (capped at ``lq_generator_cap`` generators).  When
    the given set is not a cycle cover the run downgrades to exploration.
    """
    started = time.perf_counter()
    cover = sorted(set(cycle_cover), key=graph.index_of)
    whiskered = add_whiskers(graph, cover, counts)
    report = ScenarioReport(
        scenario=f"verify-main/{graph_digest(graph)}/S={'+'.join(cover) or '-'}/k={k_max}",
        inputs={
            "graph": graph_digest(graph),
            "edges": _edge_list(graph),
            "S": "+".join(cover) or "(empty)",
            "k_max": str(k_max),
        },
    )
    is_cover = graph.is_cycle_cover(cover)
    asserting = is_cover
    if is_cover:
        report.expect("cycle-cover", _yesno(True), "yes")
    else:
        report.observe("cycle-cover", _yesno(False))
        report.flag("hypothesis violated: S is not a cycle cover; exploring anyway")

    h = whiskered.graph
    for k in range(1, k_max + 1):
        verdict = vertex_decomposable(duplicate_vertices(h, k))
        name = f"vertex-decomposable k={k}"
        if asserting:
            report.expect(name, _yesno(verdict), "yes")
        else:
            report.observe(name, _yesno(verdict))
        if k <= lq_k_max:
            ideal = symbolic_power(h, k)
            name = f"linear-quotients k={k}"
            if ideal.is_whole_ring:
                report.observe(name, "whole ring (no generators)")
            elif len(ideal.generators) > lq_generator_cap:
                report.observe(
                    name, f"skipped ({len(ideal.generators)} generators > cap {lq_generator_cap})"
                )
            else:
                order = has_linear_quotients(ideal)
                if asserting:
                    report.expect(name, _yesno(order is not None), "yes")
                else:
                    report.observe(name, _yesno(order is not None))
    report.duration = time.perf_counter() - started
    return report


def verify_edge_theorem(
    graph: Graph,
    cycle_cover: Sequence[str],
    counts: Mapping[str, int] | int,
    t: DuplicationTuple | Sequence[int],
) -> ScenarioReport:
    """Whisker at a cycle cover, duplicate edges by a tuple, and test.

    When the tuple is whisker-dominant and the set is a cycle cover, the
    edge-duplicated graph is asserted vertex decomposable; otherwise the
    verdict is recorded as an observation.
    """
    started = time.perf_counter()
    cover = sorted(set(cycle_cover), key=graph.index_of)
    whiskered = add_whiskers(graph, cover, counts)
    t = coerce_tuple(t)
    if len(t) != whiskered.graph.edge_count:
        raise GraphError(
            f"tuple length {len(t)} does not match the "
            f"{whiskered.graph.edge_count} edges of the whiskered graph"
        )
    report = ScenarioReport(
        scenario=f"verify-edge/{graph_digest(graph)}/S={'+'.join(cover) or '-'}/t={t.render()}",
        inputs={
            "graph": graph_digest(graph),
            "edges": _edge_list(graph),
            "S": "+".join(cover) or "(empty)",
            "tuple": t.render(),
        },
    )
    is_cover = graph.is_cycle_cover(cover)
    dominant = satisfies_whisker_dominance(whiskered, t)
    asserting = is_cover and dominant
    if is_cover:
        report.expect("cycle-cover", "yes", "yes")
    else:
        report.observe("cycle-cover", "no")
        report.flag("hypothesis violated: S is not a cycle cover; exploring anyway")
    if dominant and asserting:
        report.expect("whisker-dominance", "yes", "yes")
    elif dominant:
        report.observe("whisker-dominance", "yes")
    else:
        report.observe("whisker-dominance", "no")
        report.flag("hypothesis violated: tuple is not whisker-dominant; exploring anyway")

    verdict = vertex_decomposable(duplicate_edges(whiskered.graph, t))
    if asserting:
        report.expect("vertex-decomposable", _yesno(verdict), "yes")
    else:
        report.observe("vertex-decomposable", _yesno(verdict))
    report.duration = time.perf_counter() - started
    return report


def verify_glue_star(
    graph: Graph,
    cycle_cover: Sequence[str],
    specs: Sequence[StarCompleteSpec],
    k_max: int = 2,
) -> ScenarioReport:
    """Attach star complete graphs at a cycle cover, duplicate, and test.

    The vertex-decomposability assertion fires only when every attachment
    is non-pure, every cycle-cover vertex received one, and the attachment
    sites lie inside the cycle cover; anything else is exploration.
    """
    started = time.perf_counter()
    cover = sorted(set(cycle_cover), key=graph.index_of)
    spec_text = ";".join(f"{s.attach_at}:{','.join(map(str, s.clique_sizes))}" for s in specs)
    report = ScenarioReport(
        scenario=f"verify-star/{graph_digest(graph)}/S={'+'.join(cover) or '-'}"
        f"/spec={spec_text or '-'}/k={k_max}",
        inputs={
            "graph": graph_digest(graph),
            "edges": _edge_list(graph),
            "S": "+".join(cover) or "(empty)",
            "specs": spec_text or "(none)",
            "k_max": str(k_max),
        },
    )
    asserting = True
    if graph.is_cycle_cover(cover):
        report.expect("cycle-cover", "yes", "yes")
    else:
        report.observe("cycle-cover", "no")
        report.flag("hypothesis violated: S is not a cycle cover; exploring anyway")
        asserting = False

    attached_at = {s.attach_at for s in specs}
    for s in specs:
        if s.attach_at not in cover:
            report.flag(f"attachment at {s.attach_at} lies outside the cycle-cover set")
            asserting = False
    for v in cover:
        if v not in attached_at:
            report.flag(f"cycle-cover vertex {v} received no attachment")
            asserting = False

    current = graph
    for s in specs:
        current, classification = attach_star_complete(current, s)
        report.observe(f"attachment {s.attach_at}", classification)
        if classification != "non-pure":
            asserting = False

    for k in range(1, k_max + 1):
        verdict = vertex_decomposable(duplicate_vertices(current, k))
        name = f"vertex-decomposable k={k}"
        if asserting:
            report.expect(name, _yesno(verdict), "yes")
        else:
            report.observe(name, _yesno(verdict))
    report.duration = time.perf_counter() - started
    return report


def verify_glue_theorem(
    g: Graph,
    h: Graph,
    edge: tuple[str, str],
    tuple_g: DuplicationTuple | Sequence[int],
    tuple_h: DuplicationTuple | Sequence[int],
) -> ScenarioReport:
    """Glue two graphs along a common leaf edge and test the duplication.

    Both factors must duplicate the shared edge with the same multiplicity,
    which must dominate every other entry.  The shadows of the support
    vertex are checked as a shedding sequence in each factor and in the
    glued graph; when both factors pass, the glued duplication is asserted
    vertex decomposable.
    """
    started = time.perf_counter()
    u, v = edge
    if not (g.has_edge(u, v) and h.has_edge(u, v)):
        raise GraphError(f"{{{u}, {v}}} must be an edge of both graphs")
    leaf_candidates = [w for w in (u, v) if g.degree(w) == 1 and h.degree(w) == 1]
    if not leaf_candidates:
        raise GraphError(f"{{{u}, {v}}} is not a common leaf edge")
    leaf = leaf_candidates[0]
    support = v if leaf == u else u

    tuple_g = coerce_tuple(tuple_g)
    tuple_h = coerce_tuple(tuple_h)
    if len(tuple_g) != g.edge_count or len(tuple_h) != h.edge_count:
        raise GraphError("tuple lengths must match the edge counts of the factors")
    key = frozenset(edge)
    pos_g = next(i for i, e in enumerate(g.edges) if frozenset(e) == key)
    pos_h = next(i for i, e in enumerate(h.edges) if frozenset(e) == key)
    shared = tuple_g[pos_g]
    if tuple_h[pos_h] != shared:
        raise GraphError("the shared edge must receive the same multiplicity in both factors")

    report = ScenarioReport(
        scenario=f"verify-glue/{graph_digest(g)}+{graph_digest(h)}/e={u}-{v}"
        f"/t={tuple_g.render()}/{tuple_h.render()}",
        inputs={
            "graph": graph_digest(g),
            "graph2": graph_digest(h),
            "edge": f"{u}-{v}",
            "tuple": tuple_g.render(),
            "tuple2": tuple_h.render(),
        },
    )
    asserting = True
    if shared < max(tuple_g) or shared < max(tuple_h):
        report.flag("shared-edge multiplicity is not maximal; exploring anyway")
        asserting = False
    if shared < 1:
        report.flag("shared-edge multiplicity is zero; exploring anyway")
        asserting = False

    glued = glue_along_edge(g, h, edge)
    glued_entries = list(tuple_g)
    for i, e in enumerate(h.edges):
        if i != pos_h:
            glued_entries.append(tuple_h[i])
    glued_tuple = DuplicationTuple(tuple(glued_entries))

    factor_ok = True
    for label, factor, t in (("G", g, tuple_g), ("H", h, tuple_h)):
        dup = duplicate_edges(factor, t)
        shadows = shadows_of(dup, support)[:shared]
        trace = check_shedding_sequence(dup, shadows)
        report.observe(f"factor-{label}-shedding-sequence", _yesno(trace.verdict))
        factor_ok = factor_ok and trace.verdict

    glued_dup = duplicate_edges(glued, glued_tuple)
    shadows = shadows_of(glued_dup, support)[:shared]
    trace = check_shedding_sequence(glued_dup, shadows)
    verdict = vertex_decomposable(glued_dup)
    if asserting and factor_ok:
        report.expect("glued-shedding-sequence", _yesno(trace.verdict), "yes")
        report.expect("glued-vertex-decomposable", _yesno(verdict), "yes")
    else:
        report.observe("glued-shedding-sequence", _yesno(trace.verdict))
        report.observe("glued-vertex-decomposable", _yesno(verdict))
        if not factor_ok:
            report.flag("a factor failed its shedding sequence; glued check is exploration")
    report.duration = time.perf_counter() - started
    return report


# ---------------------------------------------------------------------------
# counterexample search

_TUPLE_SPACE_CAP = 20000


def counterexample_search(max_vertices: int, max_k: int, mode: str) -> Iterator[ScenarioReport]:
    """Stream edge-case reports over all small connected graphs.

    mode "i": whisker at sets that are NOT cycle covers and duplicate
    vertices.  Reports appear when the unduplicated graph is vertex
    decomposable but some k breaks it (a boundary witness), or when every
    k up to ``max_k`` passes anyway (evidence the hypothesis could be
    weakened).

    mode "ii": whisker at the minimum cycle cover and enumerate duplication
    tuples with entries in 1..max_k that are NOT whisker-dominant; every
    such tuple is reported with its vertex-decomposability verdict.

    Scenario ids encode the enumeration position, so output sorted by id
    equals enumeration order.
    """
    if not 1 <= max_vertices <= 8:
        raise GraphError("max_vertices must be between 1 and 8")
    if not 1 <= max_k <= 3:
        raise GraphError("max_k must be between 1 and 3")
    if mode not in ("i", "ii"):
        raise GraphError(f"unknown search mode {mode!r}")
    if mode == "i":
        yield from _search_non_cycle_covers(max_vertices, max_k)
    else:
        yield from _search_tuple_violations(max_vertices, max_k)


def _search_non_cycle_covers(max_vertices: int, max_k: int) -> Iterator[ScenarioReport]:
    for n in range(1, max_vertices + 1):
        for g_index, edges in enumerate(connected_graphs_up_to_isomorphism(n)):
            graph = as_graph(n, edges)
            if graph.is_cycle_cover(()):
                continue  # forests: every subset is a cycle cover
            seen: set[tuple] = set()
            for size in range(0, n + 1):
                for combo in combinations(range(n), size):
                    names = [graph.vertex_names[i] for i in combo]
                    if graph.is_cycle_cover(names):
                        continue
                    colors = [1 if i in combo else 0 for i in range(n)]
                    key = canonical_form(n, edges, colors)
                    if key in seen:
                        continue
                    seen.add(key)
                    report = _explore_non_cycle_cover(graph, names, max_k, n, g_index)
                    if report is not None:
                        yield report


def _explore_non_cycle_cover(
    graph: Graph, names: Sequence[str], max_k: int, n: int, g_index: int
) -> ScenarioReport | None:
    whiskered = add_whiskers(graph, names)
    h = whiskered.graph
    verdicts: list[bool] = []
    for k in range(1, max_k + 1):
        verdicts.append(vertex_decomposable(duplicate_vertices(h, k)))
        if not verdicts[-1]:
            break
    if not verdicts[0]:
        return None  # not decomposable even before duplicating: not an edge case
    report = ScenarioReport(
        scenario=f"search-i/n{n}/g{g_index:03d}/S{len(names)}:{'+'.join(names) or '-'}",
        inputs={
            "graph": graph_digest(graph),
            "edges": _edge_list(graph),
            "S": "+".join(names) or "(empty)",
            "max_k": str(max_k),
        },
    )
    report.flag("S is not a cycle cover")
    for k, verdict in enumerate(verdicts, start=1):
        report.observe(f"vertex-decomposable k={k}", _yesno(verdict))
    if all(verdicts) and len(verdicts) == max_k:
        report.flag("edge case: decomposability survived without the cycle-cover hypothesis")
    else:
        report.flag(f"boundary: decomposability broke at k={len(verdicts)}")
    return report


def _search_tuple_violations(max_vertices: int, max_k: int) -> Iterator[ScenarioReport]:
    for n in range(1, max_vertices + 1):
        for g_index, edges in enumerate(connected_graphs_up_to_isomorphism(n)):
            graph = as_graph(n, edges)
            if graph.is_cycle_cover(()):
                continue
            cover = sorted(graph.minimum_cycle_cover(), key=graph.index_of)
            whiskered = add_whiskers(graph, cover)
            m = whiskered.graph.edge_count
            base = f"search-ii/n{n}/g{g_index:03d}"
            if max_k**m > _TUPLE_SPACE_CAP:
                report = ScenarioReport(
                    scenario=f"{base}/skipped",
                    inputs={
                        "graph": graph_digest(graph),
                        "edges": _edge_list(graph),
                        "S": "+".join(cover),
                    },
                )
                report.flag(
                    f"skipped: {max_k}^{m} tuples exceed the desk-scale cap {_TUPLE_SPACE_CAP}"
                )
                yield report
                continue
            for entries in product(range(1, max_k + 1), repeat=m):
                t = DuplicationTuple(entries)
                if satisfies_whisker_dominance(whiskered, t):
                    continue
                verdict = vertex_decomposable(duplicate_edges(whiskered.graph, t))
                report = ScenarioReport(
                    scenario=f"{base}/t={t.render()}",
                    inputs={
                        "graph": graph_digest(graph),
                        "edges": _edge_list(graph),
                        "S": "+".join(cover),
                        "tuple": t.render(),
                    },
                )
                report.flag("tuple is not whisker-dominant")
                report.observe("vertex-decomposable", _yesno(verdict))
                if verdict:
                    report.flag("edge case: decomposability survived a non-dominant tuple")
                yield report
