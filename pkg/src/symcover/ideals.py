"""Monomial ideals attached to graphs: cover ideals, symbolic powers,
polarization, and the linear-quotients test.

Monomials are exponent maps over named variables; ideals always store their
unique minimal generating set, canonically sorted by (degree, then
lexicographic preference for earlier ambient variables).  The zero-generator
"whole ring" marker stands in for the degenerate ideal generated by 1, which
only arises from edgeless graphs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import Graph


class IdealError(ValueError):
    """Raised for malformed monomials/ideals or mismatched operations."""


# ---------------------------------------------------------------------------
# monomials

@dataclass(frozen=True)
class Monomial:
    """A monomial as a sorted tuple of (variable, exponent >= 1) pairs."""

    exps: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for var, e in self.exps:
            if e < 1:
                raise IdealError(f"exponent of {var!r} must be >= 1, got {e}")
            if var in seen:
                raise IdealError(f"variable {var!r} repeated in monomial")
            seen.add(var)
        if tuple(sorted(self.exps)) != self.exps:
            raise IdealError("monomial exponents must be sorted; use Monomial.of()")

    @classmethod
    def of(cls, exponents: Mapping[str, int] | Iterable[tuple[str, int]]) -> Monomial:
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        merged: dict[str, int] = {}
        for var, e in items:
            if e < 0:
                raise IdealError(f"exponent of {var!r} must be >= 0, got {e}")
            if e:
                merged[var] = merged.get(var, 0) + e
        return cls(tuple(sorted(merged.items())))

    @classmethod
    def one(cls) -> Monomial:
        return cls(())

    def exponent(self, var: str) -> int:
        for v, e in self.exps:
            if v == var:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.exps)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def divides(self, other: Monomial) -> bool:
        return all(other.exponent(v) >= e for v, e in self.exps)

    def mul(self, other: Monomial) -> Monomial:
        return Monomial.of(list(self.exps) + list(other.exps))

    def lcm(self, other: Monomial) -> Monomial:
        out = dict(self.exps)
        for v, e in other.exps:
            out[v] = max(out.get(v, 0), e)
        return Monomial.of(out)

    def colon(self, other: Monomial) -> Monomial:
        """self : other, i.e. self divided by gcd(self, other)."""
        return Monomial.of({v: max(0, e - other.exponent(v)) for v, e in self.exps})

    def render(self, var_order: Sequence[str] | None = None) -> str:
        if not self.exps:
            return "1"
        if var_order is None:
            ordered = self.exps
        else:
            rank = {v: i for i, v in enumerate(var_order)}
            ordered = tuple(sorted(self.exps, key=lambda item: rank.get(item[0], len(rank))))
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in ordered)

    def __repr__(self) -> str:
        return f"Monomial({self.render()})"


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return Monomial.one()
    exps: list[tuple[str, int]] = []
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            raise IdealError(f"empty factor in monomial {text!r}")
        if "^" in factor:
            var, _, raw = factor.partition("^")
            try:
                e = int(raw)
            except ValueError:
                raise IdealError(f"bad exponent in factor {factor!r}") from None
        else:
            var, e = factor, 1
        if not var:
            raise IdealError(f"missing variable name in factor {factor!r}")
        exps.append((var, e))
    return Monomial.of(exps)


# ---------------------------------------------------------------------------
# ideals

def _minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    unique = sorted(set(gens), key=lambda m: m.degree)
    kept: list[Monomial] = []
    for m in unique:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return kept


class MonomialIdeal:
    """A monomial ideal held by its minimal generating set."""

    __slots__ = ("_variables", "_generators", "_whole")

    def __init__(self, variables: Sequence[str], generators: Iterable[Monomial] = (),
                 whole_ring: bool = False):
        self._variables = tuple(variables)
        if len(set(self._variables)) != len(self._variables):
            raise IdealError("ambient variables must be distinct")
        if whole_ring:
            gens: list[Monomial] = []
            if list(generators):
                raise IdealError("the whole-ring marker carries no generators")
        else:
            gens = _minimalize(generators)
            for g in gens:
                if g.degree == 0:
                    raise IdealError("a unit generator is not allowed; use the whole-ring marker")
                for v in g.variables:
                    if v not in set(self._variables):
                        raise IdealError(f"generator uses {v!r} outside the ambient variables")
        rank = {v: i for i, v in enumerate(self._variables)}

        def key(m: Monomial) -> tuple:
            vec = tuple(m.exponent(v) for v in self._variables)
            return (m.degree, tuple(-e for e in vec))

        self._generators = tuple(sorted(gens, key=key))
        self._whole = whole_ring

    @classmethod
    def whole(cls, variables: Sequence[str]) -> MonomialIdeal:
        return cls(variables, (), whole_ring=True)

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return self._generators

    @property
    def is_whole_ring(self) -> bool:
        return self._whole

    def contains(self, m: Monomial) -> bool:
        if self._whole:
            return True
        return any(g.divides(m) for g in self._generators)

    def __eq__(self, other: object) -> bool:
        # ambient rings may legitimately differ (e.g. discarded isolated
        # variables); equality means the same minimal generating set
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self._whole == other._whole and set(self._generators) == set(other._generators)

    def __hash__(self) -> int:
        return hash((self._whole, frozenset(self._generators)))

    def __repr__(self) -> str:
        if self._whole:
            return "MonomialIdeal(<whole ring>)"
        inside = ", ".join(g.render(self._variables) for g in self._generators)
        return f"MonomialIdeal({inside})"


def intersect(left: MonomialIdeal, right: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise least common multiples, then minimalization."""
    if left.variables != right.variables:
        raise IdealError("intersection requires matching ambient variables")
    if left.is_whole_ring:
        return right
    if right.is_whole_ring:
        return left
    gens = [a.lcm(b) for a in left.generators for b in right.generators]
    return MonomialIdeal(left.variables, gens)


# ---------------------------------------------------------------------------
# cover ideals and symbolic powers

@dataclass(frozen=True)
class EdgePrime:
    """The height-two prime (u, v) attached to an edge."""

    u: str
    v: str

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise IdealError("an edge prime needs two distinct variables")

    def power(self, k: int, variables: Sequence[str]) -> MonomialIdeal:
        """The k-th power (u, v)^k, generated by u^i v^(k-i)."""
        if k < 1:
            raise IdealError(f"prime power exponent must be >= 1, got {k}")
        gens = [
            Monomial.of({self.u: i, self.v: k - i})
            for i in range(k + 1)
        ]
        return MonomialIdeal(variables, gens)


def cover_ideal(graph: Graph) -> MonomialIdeal:
    """Ideal generated by the products over the minimal vertex covers.

    An edgeless graph has the empty cover, so the result degenerates to the
    whole ring; the marker keeps that case explicit.
    """
    variables = graph.vertex_names
    if graph.edge_count == 0:
        return MonomialIdeal.whole(variables)
    gens = [Monomial.of({v: 1 for v in cover}) for cover in graph.minimal_vertex_covers()]
    return MonomialIdeal(variables, gens)


def minimal_primes(graph: Graph) -> list[EdgePrime]:
    """One edge prime per edge, in canonical edge order."""
    return [EdgePrime(u, v) for u, v in graph.edges]


def symbolic_membership(graph: Graph, k: int, m: Monomial) -> bool:
    """Membership in the k-th symbolic power of the cover ideal.

    A monomial lies in every localized k-th power iff its exponents sum to
    at least k across each edge.
    """
    if k < 1:
        raise IdealError(f"symbolic power exponent must be >= 1, got {k}")
    return all(m.exponent(u) + m.exponent(v) >= k for u, v in graph.edges)


def symbolic_power(graph: Graph, k: int) -> MonomialIdeal:
    """Minimal generators of the k-th symbolic power of the cover ideal.

    Generators are the minimal nonnegative integer vectors a with
    a_u + a_v >= k on every edge.  Any minimal solution is bounded by k in
    every coordinate (an entry above k could be lowered to k without
    breaking a constraint), so the search space is {0..k}^n.
    """
    if k < 1:
        raise IdealError(f"symbolic power exponent must be >= 1, got {k}")
    names = graph.vertex_names
    if graph.edge_count == 0:
        return MonomialIdeal.whole(names)
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    # edges whose second endpoint is the vertex being assigned, by position
    pending: list[list[int]] = [[] for _ in range(n)]
    for u, v in graph.edges:
        a, b = index[u], index[v]
        hi, lo = max(a, b), min(a, b)
        pending[hi].append(lo)

    feasible: list[tuple[int, ...]] = []
    values = [0] * n

    def assign(pos: int) -> None:
        if pos == n:
            feasible.append(tuple(values))
            return
        for val in range(k + 1):
            values[pos] = val
            if all(values[other] + val >= k for other in pending[pos]):
                assign(pos + 1)
        values[pos] = 0

    assign(0)
    gens = [
        Monomial.of({names[i]: e for i, e in enumerate(vec) if e})
        for vec in feasible
    ]
    return MonomialIdeal(names, gens)


def symbolic_power_by_intersection(graph: Graph, k: int) -> MonomialIdeal:
    """Oracle route: intersect the k-th powers of all edge primes."""
    if k < 1:
        raise IdealError(f"symbolic power exponent must be >= 1, got {k}")
    names = graph.vertex_names
    result = MonomialIdeal.whole(names)
    for prime in minimal_primes(graph):
        result = intersect(result, prime.power(k, names))
    return result


# ---------------------------------------------------------------------------
# polarization

def polarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Replace each power x^a by the product of slot variables x.1 ... x.a.

    The ambient ring takes slots 1..(max exponent of x over the generators)
    for each base variable, ordered by (base position, slot).  Squarefree
    ideals are fixed up to the renaming x -> x.1.
    """
    if ideal.is_whole_ring:
        return ideal
    depth = {v: 0 for v in ideal.variables}
    for g in ideal.generators:
        for v, e in g.exps:
            depth[v] = max(depth[v], e)
    variables = [f"{v}.{j}" for v in ideal.variables for j in range(1, depth[v] + 1)]
    gens = [
        Monomial.of({f"{v}.{j}": 1 for v, e in g.exps for j in range(1, e + 1)})
        for g in ideal.generators
    ]
    return MonomialIdeal(variables, gens)


def depolarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Undo one polarization layer by merging x.j slots back into x."""
    if ideal.is_whole_ring:
        return ideal

    def base_of(slot: str) -> str:
        stem, dot, tail = slot.rpartition(".")
        if dot and tail.isdigit():
            return stem
        return slot

    bases: list[str] = []
    for v in ideal.variables:
        b = base_of(v)
        if b not in bases:
            bases.append(b)
    gens = [
        Monomial.of([(base_of(v), e) for v, e in g.exps])
        for g in ideal.generators
    ]
    return MonomialIdeal(bases, gens)


# ---------------------------------------------------------------------------
# linear quotients

def _colon_supports(chosen: Sequence[Monomial], candidate: Monomial) -> bool:
    """True iff (chosen) : candidate is generated by variables.

    The colon ideal is generated by g : candidate over g in chosen; it is
    variable-generated iff every such quotient is divisible by some quotient
    that is a single variable.
    """
    colons = [g.colon(candidate) for g in chosen]
    single_vars = {c.exps[0][0] for c in colons if c.degree == 1}
    for c in colons:
        if c.degree == 0:
            # candidate is a multiple of a chosen generator; cannot happen
            # for minimal generating sets
            return False
        if not any(c.exponent(v) >= 1 for v in single_vars):
            return False
    return True


def is_linear_quotients_order(ideal: MonomialIdeal, order: Sequence[Monomial]) -> bool:
    """Validate that an ordering of the minimal generators has linear quotients."""
    if ideal.is_whole_ring:
        raise IdealError("the whole-ring marker has no generator ordering")
    if len(order) != len(ideal.generators) or set(order) != set(ideal.generators):
        raise IdealError("order must be a permutation of the minimal generators")
    for i in range(1, len(order)):
        if not _colon_supports(order[:i], order[i]):
            return False
    return True


def has_linear_quotients(ideal: MonomialIdeal) -> list[Monomial] | None:
    """Search for a linear-quotients ordering of the minimal generators.

    Returns the first accepting order in the canonical candidate order
    (degree-nondecreasing, then preference for earlier variables), or None
    when no ordering works.  Whether a candidate can be appended depends
    only on the set already chosen, so dead prefixes are memoized as sets.
    """
    if ideal.is_whole_ring or not ideal.generators:
        raise IdealError("linear quotients needs at least one generator")
    gens = ideal.generators
    q = len(gens)
    dead: set[frozenset[int]] = set()

    def extend(prefix: list[int], chosen: frozenset[int]) -> list[int] | None:
        if len(prefix) == q:
            return prefix
        if chosen in dead:
            return None
        current = [gens[i] for i in prefix]
        for i in range(q):
            if i in chosen:
                continue
            if _colon_supports(current, gens[i]):
                found = extend(prefix + [i], chosen | {i})
                if found is not None:
                    return found
        dead.add(chosen)
        return None

    found = extend([], frozenset())
    if found is None:
        return None
    return [gens[i] for i in found]


# ---------------------------------------------------------------------------
# text format

def render_ideal_text(ideal: MonomialIdeal) -> str:
    lines = ["variables: " + " ".join(ideal.variables)]
    if ideal.is_whole_ring:
        lines.append("whole-ring")
    else:
        lines.extend(g.render(ideal.variables) for g in ideal.generators)
    return "\n".join(lines) + "\n"


def _natural_key(name: str) -> tuple:
    parts: list[object] = []
    for chunk in re.split(r"(\d+)", name):
        parts.append((1, int(chunk)) if chunk.isdigit() else (0, chunk))
    return tuple(parts)


def parse_ideal_text(text: str) -> MonomialIdeal:
    variables: list[str] | None = None
    gens: list[Monomial] = []
    whole = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("variables:"):
            if variables is not None:
                raise IdealError(f"line {lineno}: repeated variables header")
            variables = line[len("variables:"):].split()
        elif line == "whole-ring":
            whole = True
        else:
            gens.append(parse_monomial(line))
    if variables is None:
        seen: set[str] = set()
        for g in gens:
            seen.update(g.variables)
        variables = sorted(seen, key=_natural_key)
    if whole:
        if gens:
            raise IdealError("a whole-ring ideal cannot also list generators")
        return MonomialIdeal.whole(variables)
    return MonomialIdeal(variables, gens)


def load_ideal(path: str) -> MonomialIdeal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal_text(fh.read())
