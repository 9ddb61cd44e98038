"""Fuzzy graph values and the effective-edge machinery.

A fuzzy graph carries a membership degree sigma(v) in [0,1] on every vertex
and mu(e) on every undirected edge. Domination in this package acts only
along *effective* edges, the edges where mu equals min(sigma(u), sigma(v)),
so the neighborhood functions here are all defined over effective edges.

FuzzyGraph is immutable. Vertices keep their input order and every
set-valued result is returned sorted by that order, which makes all
downstream output (witnesses, neighborhoods, serialized files)
deterministic. Edges are stored canonically sorted so that two graphs with
the same content compare equal regardless of construction order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence, Union

from .weights import parse_weight

WeightLike = Union[Fraction, str, int]

_ID_RE = re.compile(r"[^\s,()]+\Z")


class GraphError(ValueError):
    """Base for graph construction and lookup errors."""


class GraphStructureError(GraphError):
    """The raw data cannot be assembled into a graph at all."""


class UnknownVertexError(GraphError):
    """A vertex id is not present in the graph."""


def _coerce_weight(value: WeightLike, where: str) -> Fraction:
    if isinstance(value, str):
        return parse_weight(value)
    if isinstance(value, bool):
        raise GraphStructureError(f"{where}: weight must be a rational or string")
    if isinstance(value, int):
        value = Fraction(value)
    if not isinstance(value, Fraction):
        raise GraphStructureError(f"{where}: weight must be a rational or string")
    if not 0 <= value <= 1:
        raise GraphStructureError(f"{where}: weight {value} outside [0, 1]")
    return value


def _check_id(vid: str) -> str:
    if not isinstance(vid, str) or _ID_RE.match(vid) is None:
        raise GraphStructureError(
            f"bad vertex id {vid!r}: ids are nonempty tokens without "
            "whitespace, commas, or parentheses")
    return vid


@dataclass(frozen=True)
class ProductTag:
    """Provenance of a product graph: which factor pair each vertex came from.

    factors is parallel to the owning graph's vertex tuple.
    """

    left_name: str
    right_name: str
    separator: str
    factors: tuple[tuple[str, str], ...]

    def factor_of(self, graph: "FuzzyGraph", vid: str) -> tuple[str, str]:
        return self.factors[graph.index(vid)]


@dataclass(frozen=True)
class FuzzyGraph:
    """Immutable fuzzy graph.

    vertices: ids in input order; sigma: parallel membership degrees;
    edges: (u, v, mu) triples with u < v as strings, sorted by (u, v).
    """

    name: str
    vertices: tuple[str, ...]
    sigma: tuple[Fraction, ...]
    edges: tuple[tuple[str, str, Fraction], ...]
    product_tag: Optional[ProductTag] = None

    @classmethod
    def build(
        cls,
        name: str,
        vertices: Union[Mapping[str, WeightLike], Iterable[tuple[str, WeightLike]]],
        edges: Iterable[tuple[str, str, WeightLike]] = (),
        product_tag: Optional[ProductTag] = None,
    ) -> "FuzzyGraph":
        """Assemble a graph, rejecting structurally ambiguous input.

        Rejected here: bad id tokens, duplicate vertex ids, unknown edge
        endpoints, duplicate unordered edge pairs, out-of-range weights.
        Loops and mu > min sigma are representable; validate() reports them.
        """
        if isinstance(vertices, Mapping):
            vertex_items = list(vertices.items())
        else:
            vertex_items = list(vertices)
        ids: list[str] = []
        sigmas: list[Fraction] = []
        seen: set[str] = set()
        for vid, raw in vertex_items:
            _check_id(vid)
            if vid in seen:
                raise GraphStructureError(f"duplicate vertex id {vid!r}")
            seen.add(vid)
            ids.append(vid)
            sigmas.append(_coerce_weight(raw, f"sigma({vid})"))
        canon: list[tuple[str, str, Fraction]] = []
        pairs: set[tuple[str, str]] = set()
        for u, v, raw in edges:
            if u not in seen:
                raise GraphStructureError(f"edge endpoint {u!r} is not a vertex")
            if v not in seen:
                raise GraphStructureError(f"edge endpoint {v!r} is not a vertex")
            a, b = (u, v) if u <= v else (v, u)
            if (a, b) in pairs:
                raise GraphStructureError(f"duplicate edge ({a},{b})")
            pairs.add((a, b))
            canon.append((a, b, _coerce_weight(raw, f"mu({a},{b})")))
        canon.sort(key=lambda e: (e[0], e[1]))
        return cls(name=name, vertices=tuple(ids), sigma=tuple(sigmas),
                   edges=tuple(canon), product_tag=product_tag)

    def index(self, vid: str) -> int:
        try:
            return _index_map(self)[vid]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {vid!r} in graph {self.name!r}") from None

    def sigma_of(self, vid: str) -> Fraction:
        return self.sigma[self.index(vid)]

    def sorted_by_input_order(self, s: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(s, key=self.index))


@lru_cache(maxsize=None)
def _index_map(g: FuzzyGraph) -> dict[str, int]:
    return {vid: i for i, vid in enumerate(g.vertices)}


@lru_cache(maxsize=None)
def _mu_map(g: FuzzyGraph) -> dict[tuple[str, str], Fraction]:
    return {(u, v): mu for u, v, mu in g.edges}


@lru_cache(maxsize=None)
def _effective_adjacency(g: FuzzyGraph) -> tuple[frozenset[str], ...]:
    # adjacency over effective edges only, indexed by vertex position
    nbrs: list[set[str]] = [set() for _ in g.vertices]
    idx = _index_map(g)
    for u, v, mu in g.edges:
        if u == v:
            continue  # loops never make a vertex its own neighbor
        if mu == min(g.sigma[idx[u]], g.sigma[idx[v]]):
            nbrs[idx[u]].add(v)
            nbrs[idx[v]].add(u)
    return tuple(frozenset(s) for s in nbrs)


def validate(g: FuzzyGraph) -> list[str]:
    """Return every violated fuzzy-graph invariant; empty list means valid.

    Build() already rejects malformed structure, so on graphs made through
    build() the possible findings are loops and mu exceeding min sigma.
    Weight-range problems are still reported for graphs assembled directly.
    """
    violations: list[str] = []
    idx = {vid: i for i, vid in enumerate(g.vertices)}
    for vid, s in zip(g.vertices, g.sigma):
        if not 0 <= s <= 1:
            violations.append(f"sigma out of range on {vid}")
    for u, v, mu in g.edges:
        if u == v:
            violations.append(f"loop on ({u},{v})")
            continue
        if not 0 <= mu <= 1:
            violations.append(f"mu out of range on ({u},{v})")
        if mu > min(g.sigma[idx[u]], g.sigma[idx[v]]):
            violations.append(f"mu exceeds min sigma on ({u},{v})")
    return violations


def is_effective(g: FuzzyGraph, u: str, v: str) -> bool:
    """True iff {u,v} is an edge attaining mu = min(sigma(u), sigma(v))."""
    iu, iv = g.index(u), g.index(v)
    if iu == iv:
        return False
    a, b = (u, v) if u <= v else (v, u)
    mu = _mu_map(g).get((a, b))
    if mu is None:
        return False
    return mu == min(g.sigma[iu], g.sigma[iv])


def open_neighborhood(g: FuzzyGraph, v: str) -> tuple[str, ...]:
    """Effective neighbors of v, sorted by vertex input order."""
    return g.sorted_by_input_order(_effective_adjacency(g)[g.index(v)])


def closed_neighborhood(g: FuzzyGraph, v: str) -> tuple[str, ...]:
    """Effective neighbors of v plus v itself, sorted by input order."""
    return g.sorted_by_input_order(_effective_adjacency(g)[g.index(v)] | {v})


def is_complete(g: FuzzyGraph) -> bool:
    """True iff every distinct vertex pair is an effective edge."""
    n = len(g.vertices)
    adj = _effective_adjacency(g)
    return all(len(adj[i]) == n - 1 for i in range(n))


def fuzzy_order(g: FuzzyGraph) -> Fraction:
    """Sum of sigma over all vertices."""
    return sum(g.sigma, Fraction(0))


def fuzzy_cardinality(g: FuzzyGraph, s: Iterable[str]) -> Fraction:
    """Sum of sigma over the given vertex set."""
    return sum((g.sigma[g.index(v)] for v in set(s)), Fraction(0))


def effective_degree_counts(g: FuzzyGraph) -> tuple[int, ...]:
    """Number of effective neighbors per vertex, in input order."""
    return tuple(len(s) for s in _effective_adjacency(g))


def is_crisp_connected(g: FuzzyGraph) -> bool:
    """Connectivity over the support of the edge set (edges with mu > 0).

    Effectiveness does not matter here, only that the edge carries any
    positive membership. The empty graph counts as connected; a single
    vertex does too.
    """
    n = len(g.vertices)
    if n <= 1:
        return True
    idx = _index_map(g)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v, mu in g.edges:
        if u == v or mu == 0:
            continue
        adj[idx[u]].append(idx[v])
        adj[idx[v]].append(idx[u])
    seen = {0}
    stack = [0]
    while stack:
        cur = stack.pop()
        for nxt in adj[cur]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == n


def effective_edges(g: FuzzyGraph) -> tuple[tuple[str, str, Fraction], ...]:
    """The subset of edges along which domination acts."""
    idx = _index_map(g)
    return tuple((u, v, mu) for u, v, mu in g.edges
                 if u != v and mu == min(g.sigma[idx[u]], g.sigma[idx[v]]))
