"""Labeled 3-uniform hypergraphs on up to 16 vertices.

Edge sets are bitsets (Python ints) over the C(n,3) vertex triples in colex
order, so a graph is a pair (n, bits).  Colex rank of {u<v<w} is
u + C(v,2) + C(w,3); the rank of a triple does not depend on n, and the first
C(k,3) slots are exactly the triples inside {0,...,k-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

MAX_N = 16

#: all triples of range(MAX_N) indexed by colex rank
TRIPLES: tuple[tuple[int, int, int], ...] = tuple(
    sorted(combinations(range(MAX_N), 3), key=lambda t: (t[2], t[1], t[0]))
)

_RANK = {t: i for i, t in enumerate(TRIPLES)}

#: TRIPLE_VMASK[r] = bitmask of the three vertices of slot r
TRIPLE_VMASK: tuple[int, ...] = tuple(
    (1 << u) | (1 << v) | (1 << w) for u, v, w in TRIPLES
)


def colex_rank(u: int, v: int, w: int) -> int:
    """Rank of the ascending triple {u,v,w} in colex order."""
    return u + comb(v, 2) + comb(w, 3)


def slot_count(n: int) -> int:
    """Number of edge slots C(n,3) for an n-vertex graph."""
    return comb(n, 3)


class Edge(tuple):
    """An edge: three distinct vertices, stored ascending."""

    __slots__ = ()

    def __new__(cls, a: int, b: int, c: int) -> "Edge":
        u, v, w = sorted((a, b, c))
        if u == v or v == w:
            raise ValueError(f"edge vertices must be distinct: {(a, b, c)}")
        if u < 0 or w >= MAX_N:
            raise ValueError(f"edge vertices out of range [0,{MAX_N}): {(a, b, c)}")
        return tuple.__new__(cls, (u, v, w))

    @property
    def rank(self) -> int:
        return _RANK[tuple(self)]


@dataclass(frozen=True)
class LinkGraph:
    """The link of a vertex: the pairs completing it to an edge."""

    vertex: int
    pairs: frozenset[tuple[int, int]]

    @property
    def degree(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Hypergraph3:
    """Immutable labeled 3-graph: vertex count n and an edge bitset."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be in [1,{MAX_N}], got {self.n}")
        if self.bits >> slot_count(self.n):
            raise ValueError("edge bitset has bits beyond C(n,3)")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "Hypergraph3":
        bits = 0
        for e in edges:
            u, v, w = sorted(e)
            if u == v or v == w:
                raise ValueError(f"edge vertices must be distinct: {e}")
            if w >= n or u < 0:
                raise ValueError(f"edge {e} out of range for n={n}")
            bits |= 1 << colex_rank(u, v, w)
        return cls(n, bits)

    @classmethod
    def complete(cls, n: int) -> "Hypergraph3":
        return cls(n, (1 << slot_count(n)) - 1)

    def with_edge(self, e: tuple[int, int, int]) -> "Hypergraph3":
        """Graph with edge e added; idempotent."""
        u, v, w = sorted(e)
        if u == v or v == w:
            raise ValueError(f"edge vertices must be distinct: {e}")
        if w >= self.n or u < 0:
            raise ValueError(f"edge {e} out of range for n={self.n}")
        return Hypergraph3(self.n, self.bits | (1 << colex_rank(u, v, w)))

    def without_edge(self, e: tuple[int, int, int]) -> "Hypergraph3":
        u, v, w = sorted(e)
        return Hypergraph3(self.n, self.bits & ~(1 << colex_rank(u, v, w)))

    # -- queries -----------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    def has_edge(self, e: tuple[int, int, int]) -> bool:
        u, v, w = sorted(e)
        return bool(self.bits >> colex_rank(u, v, w) & 1)

    def edges(self) -> list[tuple[int, int, int]]:
        """Edges as ascending triples, in colex order."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(TRIPLES[low.bit_length() - 1])
            bits ^= low
        return out

    def edge_ranks(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def degree(self, v: int) -> int:
        return sum(1 for r in self.edge_ranks() if TRIPLE_VMASK[r] >> v & 1)

    def degrees(self) -> list[int]:
        degs = [0] * self.n
        for r in self.edge_ranks():
            u, v, w = TRIPLES[r]
            degs[u] += 1
            degs[v] += 1
            degs[w] += 1
        return degs

    def link(self, v: int) -> LinkGraph:
        """Pairs p with p ∪ {v} an edge."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        pairs = set()
        for u, x, w in self.edges():
            if v == u:
                pairs.add((x, w))
            elif v == x:
                pairs.add((u, w))
            elif v == w:
                pairs.add((u, x))
        return LinkGraph(v, frozenset(pairs))

    def vertex_cover_mask(self) -> int:
        """Bitmask of non-isolated vertices."""
        m = 0
        for r in self.edge_ranks():
            m |= TRIPLE_VMASK[r]
        return m

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples; isolated vertices
        are singletons.  Two vertices are connected iff joined by a chain of
        edges sharing at least one vertex."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, w in self.edges():
            ru, rv, rw = find(u), find(v), find(w)
            parent[rv] = ru
            parent[find(rw)] = find(ru)
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    # -- transformations ---------------------------------------------------

    def disjoint_union(self, other: "Hypergraph3") -> "Hypergraph3":
        """Vertex-disjoint union; other's vertices are shifted by self.n."""
        n = self.n + other.n
        if n > MAX_N:
            raise ValueError(f"union has {n} > {MAX_N} vertices")
        bits = self.bits
        off = self.n
        for u, v, w in other.edges():
            bits |= 1 << colex_rank(u + off, v + off, w + off)
        return Hypergraph3(n, bits)

    def induced(self, vertices: Iterable[int]) -> "Hypergraph3":
        """Induced subgraph on the given vertices, relabeled order-preserving."""
        keep = sorted(set(vertices))
        if not keep:
            raise ValueError("induced subgraph needs at least one vertex")
        if keep[0] < 0 or keep[-1] >= self.n:
            raise ValueError("induced vertex set out of range")
        newid = {v: i for i, v in enumerate(keep)}
        kmask = 0
        for v in keep:
            kmask |= 1 << v
        bits = 0
        for r in self.edge_ranks():
            if TRIPLE_VMASK[r] & ~kmask:
                continue
            u, v, w = TRIPLES[r]
            bits |= 1 << colex_rank(newid[u], newid[v], newid[w])
        return Hypergraph3(len(keep), bits)

    def delete_vertex(self, v: int) -> "Hypergraph3":
        """Remove v and all its edges; remaining vertices close the gap."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        if self.n == 1:
            raise ValueError("cannot delete the last vertex")
        return self.induced([u for u in range(self.n) if u != v])

    def relabel(self, perm: Iterable[int]) -> "Hypergraph3":
        """Apply a vertex permutation: vertex i is renamed perm[i]."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("not a permutation of range(n)")
        bits = 0
        for u, v, w in self.edges():
            bits |= 1 << colex_rank(*sorted((p[u], p[v], p[w])))
        return Hypergraph3(self.n, bits)

    def restrict_edges(self, mask: int) -> "Hypergraph3":
        """Same vertices, edge bitset intersected with mask."""
        return Hypergraph3(self.n, self.bits & mask)

    # -- text format -------------------------------------------------------

    def to_text(self) -> str:
        """Serialize: line 1 `n m`, then m lines `u v w` in colex order."""
        lines = [f"{self.n} {self.edge_count}"]
        lines.extend(f"{u} {v} {w}" for u, v, w in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph3":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty graph text")
        head = lines[0].split()
        if len(head) != 2:
            raise ValueError(f"bad header line: {lines[0]!r}")
        n, m = int(head[0]), int(head[1])
        if len(lines) - 1 != m:
            raise ValueError(f"header says {m} edges, found {len(lines) - 1}")
        bits = 0
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 3:
                raise ValueError(f"bad edge line: {ln!r}")
            u, v, w = (int(x) for x in parts)
            if not (0 <= u < v < w < n):
                raise ValueError(f"edge line not ascending in range: {ln!r}")
            r = colex_rank(u, v, w)
            if bits >> r & 1:
                raise ValueError(f"duplicate edge: {ln!r}")
            bits |= 1 << r
        return cls(n, bits)

    def __repr__(self) -> str:
        return f"Hypergraph3(n={self.n}, m={self.edge_count})"
