"""Isomorphism testing and canonical forms for small 3-graphs.

Canonical form = the lexicographically least edge bitset over all vertex
permutations, bits compared in colex slot order (earlier slots more
significant).  The search refines vertices into cells by an iterated
link-structure invariant, backtracks only within cells, prunes on key
prefixes, and collapses symmetric branches with automorphisms discovered
along the way (equal-key completions allow a backjump to the divergence
depth, since the witnessing automorphism maps the rest of the subtree onto
an already-explored sibling).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .core import Hypergraph3, colex_rank, slot_count


@dataclass(frozen=True)
class CanonicalKey:
    """Label-invariant fingerprint: equal keys iff isomorphic graphs."""

    n: int
    bits: int

    def serialize(self) -> str:
        return f"{self.n}:{self.bits:x}"

    @classmethod
    def parse(cls, text: str) -> "CanonicalKey":
        n_str, _, hex_str = text.partition(":")
        return cls(int(n_str), int(hex_str, 16))


def _refine_colors(H: Hypergraph3) -> list[int]:
    """Iterated partition refinement; returns a color per vertex.

    Signature of v = (current color, sorted multiset of color pairs in the
    link of v); label-invariant by construction.
    """
    n = H.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, w in H.edges():
        adj[u].append((v, w))
        adj[v].append((u, w))
        adj[w].append((u, v))
    colors = [len(adj[v]) for v in range(n)]
    for _ in range(n):
        sigs = []
        for v in range(n):
            link = sorted(
                (colors[a], colors[b]) if colors[a] <= colors[b] else (colors[b], colors[a])
                for a, b in adj[v]
            )
            sigs.append((colors[v], tuple(link)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        newc = [order[s] for s in sigs]
        if newc == colors:
            break
        colors = newc
    return colors


_NO_JUMP = 1 << 30


def _canonical_bits(H: Hypergraph3) -> int:
    """Minimum relabeled edge bitset (slot-indexed int)."""
    n = H.n
    S = slot_count(n)
    m = H.edge_count
    if m == 0 or m == S:
        return H.bits
    obits = H.bits
    colors = _refine_colors(H)

    # position j draws its preimage from the unused vertices of minimum color
    best_key: list[int | None] = [None]
    best_prefix: list[int | None] = [None] * (n + 1)
    best_perm: list[tuple[int, ...] | None] = [None]
    auts: list[tuple[int, ...]] = []
    assigned: list[int] = []
    block_width = [comb(j, 2) for j in range(n)]

    def block_bits(pj: int) -> int:
        # bits of the slots whose largest canonical vertex is the current
        # position, in colex order, most significant first
        bits = 0
        for i2 in range(1, len(assigned)):
            b = assigned[i2]
            for i1 in range(i2):
                a = assigned[i1]
                x, y, z = sorted((a, b, pj))
                bits = (bits << 1) | (obits >> colex_rank(x, y, z) & 1)
        return bits

    def rec(depth: int, prefix: int, used: int) -> int:
        if depth == n:
            bk = best_key[0]
            if bk is None or prefix < bk:
                best_key[0] = prefix
                best_perm[0] = tuple(assigned)
                acc = 0
                saved = assigned[:]
                assigned.clear()
                for j, pj in enumerate(saved):
                    acc = (acc << block_width[j]) | block_bits(pj)
                    assigned.append(pj)
                    best_prefix[j + 1] = acc
                return _NO_JUMP
            if prefix == bk:
                bp = best_perm[0]
                g = [0] * n
                for i in range(n):
                    g[bp[i]] = assigned[i]
                if len(auts) < 128:
                    auts.append(tuple(g))
                div = next(i for i in range(n) if bp[i] != assigned[i])
                return div
            return _NO_JUMP

        unused = [v for v in range(n) if not (used >> v & 1)]
        mincol = min(colors[v] for v in unused)
        cand = [v for v in unused if colors[v] == mincol]

        if len(cand) > 1 and auts:
            # collapse candidates lying in one orbit of the recorded
            # automorphisms that fix the assigned prefix pointwise
            rep = {v: v for v in cand}

            def find(v: int) -> int:
                while rep[v] != v:
                    rep[v] = rep[rep[v]]
                    v = rep[v]
                return v

            for g in auts:
                if all(g[a] == a for a in assigned):
                    for v in cand:
                        w = g[v]
                        if w in rep:
                            rv, rw = find(v), find(w)
                            if rv != rw:
                                rep[max(rv, rw)] = min(rv, rw)
            cand = sorted({find(v) for v in cand})

        width = block_width[depth]
        for v in cand:
            bb = block_bits(v)
            npref = (prefix << width) | bb
            bp = best_prefix[depth + 1]
            if bp is not None and npref > bp:
                continue
            assigned.append(v)
            jump = rec(depth + 1, npref, used | (1 << v))
            assigned.pop()
            if jump < depth:
                return jump
        return _NO_JUMP

    rec(0, 0, 0)

    # materialize the key as a slot-indexed bitset
    perm = best_perm[0]
    inv = [0] * n
    for pos, orig in enumerate(perm):
        inv[orig] = pos
    return H.relabel(inv).bits


@lru_cache(maxsize=65536)
def _canonical_key_cached(n: int, bits: int) -> CanonicalKey:
    return CanonicalKey(n, _canonical_bits(Hypergraph3(n, bits)))


def canonical_key(H: Hypergraph3) -> CanonicalKey:
    """Deterministic label-invariant key; equal keys iff isomorphic."""
    return _canonical_key_cached(H.n, H.bits)


def are_isomorphic(H1: Hypergraph3, H2: Hypergraph3) -> bool:
    if H1.n != H2.n:
        raise ValueError(f"vertex counts differ: {H1.n} vs {H2.n}")
    if H1.bits == H2.bits:
        return True
    if H1.edge_count != H2.edge_count:
        return False
    if sorted(H1.degrees()) != sorted(H2.degrees()):
        return False
    return canonical_key(H1) == canonical_key(H2)


def dedupe(graphs: list[Hypergraph3]) -> list[Hypergraph3]:
    """Canonical representatives in first-occurrence order."""
    seen: set[tuple[int, int]] = set()
    out = []
    for g in graphs:
        key = canonical_key(g)
        kt = (key.n, key.bits)
        if kt not in seen:
            seen.add(kt)
            out.append(g)
    return out
