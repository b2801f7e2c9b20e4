"""Containment oracles for the named patterns and generic sub-isomorphism.

Named patterns: P (loose path, 3 edges / 7 vertices), C (triangle, 3 edges /
6 vertices), M (two disjoint edges), P2 (two edges sharing one vertex), and
P2uK3 (P2 plus one edge disjoint from it).  Each has a hand-written oracle
over edge bitmasks; the generic backtracking embedder handles arbitrary
pattern graphs and serves as the structural fallback for is_sub_iso.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from .core import MAX_N, Hypergraph3, TRIPLES, TRIPLE_VMASK, colex_rank

PATTERN_GRAPHS: dict[str, Hypergraph3] = {
    "P": Hypergraph3.from_edges(7, [(0, 1, 2), (2, 3, 4), (4, 5, 6)]),
    "C": Hypergraph3.from_edges(6, [(0, 1, 2), (2, 3, 4), (0, 4, 5)]),
    "M": Hypergraph3.from_edges(6, [(0, 1, 2), (3, 4, 5)]),
    "P2": Hypergraph3.from_edges(5, [(0, 1, 2), (2, 3, 4)]),
    "P2uK3": Hypergraph3.from_edges(8, [(0, 1, 2), (2, 3, 4), (5, 6, 7)]),
}

Witness = list[tuple[int, int, int]]


def _edge_masks(H: Hypergraph3) -> tuple[list[tuple[int, int, int]], list[int]]:
    edges = H.edges()
    return edges, [TRIPLE_VMASK[colex_rank(*e)] for e in edges]


def _find_m(H: Hypergraph3) -> Witness | None:
    edges, masks = _edge_masks(H)
    for i in range(len(edges)):
        mi = masks[i]
        for j in range(i + 1, len(edges)):
            if not mi & masks[j]:
                return [edges[i], edges[j]]
    return None


def _find_p2(H: Hypergraph3) -> Witness | None:
    edges, masks = _edge_masks(H)
    for i in range(len(edges)):
        mi = masks[i]
        for j in range(i + 1, len(edges)):
            if (mi & masks[j]).bit_count() == 1:
                return [edges[i], edges[j]]
    return None


def _find_p(H: Hypergraph3) -> Witness | None:
    # middle edge e2 with a pendant edge hooked on each of two of its
    # vertices; pendants must be disjoint from each other
    edges, masks = _edge_masks(H)
    m = len(edges)
    inc: list[list[int]] = [[] for _ in range(H.n)]
    for i, (u, v, w) in enumerate(edges):
        inc[u].append(i)
        inc[v].append(i)
        inc[w].append(i)
    for j in range(m):
        m2 = masks[j]
        for c in edges[j]:
            cbit = 1 << c
            firsts = [i for i in inc[c] if masks[i] & m2 == cbit]
            if not firsts:
                continue
            for e in edges[j]:
                if e == c:
                    continue
                ebit = 1 << e
                for k in inc[e]:
                    m3 = masks[k]
                    if m3 & m2 != ebit:
                        continue
                    for i in firsts:
                        if not masks[i] & m3:
                            w = sorted([edges[i], edges[j], edges[k]],
                                       key=lambda t: colex_rank(*t))
                            return w
    return None


def _find_c(H: Hypergraph3) -> Witness | None:
    edges, masks = _edge_masks(H)
    m = len(edges)
    for i in range(m):
        mi = masks[i]
        for j in range(i + 1, m):
            mj = masks[j]
            if (mi & mj).bit_count() != 1:
                continue
            mij = mi | mj
            for k in range(j + 1, m):
                mk = masks[k]
                if (
                    (mi & mk).bit_count() == 1
                    and (mj & mk).bit_count() == 1
                    and (mij | mk).bit_count() == 6
                ):
                    return [edges[i], edges[j], edges[k]]
    return None


def _find_p2k3(H: Hypergraph3) -> Witness | None:
    edges, masks = _edge_masks(H)
    m = len(edges)
    for i in range(m):
        mi = masks[i]
        for j in range(i + 1, m):
            if (mi & masks[j]).bit_count() != 1:
                continue
            u = mi | masks[j]
            for k in range(m):
                if not masks[k] & u:
                    w = sorted([edges[i], edges[j], edges[k]],
                               key=lambda t: colex_rank(*t))
                    return w
    return None


_ORACLES = {"P": _find_p, "C": _find_c, "M": _find_m, "P2": _find_p2, "P2uK3": _find_p2k3}


def find_copy(H: Hypergraph3, pattern: str | Hypergraph3) -> Witness | None:
    """A copy of the pattern in H as a colex-sorted edge list, or None."""
    if isinstance(pattern, str):
        oracle = _ORACLES.get(pattern)
        if oracle is None:
            raise ValueError(f"unknown pattern {pattern!r}")
        return oracle(H)
    mapping = embed(pattern, H)
    if mapping is None:
        return None
    w = [tuple(sorted((mapping[u], mapping[v], mapping[w_]) ))
         for u, v, w_ in pattern.edges()]
    return sorted(w, key=lambda t: colex_rank(*t))


def contains(H: Hypergraph3, pattern: str | Hypergraph3) -> bool:
    """True iff H has a (not necessarily induced) copy of the pattern."""
    return find_copy(H, pattern) is not None


def is_f_free(H: Hypergraph3, family: tuple[str, ...]) -> bool:
    return all(find_copy(H, p) is None for p in family)


# -- generic embedding ---------------------------------------------------


def embed(pattern: Hypergraph3, host: Hypergraph3) -> dict[int, int] | None:
    """Injective vertex map sending every pattern edge onto a host edge.

    Isolated pattern vertices only need distinct images, so they are handled
    by a room check rather than the backtracking.
    """
    pedges = pattern.edges()
    pdeg = pattern.degrees()
    active = [v for v in range(pattern.n) if pdeg[v] > 0]
    if pattern.n > host.n:
        return None
    if len(pedges) > host.edge_count:
        return None
    hdeg = host.degrees()
    pd = sorted((pdeg[v] for v in active), reverse=True)
    hd = sorted(hdeg, reverse=True)
    if any(p > h for p, h in zip(pd, hd)):
        return None

    # order active vertices so each one closes pattern edges early
    order: list[int] = []
    placed: set[int] = set()
    rest = set(active)
    while rest:
        best, best_score = None, (-1, -1)
        for v in rest:
            closing = sum(1 for e in pedges if v in e and all(u in placed or u == v for u in e))
            touching = sum(1 for e in pedges if v in e and any(u in placed for u in e))
            score = (closing, touching + pdeg[v] / 100.0)
            if score > best_score:
                best, best_score = v, score
        order.append(best)
        placed.add(best)
        rest.remove(best)

    # edges checkable once their last vertex (by order) is placed
    pos = {v: i for i, v in enumerate(order)}
    checks: list[list[tuple[int, int, int]]] = [[] for _ in order]
    for e in pedges:
        checks[max(pos[v] for v in e)].append(e)

    mapping: dict[int, int] = {}
    used = [False] * host.n

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        need = pdeg[v]
        for hv in range(host.n):
            if used[hv] or hdeg[hv] < need:
                continue
            mapping[v] = hv
            ok = all(
                host.has_edge((mapping[a], mapping[b], mapping[c]))
                for a, b, c in checks[i]
            )
            if ok:
                used[hv] = True
                if rec(i + 1):
                    return True
                used[hv] = False
            del mapping[v]
        return False

    if not rec(0):
        return None
    # park isolated pattern vertices on leftover host vertices
    free = iter(v for v in range(host.n) if not used[v])
    for v in range(pattern.n):
        if v not in mapping:
            mapping[v] = next(free)
    return mapping


# -- structural host predicates ------------------------------------------


def common_vertex(H: Hypergraph3) -> int | None:
    """A vertex lying in every edge, if one exists (n-1 for the empty graph)."""
    mask = (1 << H.n) - 1
    for r in H.edge_ranks():
        mask &= TRIPLE_VMASK[r]
        if not mask:
            return None
    return mask.bit_length() - 1


def in_star(H: Hypergraph3) -> bool:
    """True iff some vertex lies in every edge (vacuously true when empty)."""
    return common_vertex(H) is not None


def _pack(sizes: list[int], bins: list[int]) -> bool:
    """Can the multiset `sizes` be packed into bins of the given capacities?"""
    if not sizes:
        return True
    sizes = sorted(sizes, reverse=True)
    bins = sorted(bins, reverse=True)

    def rec(i: int, caps: tuple[int, ...]) -> bool:
        if i == len(sizes):
            return True
        s = sizes[i]
        tried = set()
        for b, cap in enumerate(caps):
            if cap >= s and cap not in tried:
                tried.add(cap)
                nc = caps[:b] + (cap - s,) + caps[b + 1:]
                if rec(i + 1, tuple(sorted(nc, reverse=True))):
                    return True
        return False

    return rec(0, tuple(bins))


def _link_components(pairs: list[tuple[int, int]]) -> list[int]:
    """Component vertex counts of a 2-graph given as an edge list."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    sizes: dict[int, int] = {}
    for v in list(parent):
        sizes[find(v)] = sizes.get(find(v), 0) + 1
    return list(sizes.values())


def in_comet(H: Hypergraph3) -> bool:
    """True iff H fits in a comet: a vertex x and a 3-set T with every edge
    containing x (pairs either inside T or avoiding T) or equal to T."""
    if H.edge_count == 0:
        return H.n >= 1
    edges, masks = _edge_masks(H)
    for x in range(H.n):
        xbit = 1 << x
        off = [i for i in range(len(edges)) if not masks[i] & xbit]
        if len(off) > 1:
            continue
        if off:
            tmask = masks[off[0]]
            ok = True
            for i in range(len(edges)):
                if i == off[0]:
                    continue
                c = ((masks[i] & ~xbit) & tmask).bit_count()
                if c == 1:
                    ok = False
                    break
            if ok:
                return True
        else:
            # pure star at x: link components must split into a 3-block
            # (the head) and an (n-4)-block
            pairs = []
            for i, (u, v, w) in enumerate(edges):
                p = [a for a in (u, v, w) if a != x]
                pairs.append((p[0], p[1]))
            if _pack(_link_components(pairs), [3, max(H.n - 4, 0)]):
                return True
    return False


def _as_clique_union(H: Hypergraph3) -> list[int] | None:
    """If every component of H induces a complete 3-graph, their sizes."""
    sizes = []
    for compo in H.components():
        k = len(compo)
        sub = H.induced(compo) if k >= 3 else None
        expected = comb(k, 3)
        if k >= 3 and sub.edge_count != expected:
            return None
        sizes.append(k)
    return sizes


def _is_full_star(H: Hypergraph3) -> bool:
    return H.edge_count == comb(H.n - 1, 2) and in_star(H)


def _is_full_comet(H: Hypergraph3) -> bool:
    return H.n >= 7 and H.edge_count == 4 + comb(H.n - 4, 2) and in_comet(H)


def _components_fit_in_clique_plus_star(H: Hypergraph3, clique: int, star_n: int) -> bool:
    """Does H fit in K_clique ∪ S_star_n (vertex-disjoint)?"""
    edged = []
    for compo in H.components():
        if len(compo) == 1:
            continue
        edged.append(H.induced(compo))
    # at most one edged component may play the star side, and it must be a star
    if _pack([g.n for g in edged], [clique]):
        return True
    for i, g in enumerate(edged):
        if g.n <= star_n and in_star(g):
            others = [h.n for j, h in enumerate(edged) if j != i]
            if _pack(others, [clique]):
                return True
    return False


def is_sub_iso(H: Hypergraph3, host: Hypergraph3) -> bool:
    """True iff some injective relabeling maps E(H) into E(host).

    The smaller vertex set is padded with isolated vertices.  Named host
    shapes (full star, union of cliques, full comet, clique plus star) get
    O(n·m) structural checks; anything else goes to the generic embedder.
    """
    n = max(H.n, host.n)
    if H.n < n:
        H = Hypergraph3(n, H.bits)
    if host.n < n:
        host = Hypergraph3(n, host.bits)
    if H.edge_count > host.edge_count:
        return False
    if host.edge_count == comb(n, 3):
        return True
    cliques = _as_clique_union(host)
    if cliques is not None:
        edged = [len(c) for c in H.components() if len(c) > 1]
        return _pack(edged, cliques)
    comps = [c for c in host.components() if len(c) > 1]
    if len(comps) == 1 and len(comps[0]) == n:
        g = host
        if _is_full_star(g):
            return in_star(H)
        if _is_full_comet(g):
            return in_comet(H)
    ks = _clique_plus_star_shape(host)
    if ks is not None:
        return _components_fit_in_clique_plus_star(H, ks[0], ks[1])
    return embed(H, host) is not None


def _clique_plus_star_shape(H: Hypergraph3) -> tuple[int, int] | None:
    """Detect K_a ∪ S_b hosts (two components: a full clique and a full star)."""
    comps = [c for c in H.components() if len(c) > 1]
    if len(comps) != 2:
        return None
    g1, g2 = (H.induced(c) for c in comps)
    for a, b in ((g1, g2), (g2, g1)):
        if a.edge_count == comb(a.n, 3) and _is_full_star(b):
            return a.n, b.n
    return None


# -- copies of a pattern inside K_n (for the search kernels) --------------


@lru_cache(maxsize=None)
def _base_copies(name: str) -> tuple[tuple[tuple[int, int, int], ...], ...]:
    """All copies of the pattern on exactly its own vertex count, labeled."""
    g = PATTERN_GRAPHS[name]
    k = g.n
    pedges = g.edges()
    seen = set()
    for perm in permutations(range(k)):
        key = frozenset(tuple(sorted((perm[a], perm[b], perm[c]))) for a, b, c in pedges)
        seen.add(key)
    return tuple(tuple(sorted(fs)) for fs in sorted(seen))


@lru_cache(maxsize=None)
def pattern_copies(name: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Every copy of the named pattern in K_n, as sorted tuples of slot ranks.

    All named patterns have full vertex support, so copies are enumerated per
    vertex subset without duplication.
    """
    k = PATTERN_GRAPHS[name].n
    if n < k:
        return ()
    base = _base_copies(name)
    out = []
    for combo in combinations(range(n), k):
        for cp in base:
            out.append(tuple(sorted(
                colex_rank(combo[u], combo[v], combo[w]) for u, v, w in cp
            )))
    return tuple(out)
