"""Generators for the named 3-graphs, with size formulas and qualification.

Labeling conventions (frozen so golden files stay stable):
  S(n)      center 0, leaves 1..n-1
  Co(n)     comet: center 0, head {1,2,3}, star leaves 4..n-1
  Ro(n)     rocket: star center 0 with leaves 5..n-1, extra vertices a,b,c,d
            = 1,2,3,4 and edges {0,1,2}, {1,2,3}, {1,2,4}
  G1(n)     x,y,z = 0,1,2 and v = 3: edge {0,1,2} plus every triple through 3
            meeting {0,1,2}
  G2(n)     x,y,z = 0,1,2: edge {0,1,2} plus every triple meeting {0,1,2} in
            exactly two vertices
  G3(n)     x,y1,y2,z1,z2 = 0,1,2,3,4: all triples inside {0..4} except
            {1,2,3} and {1,2,4}, plus {0,3,u} and {0,4,u} for u >= 5
  K5p2      K5 on 0..4 with a,b = 0,1, extra c,d = 5,6 and edges {0,1,5},{0,1,6}
  K-2e      variant 1/2/3: the two missing triples share 2/1/0 vertices
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .core import Hypergraph3
from . import patterns


@dataclass(frozen=True)
class NamedConstruction:
    """A built catalog graph with its distinguished vertices."""

    tag: str
    n: int
    variant: int | None
    graph: Hypergraph3
    roles: dict[str, tuple[int, ...]] = field(default_factory=dict)


@dataclass(frozen=True)
class CatalogEntry:
    tag: str
    n_min: int
    n_max: int
    size_formula: str
    fixed_n: int | None = None
    variants: tuple[int, ...] = ()

    def valid_n(self) -> range:
        return range(self.n_min, self.n_max + 1)


def _clique_edges(verts: list[int]):
    return combinations(verts, 3)


def _star_edges(center: int, leaves: list[int]):
    for u, v in combinations(leaves, 2):
        yield (center, u, v)


def _build_k(n: int) -> NamedConstruction:
    return NamedConstruction("K", n, None, Hypergraph3.complete(n))


def _build_k_minus_e(n: int) -> NamedConstruction:
    g = Hypergraph3.complete(n).without_edge((0, 1, 2))
    return NamedConstruction("K-e", n, None, g, {"missing": (0, 1, 2)})


MISSING_PAIRS = {1: ((0, 1, 2), (0, 1, 3)), 2: ((0, 1, 2), (2, 3, 4)), 3: ((0, 1, 2), (3, 4, 5))}


def _build_k_minus_2e(n: int, variant: int) -> NamedConstruction:
    e1, e2 = MISSING_PAIRS[variant]
    g = Hypergraph3.complete(n).without_edge(e1).without_edge(e2)
    return NamedConstruction("K-2e", n, variant, g)


def _build_s(n: int) -> NamedConstruction:
    g = Hypergraph3.from_edges(n, _star_edges(0, list(range(1, n))))
    return NamedConstruction("S", n, None, g, {"center": (0,)})


def _build_co(n: int) -> NamedConstruction:
    edges = list(_clique_edges([0, 1, 2, 3])) + list(_star_edges(0, list(range(4, n))))
    g = Hypergraph3.from_edges(n, edges)
    return NamedConstruction("Co", n, None, g, {"center": (0,), "head": (1, 2, 3)})


def _build_ro(n: int) -> NamedConstruction:
    edges = [(0, 1, 2), (1, 2, 3), (1, 2, 4)] + list(_star_edges(0, list(range(5, n))))
    g = Hypergraph3.from_edges(n, edges)
    return NamedConstruction("Ro", n, None, g, {"center": (0,), "ab": (1, 2), "cd": (3, 4)})


def _build_g1(n: int) -> NamedConstruction:
    edges = [(0, 1, 2)]
    for a, b in combinations(range(n), 2):
        if 3 in (a, b):
            continue
        if a in (0, 1, 2) or b in (0, 1, 2):
            edges.append(tuple(sorted((3, a, b))))
    g = Hypergraph3.from_edges(n, edges)
    return NamedConstruction("G1", n, None, g, {"xyz": (0, 1, 2), "v": (3,)})


def _build_g2(n: int) -> NamedConstruction:
    edges = [(0, 1, 2)]
    for a, b in combinations((0, 1, 2), 2):
        for u in range(3, n):
            edges.append(tuple(sorted((a, b, u))))
    g = Hypergraph3.from_edges(n, edges)
    return NamedConstruction("G2", n, None, g, {"xyz": (0, 1, 2)})


def _build_g3(n: int) -> NamedConstruction:
    edges = [e for e in _clique_edges([0, 1, 2, 3, 4]) if e not in ((1, 2, 3), (1, 2, 4))]
    for u in range(5, n):
        edges.append((0, 3, u))
        edges.append((0, 4, u))
    g = Hypergraph3.from_edges(n, edges)
    return NamedConstruction("G3", n, None, g, {"x": (0,), "y": (1, 2), "z": (3, 4)})


def _build_k5p2(n: int) -> NamedConstruction:
    edges = list(_clique_edges([0, 1, 2, 3, 4])) + [(0, 1, 5), (0, 1, 6)]
    g = Hypergraph3.from_edges(7, edges)
    return NamedConstruction("K5p2", 7, None, g, {"ab": (0, 1), "cd": (5, 6)})


def _build_k6uk(n: int) -> NamedConstruction:
    g = Hypergraph3.complete(6).disjoint_union(Hypergraph3.complete(n - 6))
    return NamedConstruction("K6uK", n, None, g)


def _build_2k6uk1(n: int) -> NamedConstruction:
    g = (
        Hypergraph3.complete(6)
        .disjoint_union(Hypergraph3.complete(6))
        .disjoint_union(Hypergraph3(1))
    )
    return NamedConstruction("2K6uK1", 13, None, g)


def _build_k6us(n: int) -> NamedConstruction:
    g = Hypergraph3.complete(6).disjoint_union(_build_s(n - 6).graph)
    return NamedConstruction("K6uS", n, None, g, {"center": (6,)})


def _build_k4us(n: int) -> NamedConstruction:
    g = Hypergraph3.complete(4).disjoint_union(_build_s(n - 4).graph)
    return NamedConstruction("K4uS", n, None, g, {"center": (4,)})


def _build_bip6x6(n: int) -> NamedConstruction:
    edges = [
        e
        for e in combinations(range(12), 3)
        if any(v < 6 for v in e) and any(v >= 6 for v in e)
    ]
    g = Hypergraph3.from_edges(12, edges)
    return NamedConstruction("Bip6x6", 12, None, g, {"sides": (5, 11)})


CATALOG: dict[str, CatalogEntry] = {
    "K": CatalogEntry("K", 3, 16, "C(n,3)"),
    "K-e": CatalogEntry("K-e", 4, 16, "C(n,3)-1"),
    "K-2e": CatalogEntry("K-2e", 6, 16, "C(n,3)-2", variants=(1, 2, 3)),
    "S": CatalogEntry("S", 3, 16, "C(n-1,2)"),
    "Co": CatalogEntry("Co", 7, 16, "4+C(n-4,2)"),
    "Ro": CatalogEntry("Ro", 7, 16, "3+C(n-5,2)"),
    "G1": CatalogEntry("G1", 7, 16, "3n-8"),
    "G2": CatalogEntry("G2", 7, 16, "3n-8"),
    "G3": CatalogEntry("G3", 7, 16, "2n-2"),
    "K5p2": CatalogEntry("K5p2", 7, 7, "12", fixed_n=7),
    "K6uK": CatalogEntry("K6uK", 7, 12, "20+C(n-6,3)"),
    "2K6uK1": CatalogEntry("2K6uK1", 13, 13, "40", fixed_n=13),
    "K6uS": CatalogEntry("K6uS", 10, 16, "20+C(n-7,2)"),
    "K4uS": CatalogEntry("K4uS", 8, 16, "4+C(n-5,2)"),
    "Bip6x6": CatalogEntry("Bip6x6", 12, 12, "180", fixed_n=12),
}

_BUILDERS = {
    "K": _build_k,
    "K-e": _build_k_minus_e,
    "S": _build_s,
    "Co": _build_co,
    "Ro": _build_ro,
    "G1": _build_g1,
    "G2": _build_g2,
    "G3": _build_g3,
    "K5p2": _build_k5p2,
    "K6uK": _build_k6uk,
    "2K6uK1": _build_2k6uk1,
    "K6uS": _build_k6us,
    "K4uS": _build_k4us,
    "Bip6x6": _build_bip6x6,
}


def formula_value(tag: str, n: int) -> int:
    return {
        "K": comb(n, 3),
        "K-e": comb(n, 3) - 1,
        "K-2e": comb(n, 3) - 2,
        "S": comb(n - 1, 2),
        "Co": 4 + comb(n - 4, 2),
        "Ro": 3 + comb(n - 5, 2),
        "G1": 3 * n - 8,
        "G2": 3 * n - 8,
        "G3": 2 * n - 2,
        "K5p2": 12,
        "K6uK": 20 + comb(n - 6, 3),
        "2K6uK1": 40,
        "K6uS": 20 + comb(n - 7, 2),
        "K4uS": 4 + comb(n - 5, 2),
        "Bip6x6": 180,
    }[tag]


def build(tag: str, n: int, variant: int | None = None) -> Hypergraph3:
    """Build a catalog graph; raises for n outside the tag's validity range."""
    return build_named(tag, n, variant).graph


def build_named(tag: str, n: int, variant: int | None = None) -> NamedConstruction:
    entry = CATALOG.get(tag)
    if entry is None:
        raise ValueError(f"unknown construction tag {tag!r}")
    if entry.fixed_n is not None and n != entry.fixed_n:
        raise ValueError(f"{tag} is only defined for n={entry.fixed_n}")
    if not entry.n_min <= n <= entry.n_max:
        raise ValueError(f"{tag} needs n in [{entry.n_min},{entry.n_max}], got {n}")
    if tag == "K-2e":
        if variant not in (1, 2, 3):
            raise ValueError("K-2e needs variant 1, 2, or 3")
        return _build_k_minus_2e(n, variant)
    if variant is not None:
        raise ValueError(f"{tag} takes no variant")
    return _BUILDERS[tag](n)


def catalog() -> list[CatalogEntry]:
    """All 15 catalog entries, sorted by tag."""
    return [CATALOG[t] for t in sorted(CATALOG)]


#: tags whose builds are NOT P-free in general (K-family for n >= 7 contains
#: P outright; the complete bipartite 6x6 graph also contains P)
NOT_P_FREE = {"K", "K-e", "K-2e", "Bip6x6"}


@dataclass(frozen=True)
class QualificationReport:
    """Outcome of checking a construction as an order-s extremal candidate."""

    tag: str
    n: int
    order: int
    edge_count: int
    formula_count: int
    p_free: bool
    host_checks: tuple[tuple[str, bool], ...]  # (host label, contained?)

    @property
    def size_ok(self) -> bool:
        return self.edge_count == self.formula_count

    @property
    def ok(self) -> bool:
        return self.p_free and self.size_ok and not any(c for _, c in self.host_checks)


def qualify(tag: str, n: int, order: int, variant: int | None = None,
            registry=None) -> QualificationReport:
    """Check a construction against the order-s qualification for (n, P):
    P-free, not inside any lower-order extremal host, size matches formula.

    Lower-order hosts come from the fact registry (paper-asserted formulas
    unless upgraded by search).
    """
    if registry is None:
        from .turan import default_registry

        registry = default_registry()
    g = build(tag, n, variant)
    checks = []
    for k in range(1, order):
        fact = registry.get(registry.claim(n=n, forbid=("P",), order=k))
        if fact is None or fact.family is None:
            raise LookupError(f"registry lacks the order-{k} extremal family at n={n}")
        for label, host in fact.family:
            checks.append((label, patterns.is_sub_iso(g, host)))
    return QualificationReport(
        tag=tag,
        n=n,
        order=order,
        edge_count=g.edge_count,
        formula_count=formula_value(tag, n),
        p_free=patterns.find_copy(g, "P") is None,
        host_checks=tuple(checks),
    )
