"""Minimal forbidden induced subgraphs for interval graphs, for normal Helly
circular-arc graphs, and the end-vertex obstructions F_s."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .graph import Graph, GraphError, complement, cycle_graph, induced_subgraph


class Family(enum.Enum):
    CYCLE = "cycle"
    CYCLE_STAR = "cycle-star"
    WHEEL = "wheel"
    NET = "net"
    TENT = "tent"
    BIPARTITE_CLAW = "bipartite-claw"
    UMBRELLA = "umbrella"
    G1 = "g1"
    G2 = "g2"
    G3 = "g3"
    G4 = "g4"
    DOMINO = "domino"
    C6_COMPLEMENT = "c6-complement"
    GIMBEL = "gimbel"


# smallest admissible parameter for the parameterised families
MIN_PARAM = {
    Family.CYCLE: 4,
    Family.CYCLE_STAR: 4,
    Family.WHEEL: 4,
    Family.NET: 2,
    Family.TENT: 3,
    Family.GIMBEL: 0,
}


@dataclass(frozen=True, order=True)
class FamilyId:
    family: Family
    k: int | None = None

    def __post_init__(self) -> None:
        lo = MIN_PARAM.get(self.family)
        if lo is None:
            if self.k is not None:
                raise GraphError(f"{self.family.value} takes no parameter")
        elif self.k is None or self.k < lo:
            raise GraphError(f"{self.family.value} needs an integer parameter >= {lo}, got {self.k}")

    def __str__(self) -> str:
        return self.family.value if self.k is None else f"{self.family.value}:{self.k}"

    @classmethod
    def parse(cls, spec: str) -> FamilyId:
        name, _, param = spec.strip().partition(":")
        try:
            family = Family(name.lower())
        except ValueError:
            raise GraphError(f"unknown family {name!r}") from None
        if param:
            try:
                k = int(param)
            except ValueError:
                raise GraphError(f"bad parameter {param!r}") from None
        else:
            k = None
        return cls(family, k)

    def order(self) -> int:
        """Number of vertices of the family member."""
        f, k = self.family, self.k
        if f is Family.CYCLE:
            return k
        if f in (Family.CYCLE_STAR, Family.WHEEL):
            return k + 1
        if f is Family.NET:
            return k + 4
        if f is Family.TENT:
            return k + 3
        if f is Family.GIMBEL:
            return {0: 5, 1: 6}.get(k, k + 3)
        return FIXED_ORDER[f]


FIXED_ORDER = {
    Family.BIPARTITE_CLAW: 7,
    Family.UMBRELLA: 7,
    Family.G1: 5,
    Family.G2: 6,
    Family.G3: 6,
    Family.G4: 7,
    Family.DOMINO: 6,
    Family.C6_COMPLEMENT: 6,
}


@dataclass(frozen=True)
class CatalogEntry:
    family: FamilyId
    graph: Graph
    marked_vertex: int | None = None


def _wheel(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)])


def _cycle_star(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(i, (i + 1) % k) for i in range(k)])


def _net(k: int) -> Graph:
    # path p0..pk = 0..k; u = k+1 sees p0..p_{k-1}; w = k+2 pendant on p0;
    # y = k+3 pendant on u
    u, w, y = k + 1, k + 2, k + 3
    edges = [(i, i + 1) for i in range(k)]
    edges += [(u, i) for i in range(k)]
    edges += [(w, 0), (y, u)]
    return Graph.from_edges(k + 4, edges)


def _tent(k: int) -> Graph:
    # path p1..p_{k-1} = 0..k-2; c = k-1 sees p1..p_{k-2}; t1 = k pendant on c;
    # t2 = k+1 sees c and p1; hub h = k+2 sees everything except t2
    c, t1, t2, h = k - 1, k, k + 1, k + 2
    edges = [(i, i + 1) for i in range(k - 2)]
    edges += [(c, i) for i in range(k - 2)]
    edges += [(t1, c), (t2, c), (t2, 0)]
    edges += [(h, v) for v in range(k + 1)]
    return Graph.from_edges(k + 3, edges)


def _cycle_plus_pair(n: int, gap: int) -> Graph:
    # C_n on 0..n-1, adjacent pair u = n, v = n+1 with u ~ v_0 and v ~ v_gap
    u, v = n, n + 1
    edges = [(i, (i + 1) % n) for i in range(n)] + [(u, v), (u, 0), (v, gap)]
    return Graph.from_edges(n + 2, edges)


def _g1() -> Graph:
    # path a-b-c with w1, w2 adjacent to a and c only
    return Graph.from_edges(5, [(0, 1), (1, 2), (3, 0), (3, 2), (4, 0), (4, 2)])


def _g3() -> Graph:
    # C5 plus a vertex adjacent to v0, v1 and v3 (distance two from both)
    return Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (5, 1), (5, 3)])


def _bipartite_claw() -> Graph:
    # centre 0, legs 0-1-2, 0-3-4, 0-5-6
    return Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def _umbrella() -> Graph:
    # path p1..p5 = 0..4, h = 5 sees all p_i, t = 6 sees p3 only
    edges = [(i, i + 1) for i in range(4)] + [(5, i) for i in range(5)] + [(6, 2)]
    return Graph.from_edges(7, edges)


def _gimbel(s: int) -> tuple[Graph, int]:
    if s == 0:
        return Graph.from_edges(5, [(i, i + 1) for i in range(4)]), 2
    if s == 1:
        return Graph.from_edges(6, [(i, i + 1) for i in range(4)] + [(5, 2)]), 5
    # a = 0, x2..x_{s+1} = 1..s (chordless path a, x2, ..., x_{s+1}),
    # y2 = s+1 sees a, x2..x_s and y1; y1 = s+2 sees y2 only
    y2, y1 = s + 1, s + 2
    edges = [(i, i + 1) for i in range(s)]
    edges += [(y2, i) for i in range(s)]
    edges += [(y1, y2)]
    return Graph.from_edges(s + 3, edges), 0


_FIXED: dict[Family, Callable[[], Graph]] = {
    Family.BIPARTITE_CLAW: _bipartite_claw,
    Family.UMBRELLA: _umbrella,
    Family.G1: _g1,
    Family.G2: lambda: _cycle_plus_pair(4, 2),
    Family.G3: _g3,
    Family.G4: lambda: _cycle_plus_pair(5, 2),
    Family.DOMINO: lambda: _cycle_plus_pair(4, 1),
    Family.C6_COMPLEMENT: lambda: complement(cycle_graph(6)),
}


def make(fid: FamilyId | str) -> CatalogEntry:
    if isinstance(fid, str):
        fid = FamilyId.parse(fid)
    f, k = fid.family, fid.k
    if f is Family.CYCLE:
        return CatalogEntry(fid, cycle_graph(k))
    if f is Family.CYCLE_STAR:
        return CatalogEntry(fid, _cycle_star(k))
    if f is Family.WHEEL:
        return CatalogEntry(fid, _wheel(k))
    if f is Family.NET:
        return CatalogEntry(fid, _net(k))
    if f is Family.TENT:
        return CatalogEntry(fid, _tent(k))
    if f is Family.GIMBEL:
        g, marked = _gimbel(k)
        return CatalogEntry(fid, g, marked)
    return CatalogEntry(fid, _FIXED[f]())


NHCA_FIXED = (
    Family.BIPARTITE_CLAW,
    Family.UMBRELLA,
    Family.G1,
    Family.G2,
    Family.G3,
    Family.G4,
    Family.DOMINO,
    Family.C6_COMPLEMENT,
)
NHCA_PARAMETERISED = (Family.NET, Family.TENT, Family.WHEEL, Family.CYCLE_STAR)
INTERVAL_FIXED = (Family.BIPARTITE_CLAW, Family.UMBRELLA)
INTERVAL_PARAMETERISED = (Family.CYCLE, Family.NET, Family.TENT)

# families whose absence makes every vertex's cycle neighbourhood a path
CYCLE_NEIGHBOURHOOD_FIXED = (Family.G1, Family.G2, Family.G3, Family.G4, Family.DOMINO)
CYCLE_NEIGHBOURHOOD_PARAMETERISED = (Family.WHEEL, Family.CYCLE_STAR)


def _members(fixed, parameterised, max_n: int) -> list[CatalogEntry]:
    ids = [FamilyId(f) for f in fixed]
    for f in parameterised:
        # order is not monotone in k for F_s (F_1 is larger than F_2), but
        # it never drops below k
        ids.extend(FamilyId(f, k) for k in range(MIN_PARAM[f], max_n + 1))
    ids = [i for i in ids if i.order() <= max_n]
    # smallest graphs first; listing order breaks ties
    rank = {f: r for r, f in enumerate(list(fixed) + list(parameterised))}
    ids.sort(key=lambda i: (i.order(), i.k is not None, rank[i.family], i.k or 0))
    return [make(i) for i in ids]


def nhca_members(max_n: int) -> list[CatalogEntry]:
    """Minimal forbidden induced subgraphs of the NHCA class with at most
    ``max_n`` vertices."""
    return _members(NHCA_FIXED, NHCA_PARAMETERISED, max_n)


def interval_members(max_n: int) -> list[CatalogEntry]:
    """Minimal forbidden induced subgraphs of the interval graphs with at
    most ``max_n`` vertices."""
    return _members(INTERVAL_FIXED, INTERVAL_PARAMETERISED, max_n)


def cycle_neighbourhood_members(max_n: int) -> list[CatalogEntry]:
    return _members(CYCLE_NEIGHBOURHOOD_FIXED, CYCLE_NEIGHBOURHOOD_PARAMETERISED, max_n)


def gimbel_members(max_n: int) -> list[CatalogEntry]:
    return _members((), (Family.GIMBEL,), max_n)


class Inconclusive(Exception):
    pass


def validate_minimality(entry: CatalogEntry, class_oracle: Callable[[Graph], bool | None]) -> bool:
    """True iff the entry's graph is outside the class while every
    one-vertex-deleted induced subgraph is inside.

    ``class_oracle`` returns ``None`` when it cannot decide; that surfaces as
    :class:`Inconclusive` rather than ``False``.
    """

    def member(h: Graph) -> bool:
        verdict = class_oracle(h)
        if verdict is None:
            raise Inconclusive(str(entry.family))
        return verdict

    g = entry.graph
    if member(g):
        return False
    for v in range(g.n):
        sub, _ = induced_subgraph(g, [u for u in range(g.n) if u != v])
        if not member(sub):
            return False
    return True
