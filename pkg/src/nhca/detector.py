"""Obstruction search: forbidden induced subgraphs, end vertices and
left-right pairs."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .catalog import (
    CatalogEntry,
    Family,
    FamilyId,
    cycle_neighbourhood_members,
    gimbel_members,
    interval_members,
    make,
    nhca_members,
)
from .graph import (
    Graph,
    bits,
    components,
    find_induced_embedding,
    induced_subgraph,
    is_chordal,
    is_clique,
    is_induced_embedding,
    to_mask,
)


@dataclass(frozen=True)
class ObstructionWitness:
    family: FamilyId
    embedding: tuple[int, ...]  # host vertex of each pattern vertex, in pattern order

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.embedding

    def to_json(self) -> dict:
        return {"family": str(self.family), "k": self.family.k, "map": list(self.embedding)}

    @classmethod
    def from_json(cls, data: dict) -> ObstructionWitness:
        return cls(FamilyId.parse(data["family"]), tuple(data["map"]))

    def verify(self, host: Graph) -> bool:
        pattern = make(self.family).graph
        if len(self.embedding) != pattern.n:
            return False
        return is_induced_embedding(pattern, host, dict(enumerate(self.embedding)))


def _has_wheel(g: Graph) -> bool:
    # some vertex whose neighbourhood contains a hole
    return any(not is_chordal(induced_subgraph(g, bits(g.adj[v]))[0]) for v in range(g.n))


def _has_cycle_star(g: Graph) -> bool:
    # some vertex whose non-neighbourhood contains a hole
    return any(
        not is_chordal(induced_subgraph(g, bits(g.vertex_mask & ~g.adj[v] & ~(1 << v)))[0]) for v in range(g.n)
    )


def _search(g: Graph, entries: list[CatalogEntry]) -> ObstructionWitness | None:
    # cheap exact screens for the two infinite hole-based families
    skip = set()
    if any(e.family.family is Family.WHEEL for e in entries) and not _has_wheel(g):
        skip.add(Family.WHEEL)
    if any(e.family.family is Family.CYCLE_STAR for e in entries) and not _has_cycle_star(g):
        skip.add(Family.CYCLE_STAR)
    if any(e.family.family is Family.CYCLE for e in entries) and is_chordal(g):
        skip.add(Family.CYCLE)
    for entry in entries:
        if entry.family.family in skip:
            continue
        emb = find_induced_embedding(entry.graph, g)
        if emb is not None:
            return ObstructionWitness(entry.family, tuple(emb[v] for v in range(entry.graph.n)))
    return None


def find_nhca_obstruction(g: Graph) -> ObstructionWitness | None:
    """An induced minimal forbidden subgraph of the NHCA class, smallest
    family first, or ``None`` if ``g`` contains none."""
    return _search(g, nhca_members(g.n))


def find_interval_obstruction(g: Graph) -> ObstructionWitness | None:
    return _search(g, interval_members(g.n))


def find_cycle_neighbourhood_obstruction(g: Graph) -> ObstructionWitness | None:
    """Search only G1-G4, domino, wheels and C_k* -- the graphs whose absence
    forces every cycle neighbourhood to be a chordless path."""
    return _search(g, cycle_neighbourhood_members(g.n))


@dataclass(frozen=True)
class EndVertexVerdict:
    end: bool
    witness: ObstructionWitness | None = None

    def __bool__(self) -> bool:
        return self.end


def is_end_vertex(g: Graph, v: int, check_interval: bool = False) -> EndVertexVerdict:
    """Whether ``v`` can own the strictly leftmost left endpoint of an
    interval model of the interval graph ``g``; when it cannot, the witness
    is an F_s with its marked vertex on ``v``."""
    if check_interval:
        obstruction = find_interval_obstruction(g)
        if obstruction is not None:
            raise ValueError(f"not an interval graph: contains {obstruction.family}")
    for entry in gimbel_members(g.n):
        emb = find_induced_embedding(entry.graph, g, {entry.marked_vertex: v})
        if emb is not None:
            witness = ObstructionWitness(entry.family, tuple(emb[u] for u in range(entry.graph.n)))
            return EndVertexVerdict(False, witness)
    return EndVertexVerdict(True)


@dataclass(frozen=True)
class LeftRightVerdict:
    holds: bool
    violated_condition: int | None = None
    offending: tuple = field(default=())

    def __bool__(self) -> bool:
        return self.holds


@functools.lru_cache(maxsize=4096)
def _end_vertex_cached(g: Graph, v: int) -> EndVertexVerdict:
    return is_end_vertex(g, v)


@functools.lru_cache(maxsize=1024)
def _avoiding_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """For each vertex z, the component label of every vertex in G - N[z]
    (-1 inside N[z])."""
    out = []
    for z in range(g.n):
        label = [-1] * g.n
        allowed = g.vertex_mask & ~g.adj[z] & ~(1 << z)
        for c, comp in enumerate(components(g, allowed)):
            for v in comp:
                label[v] = c
        out.append(tuple(label))
    return tuple(out)


def _connected_within(g: Graph, a: int, b: int, allowed: int) -> list[int] | None:
    if not (allowed >> a & 1 and allowed >> b & 1):
        return None
    prev = {a: a}
    frontier = [a]
    while frontier:
        nxt = []
        for x in frontier:
            if x == b:
                path = [b]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return path[::-1]
            for y in bits(g.adj[x] & allowed):
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    return None


def check_left_right(g: Graph, A: Iterable[int], B: Iterable[int]) -> LeftRightVerdict:
    """Evaluate the four left-right conditions in order and report the
    first violated one, together with the vertices that violate it."""
    A, B = sorted(set(A)), sorted(set(B))

    for idx, side in enumerate((A, B)):
        if not is_clique(g, side):
            u, v = next((u, v) for u, v in itertools.combinations(side, 2) if not g.has_edge(u, v))
            return LeftRightVerdict(False, 1, (u, v))

    for v in sorted(set(A) | set(B)):
        verdict = _end_vertex_cached(g, v)
        if not verdict.end:
            return LeftRightVerdict(False, 2, (v, verdict.witness))

    # condition 3: no induced P4 x-u-v-y with u, v on the same side
    for side in (A, B):
        for u, v in itertools.permutations(side, 2):
            xs = g.adj[u] & ~g.adj[v] & ~(1 << v)
            ys = g.adj[v] & ~g.adj[u] & ~(1 << u)
            for x in bits(xs):
                rest = ys & ~g.adj[x] & ~(1 << x)
                if rest:
                    y = (rest & -rest).bit_length() - 1
                    return LeftRightVerdict(False, 3, (x, u, v, y))

    # condition 4: a chordless a,b-path missed entirely by some vertex z.
    # Such a path exists iff a and b are joined inside G - N[z]; a shortest
    # joining path is chordless.
    labels = _avoiding_components(g)
    for a in A:
        for b in B:
            for z in range(g.n):
                if labels[z][a] >= 0 and labels[z][a] == labels[z][b]:
                    allowed = g.vertex_mask & ~g.adj[z] & ~(1 << z)
                    path = _connected_within(g, a, b, allowed)
                    return LeftRightVerdict(False, 4, (a, b, z, tuple(path)))
    return LeftRightVerdict(True)


def is_left_right(g: Graph, A: Iterable[int], B: Iterable[int]) -> bool:
    return check_left_right(g, A, B).holds


__all__ = [
    "EndVertexVerdict",
    "LeftRightVerdict",
    "ObstructionWitness",
    "check_left_right",
    "find_cycle_neighbourhood_obstruction",
    "find_interval_obstruction",
    "find_nhca_obstruction",
    "is_end_vertex",
    "is_left_right",
    "to_mask",
]
