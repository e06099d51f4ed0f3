"""Interval and circular-arc models on integer coordinates, their
verification, and anchored (left-right) interval model construction."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bits, maximal_cliques, to_mask


@dataclass(frozen=True)
class IntervalModel:
    """Closed integer intervals ``[l, r]``, one per vertex."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for v, (l, r) in enumerate(self.intervals):
            if l > r:
                raise GraphError(f"interval of vertex {v} has l > r: [{l}, {r}]")

    def __len__(self) -> int:
        return len(self.intervals)

    def to_json(self) -> dict:
        return {"intervals": [list(iv) for iv in self.intervals]}

    @classmethod
    def from_json(cls, data: dict | str) -> IntervalModel:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple((int(l), int(r)) for l, r in data["intervals"]))


@dataclass(frozen=True)
class ArcModel:
    """Closed clockwise arcs on the discrete circle ``{0, ..., M-1}``.

    The arc ``(s, e)`` is the point set ``s, s+1, ..., e`` taken mod ``M``;
    ``e == s - 1 (mod M)`` is the full circle.
    """

    M: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.M <= 0:
            raise GraphError("circumference must be positive")
        for v, (s, e) in enumerate(self.arcs):
            if not (0 <= s < self.M and 0 <= e < self.M):
                raise GraphError(f"arc of vertex {v} has an endpoint outside 0..{self.M - 1}")

    def __len__(self) -> int:
        return len(self.arcs)

    def points(self, v: int) -> int:
        """Bitmask of the circle points covered by the arc of ``v``."""
        s, e = self.arcs[v]
        if s <= e:
            return ((1 << (e + 1)) - 1) & ~((1 << s) - 1)
        return ((1 << self.M) - 1) & ~((1 << s) - 1) | ((1 << (e + 1)) - 1)

    def to_json(self) -> dict:
        return {"M": self.M, "arcs": [list(a) for a in self.arcs]}

    @classmethod
    def from_json(cls, data: dict | str) -> ArcModel:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["M"]), tuple((int(s), int(e)) for s, e in data["arcs"]))

    @classmethod
    def from_interval_model(cls, model: IntervalModel) -> ArcModel:
        """Wrap an interval model onto a circle, leaving point 0 uncovered."""
        if not model.intervals:
            return cls(1, ())
        lo = min(l for l, _ in model.intervals)
        hi = max(r for _, r in model.intervals)
        shift = 1 - lo
        return cls(hi - lo + 2, tuple((l + shift, r + shift) for l, r in model.intervals))


def _masks(model: ArcModel | IntervalModel) -> list[int]:
    if isinstance(model, ArcModel):
        return [model.points(v) for v in range(len(model))]
    return []


def intersection_graph(model: ArcModel | IntervalModel) -> Graph:
    n = len(model)
    edges = []
    if isinstance(model, ArcModel):
        masks = _masks(model)
        for u in range(n):
            for v in range(u + 1, n):
                if masks[u] & masks[v]:
                    edges.append((u, v))
    else:
        iv = model.intervals
        for u in range(n):
            for v in range(u + 1, n):
                if iv[u][0] <= iv[v][1] and iv[v][0] <= iv[u][1]:
                    edges.append((u, v))
    return Graph.from_edges(n, edges)


def covering_sets(model: ArcModel, max_size: int = 3) -> Iterable[tuple[int, ...]]:
    """Sets of at most ``max_size`` arcs whose union is the whole circle."""
    full = (1 << model.M) - 1
    masks = _masks(model)
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(range(len(masks)), size):
            acc = 0
            for v in combo:
                acc |= masks[v]
            if acc == full:
                yield combo


def no_three_cover(model: ArcModel) -> bool:
    return next(iter(covering_sets(model, 3)), None) is None


def is_normal(model: ArcModel) -> bool:
    return next(iter(covering_sets(model, 2)), None) is None


def is_helly(model: ArcModel) -> bool:
    """Every family of pairwise intersecting arcs has a common point. It is
    enough to check the maximal ones, i.e. the maximal cliques of the
    intersection graph."""
    g = intersection_graph(model)
    masks = _masks(model)
    for clique in maximal_cliques(g):
        common = (1 << model.M) - 1
        for v in bits(clique):
            common &= masks[v]
        if not common:
            return False
    return True


def verify_nhca_model(g: Graph, model: ArcModel) -> bool:
    if len(model) != g.n:
        raise GraphError(f"model has {len(model)} arcs for a graph on {g.n} vertices")
    return intersection_graph(model) == g and no_three_cover(model)


def verify_interval_model(g: Graph, model: IntervalModel) -> bool:
    if len(model) != g.n:
        raise GraphError(f"model has {len(model)} intervals for a graph on {g.n} vertices")
    return intersection_graph(model) == g


def is_left_right_anchored(model: IntervalModel, A: Iterable[int], B: Iterable[int]) -> bool:
    """A's intervals share the global minimum left endpoint and nothing else
    starts there; symmetrically B at the global maximum right endpoint."""
    A, B = set(A), set(B)
    iv = model.intervals
    if not iv:
        return not A and not B
    lo = min(l for l, _ in iv)
    hi = max(r for _, r in iv)
    if A:
        if any(iv[a][0] != lo for a in A):
            return False
        if any(iv[v][0] == lo for v in range(len(iv)) if v not in A):
            return False
    if B:
        if any(iv[b][1] != hi for b in B):
            return False
        if any(iv[v][1] == hi for v in range(len(iv)) if v not in B):
            return False
    return True


def _consecutive_clique_order(g: Graph, cliques: list[int], first_must: int, last_must: int) -> list[int] | None:
    """Order the maximal cliques so each vertex lies in a contiguous run,
    with ``first_must`` inside the first clique and ``last_must`` inside the
    last one. Exhaustive backtracking."""
    m = len(cliques)
    if m == 0:
        return []
    order: list[int] = []

    def rec(used: int, active: int, done: int) -> bool:
        if len(order) == m:
            return last_must & ~cliques[order[-1]] == 0
        for i in range(m):
            if used >> i & 1:
                continue
            q = cliques[i]
            if not order and first_must & ~q:
                continue
            if q & done:
                continue
            closing = active & ~q
            # a vertex required in the last clique may never close
            if closing & last_must:
                continue
            order.append(i)
            if rec(used | 1 << i, q, done | closing):
                return True
            order.pop()
        return False

    if rec(0, 0, 0):
        return [cliques[i] for i in order]
    return None


def build_left_right_interval_model(g: Graph, A: Iterable[int] = (), B: Iterable[int] = ()) -> IntervalModel | None:
    """Interval model of ``g`` in which every interval of ``A`` starts at the
    unique leftmost left endpoint and every interval of ``B`` ends at the
    unique rightmost right endpoint; ``None`` if none exists."""
    A = sorted(set(A))
    B = sorted(set(B))
    for v in A + B:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    if g.n == 0:
        return IntervalModel(())
    amask, bmask = to_mask(A), to_mask(B)
    order = _consecutive_clique_order(g, maximal_cliques(g), amask, bmask)
    if order is None:
        return None
    first = [-1] * g.n
    last = [-1] * g.n
    for j, q in enumerate(order):
        for v in bits(q):
            if first[v] < 0:
                first[v] = j
            last[v] = j
    # clique j sits at point 2j + 1; anchors use the free points 0 and 2m
    m = len(order)
    intervals = []
    for v in range(g.n):
        l = 0 if amask >> v & 1 else 2 * first[v] + 1
        r = 2 * m if bmask >> v & 1 else 2 * last[v] + 1
        intervals.append((l, r))
    model = IntervalModel(tuple(intervals))
    assert verify_interval_model(g, model), "clique-path model does not reproduce the graph"
    return model


def build_interval_model(g: Graph) -> IntervalModel | None:
    return build_left_right_interval_model(g, (), ())


def to_dot(g: Graph, model: ArcModel | IntervalModel | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = str(v)
        if isinstance(model, ArcModel):
            label += f"\\n{list(model.arcs[v])}"
        elif isinstance(model, IntervalModel):
            label += f"\\n{list(model.intervals[v])}"
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
