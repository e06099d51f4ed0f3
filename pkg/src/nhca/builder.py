"""Constructive recognition: an arc model for every obstruction-free graph.

Chordal inputs are interval graphs and get a wrapped interval model. Otherwise
a hole ``C = v_0 ... v_{n-1}`` is fixed and every other vertex is classified
by its neighbourhood on ``C``:

* ``A[i]``: adjacent to ``v_{i-1}`` and ``v_i`` and to some ``w`` that sees
  ``v_i`` but not ``v_{i-1}``;
* ``B[i]``: adjacent to ``v_i`` and ``v_{i+1}`` and to some ``w`` that sees
  ``v_i`` but not ``v_{i+1}``;
* ``O[i]``: sees exactly ``v_i`` on ``C``;
* ``T[i]``: sees exactly ``v_i, v_{i+1}`` and is in neither ``B[i]`` nor
  ``A[i+1]``.

Around the circle, the arc of ``v_i`` is ``[l_i, r_i]`` and the points split
into alternating regions::

    ... [l_i, r_{i-1}]  (r_{i-1}, l_{i+1})  [l_{i+1}, r_i]  (r_i, l_{i+2}) ...
          closed i-1          open i           closed i         open i+1

The open region ``i`` hosts an interval model of ``G[A_i + O_i + B_i]`` with
``A_i`` anchored left and ``B_i`` anchored right; the closed region ``i``
hosts one of ``G[B_i + T_i + A_{i+1}]`` with ``B_i`` anchored left and
``A_{i+1}`` anchored right. The arc of an off-cycle vertex is the union of
its pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .detector import ObstructionWitness, find_nhca_obstruction
from .graph import Graph, bits, chordality, induced_subgraph, is_clique, is_hole, to_mask
from .models import (
    ArcModel,
    IntervalModel,
    build_interval_model,
    build_left_right_interval_model,
    intersection_graph,
    verify_nhca_model,
)


class InternalContradiction(RuntimeError):
    """A structural fact guaranteed for obstruction-free graphs failed.

    Either the detector missed an obstruction or the construction is wrong;
    it is never expected on valid runs."""

    def __init__(self, message: str, vertex: int | None = None, detail: object = None):
        super().__init__(message if vertex is None else f"{message} (vertex {vertex})")
        self.vertex = vertex
        self.detail = detail


@dataclass(frozen=True)
class CycleClassification:
    cycle: tuple[int, ...]
    A: tuple[int, ...]  # bitmasks, index i refers to cycle position i
    B: tuple[int, ...]
    O: tuple[int, ...]
    T: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    def segment_one(self, i: int) -> int:
        return self.A[i] | self.O[i] | self.B[i]

    def segment_two(self, i: int) -> int:
        n = len(self.cycle)
        return self.B[i] | self.T[i] | self.A[(i + 1) % n]


def _cycle_path_check(g: Graph, cycle: tuple[int, ...], v: int) -> None:
    """The neighbours of ``v`` on the hole form a chordless path, i.e. one
    consecutive run of cycle positions that is not the whole cycle."""
    n = len(cycle)
    on = [bool(g.adj[v] >> c & 1) for c in cycle]
    k = sum(on)
    if k == 0:
        return
    if k == n:
        raise InternalContradiction("vertex sees the whole hole", v)
    runs = sum(1 for i in range(n) if on[i] and not on[i - 1])
    if runs != 1:
        raise InternalContradiction("cycle neighbourhood is not a chordless path", v, on)


def classify_vertices(g: Graph, cycle) -> CycleClassification:
    cycle = tuple(cycle)
    n = len(cycle)
    if n < 4 or not is_hole(g, cycle):
        raise ValueError("classification needs a chordless cycle of length >= 4")
    cmask = to_mask(cycle)
    A, B, O, T = [0] * n, [0] * n, [0] * n, [0] * n
    for i in range(n):
        prv, cur, nxt = cycle[i - 1], cycle[i], cycle[(i + 1) % n]
        # w sees v_i but not v_{i-1} (resp. v_{i+1})
        w_left = g.adj[cur] & ~g.adj[prv] & ~(1 << prv)
        w_right = g.adj[cur] & ~g.adj[nxt] & ~(1 << nxt)
        for v in bits(g.vertex_mask & ~cmask):
            a = g.adj[v]
            if a >> prv & 1 and a >> cur & 1 and a & w_left:
                A[i] |= 1 << v
            if a >> cur & 1 and a >> nxt & 1 and a & w_right:
                B[i] |= 1 << v
    for v in bits(g.vertex_mask & ~cmask):
        _cycle_path_check(g, cycle, v)
        on = g.adj[v] & cmask
        idx = [i for i, c in enumerate(cycle) if on >> c & 1]
        if len(idx) == 1:
            O[idx[0]] |= 1 << v
        elif len(idx) == 2:
            i = idx[0] if (idx[0] + 1) % n == idx[1] else idx[1]
            if not (B[i] >> v & 1 or A[(i + 1) % n] >> v & 1):
                T[i] |= 1 << v
    cls = CycleClassification(cycle, tuple(A), tuple(B), tuple(O), tuple(T))
    covered = 0
    for i in range(n):
        covered |= A[i] | B[i] | O[i] | T[i]
    missing = g.vertex_mask & ~cmask & ~covered
    if missing:
        v = (missing & -missing).bit_length() - 1
        raise InternalContradiction("vertex outside every class", v)
    for i in range(n):
        for name, side in (("A", A[i]), ("B", B[i])):
            if not is_clique(g, bits(side)):
                raise InternalContradiction(f"{name}[{i}] is not a clique", None, list(bits(side)))
    return cls


@dataclass(frozen=True)
class SegmentModel:
    """An interval model of ``G[vertices]``; ``vertices[j]`` owns ``model.intervals[j]``.

    ``left`` and ``right`` are the anchored vertex masks."""

    vertices: tuple[int, ...]
    model: IntervalModel
    left: int = 0
    right: int = 0

    def span(self) -> tuple[int, int]:
        if not self.vertices:
            return (0, 0)
        return (min(l for l, _ in self.model.intervals), max(r for _, r in self.model.intervals))

    def width(self) -> int:
        # one padding point on each side is reached only by anchored pieces,
        # which keeps the unanchored ones strictly inside the region
        lo, hi = self.span()
        return hi - lo + 3


def _anchored(g: Graph, members: int, left: int, right: int, what: str) -> SegmentModel:
    verts = bits(members)
    sub, order = induced_subgraph(g, verts)
    index = {v: j for j, v in enumerate(order)}
    model = build_left_right_interval_model(sub, [index[v] for v in bits(left)], [index[v] for v in bits(right)])
    if model is None:
        raise InternalContradiction(f"{what} has no left-right interval model", None, verts)
    return SegmentModel(tuple(order), model, left, right)


def build_segment_models(g: Graph, cls: CycleClassification) -> list[tuple[SegmentModel, SegmentModel]]:
    n = len(cls)
    out = []
    for i in range(n):
        one = _anchored(g, cls.segment_one(i), cls.A[i], cls.B[i], f"open segment {i}")
        two = _anchored(g, cls.segment_two(i), cls.B[i], cls.A[(i + 1) % n], f"closed segment {i}")
        out.append((one, two))
    return out


@dataclass
class SegmentLayout:
    """Circle coordinates: ``left[i]``, ``right[i]`` bound the arc of ``v_i``;
    ``open_[i]`` and ``closed[i]`` are the inclusive point ranges of the two
    regions of segment ``i``."""

    M: int
    left: list[int] = field(default_factory=list)
    right: list[int] = field(default_factory=list)
    open_: list[tuple[int, int]] = field(default_factory=list)
    closed: list[tuple[int, int]] = field(default_factory=list)


def _layout(segments: list[tuple[SegmentModel, SegmentModel]]) -> SegmentLayout:
    n = len(segments)
    widths = [(one.width(), two.width()) for one, two in segments]
    # walk clockwise from the open region of segment 0, which starts at 0
    open_, closed = [], []
    p = 0
    for i in range(n):
        w1, w2 = widths[i]
        open_.append((p, p + w1 - 1))
        p += w1
        closed.append((p, p + w2 - 1))
        p += w2
    M = p
    layout = SegmentLayout(M, open_=open_, closed=closed)
    for i in range(n):
        layout.left.append(closed[i - 1][0])
        layout.right.append(closed[i][1])
    return layout


def glue_arcs(g: Graph, cls: CycleClassification, segments, layout: SegmentLayout | None = None) -> ArcModel:
    if layout is None:
        layout = _layout(segments)
    M = layout.M
    pieces: dict[int, int] = {}
    n = len(cls)

    def place(seg: SegmentModel, start: int) -> None:
        lo, _ = seg.span()
        end = start + seg.width() - 1
        for v, (l, r) in zip(seg.vertices, seg.model.intervals):
            a = start if seg.left >> v & 1 else start + 1 + l - lo
            b = end if seg.right >> v & 1 else start + 1 + r - lo
            pieces[v] = pieces.get(v, 0) | (((1 << (b + 1)) - 1) & ~((1 << a) - 1))

    for i, (one, two) in enumerate(segments):
        place(one, layout.open_[i][0])
        place(two, layout.closed[i][0])

    arcs: list[tuple[int, int] | None] = [None] * g.n
    for i, c in enumerate(cls.cycle):
        arcs[c] = (layout.left[i], layout.right[i])
    full = (1 << M) - 1
    for v, mask in pieces.items():
        arcs[v] = _single_arc(mask, M, full, v)
    for v in range(g.n):
        if arcs[v] is None:
            raise InternalContradiction("vertex received no arc", v)
    return ArcModel(M, tuple(arcs))


def _single_arc(mask: int, M: int, full: int, v: int) -> tuple[int, int]:
    """(start, end) of the arc whose point set is ``mask``; raises when the
    points do not form one contiguous circular run."""
    if mask == full:
        raise InternalContradiction("arc covers the whole circle", v)
    # a run starts at a point whose predecessor is uncovered
    rotated = ((mask << 1) | (mask >> (M - 1))) & full
    starts = mask & ~rotated
    if bin(starts).count("1") != 1:
        raise InternalContradiction("pieces do not form a single arc", v, list(bits(mask)))
    s = starts.bit_length() - 1
    e = s
    while mask >> ((e + 1) % M) & 1:
        e = (e + 1) % M
    return (s, e)


def _check_adjacent_share_cycle_neighbour(g: Graph, cls: CycleClassification) -> None:
    cmask = to_mask(cls.cycle)
    for u, v in g.edges():
        if cmask >> u & 1 or cmask >> v & 1:
            continue
        if not g.adj[u] & g.adj[v] & cmask:
            raise InternalContradiction("adjacent off-cycle vertices share no cycle neighbour", u, v)


def _check_neighbourhoods(g: Graph, cls: CycleClassification, model: ArcModel) -> None:
    realised = intersection_graph(model)
    n = len(cls)
    for i in range(n):
        for o in bits(cls.O[i]):
            if realised.adj[o] != g.adj[o]:
                raise InternalContradiction("neighbourhood of a one-neighbour vertex not reproduced", o)
        for t in bits(cls.T[i]):
            if realised.adj[t] != g.adj[t]:
                raise InternalContradiction("neighbourhood of a two-neighbour vertex not reproduced", t)
        c = cls.cycle[i]
        if realised.adj[c] != g.adj[c]:
            raise InternalContradiction("neighbourhood of a cycle vertex not reproduced", c)
    if realised != g:
        bad = next(v for v in range(g.n) if realised.adj[v] != g.adj[v])
        raise InternalContradiction("glued model has the wrong intersection graph", bad)


def model_from_hole(g: Graph, cycle) -> ArcModel:
    """Arc model of an obstruction-free graph built around the given hole."""
    cls = classify_vertices(g, cycle)
    _check_adjacent_share_cycle_neighbour(g, cls)
    segments = build_segment_models(g, cls)
    model = glue_arcs(g, cls, segments)
    _check_neighbourhoods(g, cls, model)
    return model


def _chordal_model(g: Graph) -> ArcModel:
    interval = build_interval_model(g)
    if interval is None:
        raise InternalContradiction("chordal obstruction-free graph has no interval model")
    return ArcModel.from_interval_model(interval)


def build_nhca_model(g: Graph) -> ArcModel | ObstructionWitness:
    """A verified arc model with no three arcs covering the circle, or an
    induced forbidden subgraph."""
    witness = find_nhca_obstruction(g)
    if witness is not None:
        return witness
    if g.n == 0:
        return ArcModel(1, ())
    cert = chordality(g)
    if cert.chordal:
        model = _chordal_model(g)
    else:
        model = model_from_hole(g, cert.hole)
    if not verify_nhca_model(g, model):
        raise InternalContradiction("constructed model has three arcs covering the circle", None, model)
    return model


__all__ = [
    "CycleClassification",
    "InternalContradiction",
    "SegmentLayout",
    "SegmentModel",
    "build_nhca_model",
    "build_segment_models",
    "classify_vertices",
    "glue_arcs",
    "model_from_hole",
]
