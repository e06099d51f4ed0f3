"""Brute-force ground truth for model existence.

Every search works on endpoint *sequences*: the 2n endpoints of the arcs or
intervals are placed one position at a time, with all endpoints distinct.
Any model can be perturbed into that form without changing the
intersection graph and without creating new covers of the circle, so the
searches are complete. A found sequence is turned into an explicit integer
model and checked with the verifiers in :mod:`nhca.models`.

Two symmetry cuts keep the search small; both preserve completeness:

* swapping two adjacent endpoints of the same kind (two starts or two ends)
  never changes the intersection graph, so interval searches and the plain
  circular-arc search keep each run of starts and each run of ends sorted;
* with the cover condition, only the first start of a run and the last end
  of a run affect which gaps a set of arcs covers, so the other members of
  the run are kept sorted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, bits, to_mask
from .models import ArcModel, IntervalModel, is_left_right_anchored, verify_interval_model, intersection_graph, no_three_cover


class BudgetExhausted(Exception):
    pass


@dataclass
class OracleVerdict:
    decided: bool
    member: bool
    model: ArcModel | IntervalModel | None = None
    nodes_explored: int = 0

    def __bool__(self) -> bool:
        raise TypeError("use .member / .decided explicitly")


class _Counter:
    def __init__(self, budget: int | None):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExhausted


# --- circular searches -----------------------------------------------------------

def _arc_contains(s: int, e: int, q: int, length: int) -> bool:
    return (q - s) % length <= (e - s) % length


def _pair_outcomes() -> dict[tuple[int, ...], frozenset[bool]]:
    """For two arcs with endpoint labels 0=s_u, 1=e_u, 2=s_v, 3=e_v, map each
    placed prefix (labels in circle order) to the intersection outcomes still
    possible once the missing labels are appended in any order."""
    table: dict[tuple[int, ...], frozenset[bool]] = {}
    full = list(itertools.permutations(range(4)))
    for k in range(5):
        for prefix in itertools.permutations(range(4), k):
            outcomes = set()
            for order in full:
                if order[:k] != prefix:
                    continue
                p = [0] * 4
                for i, label in enumerate(order):
                    p[label] = i
                outcomes.add(_arc_contains(p[0], p[1], p[2], 4) or _arc_contains(p[2], p[3], p[0], 4))
            table[prefix] = frozenset(outcomes)
    return table


_PAIR = _pair_outcomes()


def _circular_search(g: Graph, cover_free: bool, counter: _Counter) -> list[int] | None:
    """Return positions ``pos[2v]`` (start) and ``pos[2v+1]`` (end), or None."""
    n = g.n
    length = 2 * n
    pos = [-1] * length
    full_gaps = (1 << length) - 1
    cover = [0] * n  # gap mask of completed arcs
    complete: list[int] = []
    adj = g.adj
    # an adjacency requirement is violated when the outcome set for the pair
    # no longer contains it
    want = [[bool(adj[u] >> v & 1) for v in range(n)] for u in range(n)]

    def consistent(v: int) -> bool:
        sv, ev = pos[2 * v], pos[2 * v + 1]
        for u in range(n):
            if u == v:
                continue
            su, eu = pos[2 * u], pos[2 * u + 1]
            placed = [(p, lab) for p, lab in ((su, 0), (eu, 1), (sv, 2), (ev, 3)) if p >= 0]
            placed.sort()
            if want[u][v] not in _PAIR[tuple(lab for _, lab in placed)]:
                return False
        return True

    def gap_mask(v: int) -> int:
        s, e = pos[2 * v], pos[2 * v + 1]
        if s <= e:
            return ((1 << e) - 1) & ~((1 << s) - 1)
        return full_gaps & ~((1 << s) - 1) | ((1 << e) - 1)

    def rec(t: int, prev_kind: int, run_len: int, prev_idx: int, closed: bool) -> bool:
        counter.tick()
        if t == length:
            return True
        for ev in range(length):
            if pos[ev] >= 0:
                continue
            v, kind = ev >> 1, ev & 1
            if kind == prev_kind:
                if kind == 0:
                    if cover_free:
                        if run_len >= 2 and v < prev_idx:
                            continue
                    elif v < prev_idx:
                        continue
                else:
                    if cover_free:
                        if closed:
                            continue
                    elif v < prev_idx:
                        continue
            pos[ev] = t
            ok = consistent(v)
            newly = False
            if ok and cover_free and pos[2 * v] >= 0 and pos[2 * v + 1] >= 0:
                cv = gap_mask(v)
                for i, u in enumerate(complete):
                    cu = cover[u]
                    if cu | cv == full_gaps:
                        ok = False
                        break
                    for w in complete[i + 1:]:
                        if cu | cover[w] | cv == full_gaps:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    cover[v] = cv
                    complete.append(v)
                    newly = True
            if ok:
                if kind == prev_kind:
                    nrun = run_len + 1
                    nclosed = closed or (kind == 1 and v < prev_idx)
                else:
                    nrun, nclosed = 1, False
                if rec(t + 1, kind, nrun, v, nclosed):
                    return True
            if newly:
                complete.pop()
            pos[ev] = -1
        return False

    if n == 0:
        return []
    pos[0] = 0  # rotation: the start of vertex 0 opens the sequence
    if rec(1, 0, 1, 0, False):
        return pos
    return None


def _arc_model_from_positions(n: int, pos: list[int]) -> ArcModel:
    # endpoint at sequence position t sits on circle point 2t; odd points are
    # the gaps, so discrete covering matches covering of the real circle
    if n == 0:
        return ArcModel(1, ())
    return ArcModel(4 * n, tuple((2 * pos[2 * v], 2 * pos[2 * v + 1]) for v in range(n)))


def _circular(g: Graph, cover_free: bool, budget: int | None) -> OracleVerdict:
    counter = _Counter(budget)
    try:
        pos = _circular_search(g, cover_free, counter)
    except BudgetExhausted:
        return OracleVerdict(False, False, None, counter.nodes)
    if pos is None:
        return OracleVerdict(True, False, None, counter.nodes)
    model = _arc_model_from_positions(g.n, pos)
    assert intersection_graph(model) == g, "oracle produced a model with the wrong graph"
    if cover_free:
        assert no_three_cover(model), "oracle produced a covering triple"
    return OracleVerdict(True, True, model, counter.nodes)


def brute_force_nhca(g: Graph, budget: int | None = None) -> OracleVerdict:
    """Search for arcs realising ``g`` with no three (or fewer) covering the circle."""
    return _circular(g, True, budget)


def brute_force_circular_arc(g: Graph, budget: int | None = None) -> OracleVerdict:
    return _circular(g, False, budget)


# --- linear searches --------------------------------------------------------------

def _linear_search(g: Graph, A: int, B: int, counter: _Counter) -> list[int] | None:
    n = g.n
    length = 2 * n
    pos = [-1] * length
    adj = g.adj
    all_v = g.vertex_mask

    def start_key(v: int) -> tuple[int, int]:
        return (0 if A >> v & 1 else 1, v)

    def end_key(v: int) -> tuple[int, int]:
        return (1 if B >> v & 1 else 0, v)

    def rec(t: int, started: int, ended: int, prev_kind: int, prev_v: int) -> bool:
        counter.tick()
        if t == length:
            return True
        a_pending = A & ~started
        for v in range(n):
            # start of v
            if not started >> v & 1:
                if a_pending and not a_pending >> v & 1:
                    pass
                elif prev_kind == 0 and start_key(v) < start_key(prev_v):
                    pass
                else:
                    open_ = started & ~ended
                    # open intervals meet v, closed ones do not
                    if adj[v] & open_ == open_ and not adj[v] & ended:
                        pos[2 * v] = t
                        if rec(t + 1, started | 1 << v, ended, 0, v):
                            return True
                        pos[2 * v] = -1
            elif not ended >> v & 1:
                if a_pending:
                    continue
                if prev_kind == 1 and end_key(v) < end_key(prev_v):
                    continue
                if adj[v] & ~started:
                    continue  # an unstarted neighbour could no longer meet v
                if B >> v & 1 and (started != all_v or (ended | B) != all_v):
                    continue
                pos[2 * v + 1] = t
                if rec(t + 1, started, ended | 1 << v, 1, v):
                    return True
                pos[2 * v + 1] = -1
        return False

    if rec(0, 0, 0, -1, -1):
        return pos
    return None


def brute_force_left_right(g: Graph, A: Iterable[int] = (), B: Iterable[int] = (), budget: int | None = None) -> OracleVerdict:
    """Search for an interval model where ``A`` owns the unique leftmost left
    endpoint and ``B`` the unique rightmost right endpoint."""
    amask, bmask = to_mask(A), to_mask(B)
    counter = _Counter(budget)
    try:
        pos = _linear_search(g, amask, bmask, counter)
    except BudgetExhausted:
        return OracleVerdict(False, False, None, counter.nodes)
    if pos is None:
        return OracleVerdict(True, False, None, counter.nodes)
    hi = 2 * g.n - 1
    intervals = []
    for v in range(g.n):
        l, r = pos[2 * v], pos[2 * v + 1]
        # the A starts occupy the first |A| positions with nothing between
        # them, so collapsing them onto the minimum changes no intersection
        if amask >> v & 1:
            l = 0
        if bmask >> v & 1:
            r = hi
        intervals.append((l, r))
    model = IntervalModel(tuple(intervals))
    assert verify_interval_model(g, model), "oracle produced a model with the wrong graph"
    assert is_left_right_anchored(model, bits(amask), bits(bmask)), "oracle anchoring broken"
    return OracleVerdict(True, True, model, counter.nodes)


def brute_force_interval(g: Graph, budget: int | None = None) -> OracleVerdict:
    return brute_force_left_right(g, (), (), budget)


def brute_force_end_vertex(g: Graph, v: int, budget: int | None = None) -> OracleVerdict:
    """Interval model in which ``v`` has the strictly leftmost left endpoint."""
    return brute_force_left_right(g, (v,), (), budget)

