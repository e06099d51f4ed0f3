"""Finite simple graphs stored as per-vertex bitsets, plus the structural
queries the rest of the package leans on."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

MAX_VERTICES = 62


class GraphError(ValueError):
    """Bad argument to a graph operation (out-of-range vertex, bad pins...)."""


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is a bitmask of the neighbours of ``v``. Instances are
    immutable and hashable, so they can be shared freely.
    """

    n: int
    adj: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if not self.adj:
            object.__setattr__(self, "adj", (0,) * self.n)
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.adj):
            if m & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if m >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(m):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")


def neighbors(g: Graph, v: int) -> set[int]:
    _check_vertex(g, v)
    return set(bits(g.adj[v]))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    for v in s:
        _check_vertex(g, v)
    mask = to_mask(s)
    return all((g.adj[v] | 1 << v) & mask == mask for v in s)


def components(g: Graph, within: int | None = None) -> list[list[int]]:
    """Connected components (as sorted vertex lists), optionally restricted
    to the vertex bitmask ``within``."""
    remaining = g.vertex_mask if within is None else within
    parts = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= remaining & ~seen
            seen |= nxt
            frontier = nxt
        parts.append(list(bits(seen)))
        remaining &= ~seen
    return parts


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[s]`` together with the list mapping new indices to old ones."""
    order = sorted(set(s))
    for v in order:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        adj.append(to_mask(index[u] for u in bits(g.adj[v]) if u in index))
    return Graph(len(order), tuple(adj)), order


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which old vertex ``v`` becomes ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        adj[perm[v]] = to_mask(perm[u] for u in bits(g.adj[v]))
    return Graph(g.n, tuple(adj))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)


# --- small named graphs -----------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


# --- graph6 ------------------------------------------------------------------

def write_graph6(g: Graph) -> bytes:
    if g.n > MAX_VERTICES:
        raise GraphError(f"graph6 short form supports n <= {MAX_VERTICES}")
    out = bytearray([63 + g.n])
    acc = 0
    width = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            width += 1
            if width == 6:
                out.append(63 + acc)
                acc = width = 0
    if width:
        out.append(63 + (acc << (6 - width)))
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    base = len(text) - len(text.lstrip())
    if data.startswith(b">>graph6<<"):
        data = data[10:]
        base += 10
    if not data:
        raise Graph6Error("empty graph6 string", base)
    head = data[0]
    if head == 126:
        raise Graph6Error(f"long-form header unsupported (n > {MAX_VERTICES})", base)
    if not 63 <= head < 126:
        raise Graph6Error(f"invalid header byte {head}", base)
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated: expected {nbytes} data bytes, got {len(body)}", base + 1 + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after adjacency data", base + 1 + nbytes)
    for k, b in enumerate(body):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} out of range 63..126", base + 1 + k)
    if nbytes and nbits % 6:
        pad = 6 - nbits % 6
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + nbytes)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = (int(x) for x in lines[0])
        if len(lines) - 1 != m:
            raise GraphError(f"header announces {m} edges, found {len(lines) - 1}")
        edges = []
        for row in lines[1:]:
            if len(row) != 2:
                raise GraphError(f"bad edge line: {' '.join(row)!r}")
            edges.append((int(row[0]), int(row[1])))
    except GraphError:
        raise
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


# --- chordality ---------------------------------------------------------------

@dataclass(frozen=True)
class ChordalityCertificate:
    """Exactly one of ``ordering`` (a perfect elimination ordering) and
    ``hole`` (a chordless cycle on at least four vertices) is set."""

    ordering: tuple[int, ...] | None = None
    hole: tuple[int, ...] | None = None

    @property
    def chordal(self) -> bool:
        return self.ordering is not None


def _shortest_path(g: Graph, src: int, dst: int, allowed: int) -> list[int] | None:
    prev = {src: src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = [v]
            while path[-1] != src:
                path.append(prev[path[-1]])
            return path[::-1]
        for u in bits(g.adj[v] & allowed):
            if u not in prev:
                prev[u] = v
                queue.append(u)
    return None


def _hole_through(g: Graph, v: int, p: int, x: int) -> tuple[int, ...] | None:
    # p, x are nonadjacent neighbours of v; a shortest p-x path avoiding the
    # rest of N[v] closes a chordless cycle through v.
    allowed = g.vertex_mask & ~(g.adj[v] | 1 << v) | 1 << p | 1 << x
    path = _shortest_path(g, p, x, allowed)
    if path is None:
        return None
    return (v, *path)


def find_hole(g: Graph) -> tuple[int, ...] | None:
    """Exhaustive hole search: some vertex has two nonadjacent neighbours
    joined by a path avoiding the rest of its closed neighbourhood."""
    for v in range(g.n):
        nb = list(bits(g.adj[v]))
        for i, p in enumerate(nb):
            for x in nb[i + 1:]:
                if not g.has_edge(p, x):
                    hole = _hole_through(g, v, p, x)
                    if hole is not None:
                        return hole
    return None


def max_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search (ties -> smallest index)."""
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        best = max((v for v in range(g.n) if not visited >> v & 1), key=lambda v: (weight[v], -v))
        order.append(best)
        visited |= 1 << best
        for u in bits(g.adj[best] & ~visited):
            weight[u] += 1
    return order


def chordality(g: Graph) -> ChordalityCertificate:
    """Perfect elimination ordering if ``g`` is chordal, otherwise a hole."""
    visit = max_cardinality_search(g)
    position = {v: i for i, v in enumerate(visit)}
    for v in visit:
        earlier = [u for u in bits(g.adj[v]) if position[u] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=position.__getitem__)
        for x in earlier:
            if x != parent and not g.has_edge(x, parent):
                hole = _hole_through(g, v, parent, x)
                if hole is None:
                    hole = find_hole(g)
                assert hole is not None, "MCS fill check failed but no hole exists"
                return ChordalityCertificate(hole=hole)
    return ChordalityCertificate(ordering=tuple(reversed(visit)))


def is_chordal(g: Graph) -> bool:
    return chordality(g).chordal


def is_hole(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def chordless_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every chordless cycle (length >= 4) exactly once, rooted at its
    smallest vertex with its second vertex smaller than its last."""
    for root in range(g.n):
        higher = g.vertex_mask & ~((1 << (root + 1)) - 1)

        def extend(path: list[int], blocked: int):
            last = path[-1]
            inner = to_mask(path[1:-1])
            for u in bits(g.adj[last] & higher & ~blocked):
                # u may touch only ``last`` among the interior path vertices
                if g.adj[u] & inner:
                    continue
                if g.has_edge(u, root):
                    if len(path) >= 3 and path[1] < u:
                        yield (*path, u)
                    continue
                yield from extend(path + [u], blocked | 1 << u)

        for second in bits(g.adj[root] & higher):
            yield from extend([root, second], 1 << second | 1 << root)


# --- induced embeddings --------------------------------------------------------

def _search_order(pattern: Graph) -> list[int]:
    """Greedy connected order: start from a maximum-degree vertex, then
    repeatedly take the vertex with most already-ordered neighbours (ties by
    degree, then index)."""
    order: list[int] = []
    placed = 0
    for _ in range(pattern.n):
        best = None
        best_key = None
        for v in range(pattern.n):
            if placed >> v & 1:
                continue
            key = (bin(pattern.adj[v] & placed).count("1"), pattern.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


def find_induced_embedding(
    pattern: Graph,
    host: Graph,
    pins: Mapping[int, int] | None = None,
) -> dict[int, int] | None:
    """Find an injective map pattern -> host preserving adjacency and
    non-adjacency, extending ``pins``. Returns ``None`` if there is none."""
    pins = dict(pins or {})
    if len(set(pins.values())) != len(pins):
        raise GraphError("pins are not injective")
    for p, h in pins.items():
        _check_vertex(pattern, p)
        _check_vertex(host, h)
    for p, h in pins.items():
        for q, k in pins.items():
            if p < q and pattern.has_edge(p, q) != host.has_edge(h, k):
                return None
    if pattern.n > host.n:
        return None
    order = [v for v in _search_order(pattern) if v not in pins]
    pin_order = list(pins)
    full_order = pin_order + order
    pos = {v: i for i, v in enumerate(full_order)}
    # for each step: masks over earlier positions that must / must not be adjacent
    constraints = []
    for i, v in enumerate(full_order):
        earlier = [u for u in full_order[:i]]
        nbr = [pos[u] for u in earlier if pattern.has_edge(u, v)]
        non = [pos[u] for u in earlier if not pattern.has_edge(u, v)]
        constraints.append((nbr, non, pattern.degree(v)))
    image = [0] * pattern.n
    for i, p in enumerate(pin_order):
        image[i] = pins[p]
    host_adj = host.adj
    host_deg = [host.degree(v) for v in range(host.n)]
    start = len(pin_order)
    used0 = to_mask(pins.values())

    def rec(i: int, used: int) -> bool:
        if i == len(full_order):
            return True
        nbr, non, deg = constraints[i]
        cand = host.vertex_mask & ~used
        for j in nbr:
            cand &= host_adj[image[j]]
        for j in non:
            cand &= ~host_adj[image[j]]
        for h in bits(cand):
            if host_deg[h] < deg:
                continue
            image[i] = h
            if rec(i + 1, used | 1 << h):
                return True
        return False

    if not rec(start, used0):
        return None
    return {v: image[pos[v]] for v in full_order}


def is_induced_embedding(pattern: Graph, host: Graph, emb: Mapping[int, int]) -> bool:
    if sorted(emb) != list(range(pattern.n)) or len(set(emb.values())) != pattern.n:
        return False
    if any(not 0 <= h < host.n for h in emb.values()):
        return False
    return all(
        pattern.has_edge(u, v) == host.has_edge(emb[u], emb[v])
        for u in range(pattern.n)
        for v in range(u + 1, pattern.n)
    )


def maximal_cliques(g: Graph, within: int | None = None) -> list[int]:
    """Maximal cliques of ``G[within]`` as bitmasks (Bron-Kerbosch with
    pivoting), in a deterministic order."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: bin(g.adj[u] & p).count("1"))
        for v in bits(p & ~g.adj[pivot]):
            expand(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    base = g.vertex_mask if within is None else within
    if base:
        expand(0, base, 0)
    return sorted(out)


def cliques(g: Graph) -> list[int]:
    """All cliques of ``g`` (including the empty one) as bitmasks."""
    out = [0]

    def grow(r: int, cand: int) -> None:
        for v in bits(cand):
            nr = r | 1 << v
            out.append(nr)
            grow(nr, cand & g.adj[v] & ~((1 << (v + 1)) - 1))

    grow(0, g.vertex_mask)
    return out
