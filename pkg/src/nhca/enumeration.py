"""Canonical labelling and exhaustive generation of small graphs.

The canonical code of a graph is the smallest upper-triangle bit string
(column order, as in graph6) over the labellings reached by an
individualisation/refinement search. The search tree is built from
label-independent colour refinement, so isomorphic graphs get equal codes.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .graph import Graph, bits, relabel


def _refine(g: Graph, colors: list[int]) -> list[int]:
    # colour refinement until stable; colours renumbered by sorted signature
    while True:
        ncol = max(colors) + 1 if colors else 0
        sigs = []
        for v in range(g.n):
            counts = [0] * ncol
            for u in bits(g.adj[v]):
                counts[colors[u]] += 1
            sigs.append((colors[v], tuple(counts)))
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == ncol:
            return new
        colors = new


def _code(g: Graph, colors: list[int]) -> int:
    # colors is a discrete colouring: vertex v goes to position colors[v]
    where = [0] * g.n
    for v, c in enumerate(colors):
        where[c] = v
    code = 0
    for j in range(1, g.n):
        aj = g.adj[where[j]]
        for i in range(j):
            code = code << 1 | (aj >> where[i] & 1)
    return code


def canonical_code(g: Graph) -> tuple[int, int]:
    """Isomorphism invariant ``(n, code)``; equal iff the graphs are isomorphic."""
    if g.n == 0:
        return (0, 0)
    best: list[int | None] = [None]

    def search(colors: list[int]) -> None:
        colors = _refine(g, colors)
        ncol = max(colors) + 1
        if ncol == g.n:
            c = _code(g, colors)
            if best[0] is None or c < best[0]:
                best[0] = c
            return
        sizes = [0] * ncol
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(ncol) if sizes[c] > 1)
        for v in range(g.n):
            if colors[v] == target:
                split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
                search(split)

    search([0] * g.n)
    return (g.n, best[0])


def brute_force_code(g: Graph) -> int:
    """Minimum code over all n! labellings (reference check, tiny n only)."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        c = _code(g, list(perm))
        if best is None or c < best:
            best = c
    return 0 if best is None else best


def canonical_form(g: Graph) -> Graph:
    """A representative that depends only on the isomorphism class."""
    n, code = canonical_code(g)
    adj = [0] * n
    k = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count() == h.edge_count() and canonical_code(g) == canonical_code(h)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class on ``n``
    vertices, built by adding a vertex to every class on ``n-1`` vertices."""
    if n < 0:
        return
    if n == 0:
        yield Graph(0)
        return
    layer = {canonical_code(Graph(1)): Graph(1)}
    for m in range(2, n + 1):
        nxt: dict[tuple[int, int], Graph] = {}
        for base in layer.values():
            for nbrs in range(1 << (m - 1)):
                adj = list(base.adj) + [nbrs]
                for u in bits(nbrs):
                    adj[u] |= 1 << (m - 1)
                cand = Graph(m, tuple(adj))
                key = canonical_code(cand)
                if key not in nxt:
                    nxt[key] = cand
        layer = nxt
    for key in sorted(layer):
        yield canonical_form(layer[key])


def enumerate_up_to(max_n: int) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from enumerate_graphs(n)


def random_relabel(g: Graph, rng) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm)
