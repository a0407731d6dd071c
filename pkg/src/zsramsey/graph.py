"""Simple undirected graphs, degeneracy orderings, blueprint extraction.

Vertices are dense integers ``0..n-1``. Every choice the algorithms make
between equivalent candidates goes to the lowest vertex index, so outputs are
a pure function of the inputs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import FormatError, InfeasibleParameters, InsufficientBlueprint


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for n={vertex_count}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbor_bits(self) -> list[int]:
        """Adjacency as Python-int bitsets, bit ``w`` set iff ``vw`` is an edge."""
        bits = getattr(self, "_bits", None)
        if bits is None:
            bits = []
            for nb in self.adjacency:
                b = 0
                for w in nb:
                    b |= 1 << w
                bits.append(b)
            object.__setattr__(self, "_bits", bits)
        return bits

    @classmethod
    def from_adjacency_matrix(cls, mat) -> "Graph":
        mat = np.asarray(mat, dtype=bool)
        iu, ju = np.nonzero(np.triu(mat, 1))
        return cls(mat.shape[0], zip(iu.tolist(), ju.tolist()))

    # -- text format: "n m" then m lines "u v" with u < v ---------------------

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        return parse_graph(text)


def parse_graph(text: str) -> Graph:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty graph file", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("header must be 'n m'", 1)
    n, m = _ints(head, 1)
    if n < 0 or m < 0:
        raise FormatError("n and m must be non-negative", 1)
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}", len(lines))
    seen = set()
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("edge line must be 'u v'", lineno)
        u, v = _ints(parts, lineno)
        if not 0 <= u < v < n:
            raise FormatError(f"need 0 <= u < v < n, got {u} {v}", lineno)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def _ints(parts, lineno):
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise FormatError(f"non-integer token in {' '.join(parts)!r}", lineno) from None


# -- degeneracy ---------------------------------------------------------------


@dataclass(frozen=True)
class DegeneracyOrdering:
    order: tuple[int, ...]
    degeneracy: int

    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


def degeneracy_order(G: Graph) -> DegeneracyOrdering:
    """Min-degree peeling; ties go to the lowest vertex index.

    Each vertex has at most ``degeneracy`` neighbours later in ``order``.
    """
    deg = [G.degree(v) for v in range(G.n)]
    heap = [(deg[v], v) for v in range(G.n)]
    heapq.heapify(heap)
    removed = [False] * G.n
    order = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        d = max(d, dv)
        for w in G.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return DegeneracyOrdering(tuple(order), d)


def forward_degrees(G: Graph, order) -> list[int]:
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    return [sum(1 for w in G.adjacency[v] if pos[w] > pos[v]) for v in order]


# -- blueprint ----------------------------------------------------------------


@dataclass(frozen=True)
class Blueprint:
    """Independent set ``J`` of low-degree vertices plus the induced split of V(G).

    ``neighborhoods[i]`` is ``N(J[i])``; ``U`` is their union, ``Z`` the rest.
    ``extracted`` is the size of the greedy set before truncation to ``s``.
    """

    J: tuple[int, ...]
    neighborhoods: tuple[tuple[int, ...], ...]
    U: frozenset[int]
    Z: frozenset[int]
    extracted: int

    @property
    def s(self) -> int:
        return len(self.J)


def blueprint_lower_bound(m: int, d: int) -> int:
    """``ceil(m / (d (d+1)^2))``: guaranteed size of the greedy independent set."""
    if d <= 0:
        return 0
    return -(-m // (d * (d + 1) ** 2))


def greedy_blueprint_set(G: Graph, d: int, order: DegeneracyOrdering | None = None) -> list[int]:
    if order is None:
        order = degeneracy_order(G)
    candidates = [v for v in order.order if 1 <= G.degree(v) <= 2 * d]
    alive = set(candidates)
    J = []
    for v in candidates:
        if v not in alive:
            continue
        J.append(v)
        alive.discard(v)
        alive.difference_update(G.adjacency[v])
    return J


def extract_blueprint(G: Graph, d: int, s: int, order: DegeneracyOrdering | None = None) -> Blueprint:
    """Greedy independent set of vertices with degree in ``[1, 2d]``, truncated to ``s``.

    Candidates are visited in degeneracy order; taking one removes its
    neighbours from the candidate pool.
    """
    J = greedy_blueprint_set(G, d, order)
    if len(J) < s:
        raise InsufficientBlueprint(
            f"greedy extraction found {len(J)} vertices, need s={s} (m={G.m}, d={d})"
        )
    extracted = len(J)
    J = J[:s]
    nbhds = tuple(G.adjacency[v] for v in J)
    U = frozenset(w for nb in nbhds for w in nb)
    Z = frozenset(range(G.n)) - U - set(J)
    return Blueprint(tuple(J), nbhds, U, Z, extracted)


# -- generator ------------------------------------------------------------------


def max_degenerate_edges(n: int, d: int) -> int:
    """Largest edge count of a d-degenerate graph on n vertices."""
    return sum(min(d, i) for i in range(n))


def gen_degenerate_graph(n: int, d: int, m: int, seed: int) -> Graph:
    """Random graph with exactly ``m`` edges and degeneracy at most ``d``.

    Vertices are placed in a random order and each one draws its back-edges
    to uniformly random earlier vertices; the back-edge budget of every vertex
    is capped at ``d``, and the ``m`` slots are chosen uniformly among all
    available ones.
    """
    if n < 0 or d < 0 or m < 0:
        raise InfeasibleParameters("n, d, m must be non-negative")
    cap = max_degenerate_edges(n, d)
    if m > cap:
        raise InfeasibleParameters(f"m={m} exceeds the d-degenerate maximum {cap} for n={n}, d={d}")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    slots = np.repeat(np.arange(n), [min(d, i) for i in range(n)])
    chosen = rng.choice(len(slots), size=m, replace=False) if m else np.empty(0, dtype=int)
    counts = np.bincount(slots[chosen], minlength=n) if m else np.zeros(n, dtype=int)
    edges = []
    for i in range(n):
        if counts[i]:
            back = rng.choice(i, size=int(counts[i]), replace=False)
            edges.extend((int(perm[i]), int(perm[j])) for j in back)
    return Graph(n, edges)


def min_vertices_for(m: int, d: int) -> int:
    """Smallest n admitting a d-degenerate graph with m edges."""
    n = 0
    while max_degenerate_edges(n, d) < m:
        if d == 0:
            raise InfeasibleParameters("a 0-degenerate graph has no edges")
        n += 1
    return n
