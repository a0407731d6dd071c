"""Monochromatic fallback: majority-color host graph and backward greedy embedding."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .. import _log
from ..coloring import EdgeColoring
from ..errors import FormatError, PreconditionViolation, violation
from ..graph import DegeneracyOrdering, Graph, degeneracy_order
from .regularity import RegularityTable


@dataclass(frozen=True)
class Embedding:
    """Injection ``V(G) -> host``: ``map[v]`` is the image of vertex ``v``.

    ``route`` records which branch produced it; ``warnings`` lists violated
    hypotheses when the driver ran in permissive mode.
    """

    map: tuple[int, ...]
    route: str = ""
    warnings: tuple[str, ...] = ()

    def __len__(self):
        return len(self.map)

    def to_text(self, sum_mod_p: int = 0) -> str:
        lines = [f"sum_mod_p {sum_mod_p}"]
        lines += [f"{v} {x}" for v, x in enumerate(self.map)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Embedding":
        return parse_embedding(text)


def parse_embedding(text: str) -> Embedding:
    """Read the ``sum_mod_p`` header and ``v x`` lines; vertices must appear in order."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("empty embedding file", 1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "sum_mod_p":
        raise FormatError("header must be 'sum_mod_p X'", 1)
    image = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        try:
            v, x = (int(t) for t in parts)
        except ValueError:
            raise FormatError("embedding line must be 'v x' with integers", lineno) from None
        if v != len(image):
            raise FormatError(f"expected vertex {len(image)}, got {v}", lineno)
        if x < 0:
            raise FormatError(f"negative host vertex {x}", lineno)
        image.append(x)
    return Embedding(tuple(image))


@dataclass(frozen=True)
class MonoRegion:
    region: tuple[int, ...]
    vertex_color: dict = field(repr=False)
    majority: int
    vertices: tuple[int, ...]  # host vertex of each vertex of H
    host: Graph = field(repr=False)
    condition_checked: bool = False


def joint_neighborhood_violation(H: Graph, n: int, d: int, budget: int = 2_000_000):
    """First ``Y`` with ``|Y| <= d`` and ``|N(Y)| < n - |Y|``.

    Returns ``None`` when every such ``Y`` is fine, or ``False`` when the number
    of subsets exceeds ``budget`` and nothing was checked.
    """
    nh = H.n
    total = sum(comb(nh, r) for r in range(d + 1))
    if total > budget:
        return False
    bits = H.neighbor_bits()
    everything = (1 << nh) - 1
    for r in range(d + 1):
        for Y in combinations(range(nh), r):
            common = everything
            for y in Y:
                common &= bits[y]
            if common.bit_count() < n - r:
                return Y
    return None


def mono_embed(G: Graph, order: DegeneracyOrdering, H: Graph) -> Embedding:
    """Embed ``G`` into ``H`` preserving adjacency, last vertex of ``order`` first.

    Each vertex goes to the lowest unused common neighbour of the images of
    its already placed (later-in-order) neighbours.
    """
    bits = H.neighbor_bits()
    everything = (1 << H.n) - 1
    pos = order.position()
    image = [-1] * G.n
    used = 0
    for v in reversed(order.order):
        cand = everything
        for y in G.adjacency[v]:
            if pos[y] > pos[v]:
                cand &= bits[image[y]]
        cand &= ~used
        if not cand:
            placed = [y for y in G.adjacency[v] if pos[y] > pos[v]]
            raise PreconditionViolation(
                f"no free common neighbour for vertex {v} (images of later neighbours: "
                f"{[image[y] for y in placed]})"
            )
        x = (cand & -cand).bit_length() - 1
        image[v] = x
        used |= 1 << x
    return Embedding(tuple(image), route="mono")


def mono_region(region_a, region_b, table: RegularityTable, c: EdgeColoring, n: int, d: int,
                *, hypotheses_hold: bool = True) -> MonoRegion:
    colors = c.colors
    p = c.modulus
    kp = table.k_prime
    inter = frozenset(region_a) & frozenset(region_b)
    if len(inter) <= kp:
        raise violation(hypotheses_hold, f"|R(A) & R(B)| = {len(inter)} <= k' = {kp}",
                        {"intersection": sorted(inter), "k_prime": kp})
    R = np.array(sorted(frozenset(region_a) | frozenset(region_b)), dtype=np.int64)

    Cw: dict[int, int] = {}
    for w in R.tolist():
        Rw = R[~np.isin(R, list(table.L[w]))]
        vals = np.unique(colors[w, Rw])
        if vals.size != 1:
            raise violation(hypotheses_hold, "c(ww') not constant on R_w within the region",
                            {"w": w, "colors": vals.tolist()})
        Cw[w] = int(vals[0])
        off = int(np.count_nonzero(colors[w, R] != Cw[w])) - (1 if Cw[w] != colors[w, w] else 0)
        if off > kp:
            raise violation(hypotheses_hold, f"vertex {w} has {off} off-color edges > k' = {kp}",
                            {"w": w, "off": off})

    sub = colors[np.ix_(R, R)]
    counts = np.bincount(sub[np.triu_indices(len(R), 1)], minlength=p)
    g = int(counts.argmax())
    VH = [w for w in R.tolist() if Cw[w] == g]
    if len(VH) < n + d * kp:
        raise violation(hypotheses_hold, f"|V(H)| = {len(VH)} < n + dk' = {n + d * kp}",
                        {"g": g, "VH": VH}, size_bound=True)
    VH_arr = np.array(VH, dtype=np.int64)
    H = Graph.from_adjacency_matrix(colors[np.ix_(VH_arr, VH_arr)] == g)
    bad = joint_neighborhood_violation(H, n, d)
    if bad:
        raise violation(hypotheses_hold, "joint-neighbourhood condition fails in H",
                        {"Y": [VH[y] for y in bad], "g": g})
    _log.trace("mono: |region|=%d g=%d |V(H)|=%d", len(R), g, len(VH))
    return MonoRegion(tuple(R.tolist()), Cw, g, tuple(VH), H, condition_checked=bad is None)


def mono_embed_into(G: Graph, mono: MonoRegion, order: DegeneracyOrdering | None = None) -> Embedding:
    """:func:`mono_embed` into ``mono.host``, with images translated back to host vertices."""
    if order is None:
        order = degeneracy_order(G)
    local = mono_embed(G, order, mono.host)
    return Embedding(tuple(mono.vertices[x] for x in local.map), route="mono")
