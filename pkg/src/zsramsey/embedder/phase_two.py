"""Bulk placement into the regular pool, with one candidate pair at a time.

All of ``U'`` (the neighbourhoods of the first ``p`` blueprint vertices) is
placed at once into vertices that share a regular index ``rho``. Each of those
``p`` blueprint vertices then gets a fixed anchor ``x_i`` and a second
candidate ``x'_i`` with a different color sum. When some ``x'_i`` cannot be
found, the colors around the anchors are rigid enough to return a region on
which every vertex coloring ``C_j`` is locally constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import _log
from ..coloring import EdgeColoring
from ..errors import PoolExhausted, violation
from ..graph import Graph
from .phase_one import EmbeddingTriple
from .regularity import RegularityTable
from .schedule import ProcessSchedule


@dataclass(frozen=True)
class PhaseTwoState:
    rho: int
    U_prime: tuple[int, ...]
    P: tuple[int, ...]
    f_prime: dict = field(repr=False)
    anchors: tuple[int, ...] = ()
    blocked: tuple[frozenset, ...] = field(default=(), repr=False)
    second: tuple[int, ...] = ()  # the x'_i found so far


@dataclass(frozen=True)
class PhaseTwoSuccess:
    triple: EmbeddingTriple
    state: PhaseTwoState


@dataclass(frozen=True)
class PhaseTwoRegion:
    region: frozenset
    i_star: int
    state: PhaseTwoState


def choose_rho(table: RegularityTable, allowed) -> tuple[int, list[int]]:
    """Index shared by the most allowed vertices (lowest index on ties) and its vertex list."""
    allowed = sorted(allowed)
    best, best_T = 0, []
    for rho in range(table.k):
        T = [u for u in allowed if rho in table.I[u]]
        if len(T) > len(best_T):
            best, best_T = rho, T
    return best, best_T


def phase_two_attempt(table: RegularityTable, allowed, sched: ProcessSchedule, c: EdgeColoring,
                      G: Graph, d: int, *, hypotheses_hold: bool = True,
                      check: bool = True) -> PhaseTwoSuccess | PhaseTwoRegion:
    """One application of the anchored placement.

    ``allowed`` restricts where ``P`` and the anchors may go (the whole pool
    on the first attempt, the first region on the second). Second candidates
    and the returned region range over the whole pool.
    """
    p = sched.p
    colors = c.colors
    first_N = sched.N[:p]
    U_prime = tuple(sorted({y for nb in first_N for y in nb}))
    rho, T = choose_rho(table, allowed)
    if len(T) < len(U_prime):
        raise PoolExhausted(f"largest regular class has {len(T)} vertices, need |U'| = {len(U_prime)}")
    P = tuple(T[: len(U_prime)])
    f_prime = dict(zip(U_prime, P))
    Pset = set(P)

    allowed_sorted = sorted(allowed)
    anchors: list[int] = []
    blocked: list[frozenset] = []
    for i in range(p):
        bl = frozenset().union(*(table.L[f_prime[y]] for y in first_N[i]))
        blocked.append(bl)
        taken = set(anchors)
        x = next((w for w in allowed_sorted if w not in Pset and w not in taken and w not in bl), None)
        if x is None:
            raise PoolExhausted(f"no anchor available for blueprint index {i}")
        anchors.append(x)

    pool = table.pool_array()
    excluded = Pset | set(anchors)
    second: list[int] = []
    stuck_at = None
    for i in range(p):
        imgs = [f_prime[y] for y in first_N[i]]
        target = int(colors[anchors[i], imgs].sum() % p)
        sums = colors[np.ix_(pool, imgs)].sum(axis=1) % p
        x2 = None
        for w, sw in zip(pool.tolist(), sums.tolist()):
            if sw != target and w not in excluded:
                x2 = w
                break
        if x2 is None:
            stuck_at = i
            break
        second.append(x2)
        excluded.add(x2)

    state = PhaseTwoState(rho, U_prime, P, f_prime, tuple(anchors), tuple(blocked), tuple(second))

    if stuck_at is None:
        return PhaseTwoSuccess(_complete(G, sched, state, pool, excluded), state)

    i_star = stuck_at
    x_star = anchors[i_star]
    drop = Pset | (set(anchors) - {x_star}) | set(second) | blocked[i_star]
    region = frozenset(w for w in pool.tolist() if w not in drop)
    _log.trace("phase2: stuck at i*=%d rho=%d |P|=%d |region|=%d", i_star, rho, len(P), len(region))
    if check:
        _check_region(table, region, state, i_star, c, G.n, d, hypotheses_hold)
    return PhaseTwoRegion(region, i_star, state)


def _complete(G, sched, state: PhaseTwoState, pool, excluded) -> EmbeddingTriple:
    p = sched.p
    leftover = [w for w in pool.tolist() if w not in excluded]
    Jset = set(sched.J)
    rest = [v for v in range(G.n) if v not in Jset and v not in state.f_prime]
    need = len(rest) + (sched.s - p)
    if len(leftover) < need:
        raise PoolExhausted(f"{len(leftover)} pool vertices left, need {need}")
    f = dict(state.f_prime)
    f.update(zip(rest, leftover))
    h = {sched.J[i]: state.anchors[i] for i in range(p)}
    hp = {sched.J[i]: state.second[i] for i in range(p)}
    for i, w in zip(range(p, sched.s), leftover[len(rest):]):
        h[sched.J[i]] = hp[sched.J[i]] = w
    _log.trace("phase2: success with rho=%d", state.rho)
    return EmbeddingTriple(f, h, hp)


def _check_region(table: RegularityTable, region, state: PhaseTwoState, i_star: int,
                  c: EdgeColoring, n: int, d: int, hypotheses_hold: bool) -> None:
    C = table.colorings
    p = c.modulus
    reg = np.array(sorted(region), dtype=np.int64)
    witness = {"tau": table.tau, "i_star": i_star, "rho": state.rho, "region": reg.tolist()}
    if reg.size and np.unique(C[state.rho, reg]).size > 1:
        raise violation(hypotheses_hold, "C_rho not constant on the region", witness)
    for w in reg.tolist():
        Rw = reg[~np.isin(reg, list(table.L[w]))]
        if Rw.size < 2:
            continue
        for j in table.I[w]:
            if np.unique(C[j, Rw]).size > 1:
                raise violation(hypotheses_hold, "C_j not constant on R_w within the region",
                                {**witness, "w": w, "j": j})
    bound = len(table.pool) - (2 + 2 * d) * p - 2 * d * table.k_prime
    if len(reg) < bound:
        raise violation(hypotheses_hold, f"|region| = {len(reg)} < {bound}",
                        {**witness, "bound": bound}, size_bound=True)
