"""Incremental embedding of U with paired candidates for the blueprint.

The process walks ``ordered_U``. When the step reaches the last neighbour of
some blueprint vertices it places that neighbour together with two host
candidates (``h`` and ``h'``) for each of them, demanding that a quota of
them yield different color sums. If no placement meets the quota the process
stalls and reports the remaining pool.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import _log
from ..coloring import EdgeColoring
from ..errors import HostTooSmall
from ..graph import Graph
from .regularity import scan_vertex
from .schedule import ProcessSchedule


@dataclass(frozen=True)
class EmbeddingTriple:
    """Host placements: ``f`` on V(G) minus J, and two candidates ``h``, ``h_prime`` on J."""

    f: dict
    h: dict
    h_prime: dict

    def choice_sums(self, G: Graph, c: EdgeColoring) -> dict:
        """For each ``v`` in J, the pair ``(c(h(v) f(N(v))), c(h'(v) f(N(v))))``."""
        out = {}
        for v in self.h:
            nb = [self.f[w] for w in G.adjacency[v]]
            a = int(c.colors[self.h[v], nb].sum() % c.modulus) if nb else 0
            b = int(c.colors[self.h_prime[v], nb].sum() % c.modulus) if nb else 0
            out[v] = (a, b)
        return out

    def unequal(self, G: Graph, c: EdgeColoring) -> list[int]:
        return sorted(v for v, (a, b) in self.choice_sums(G, c).items() if a != b)


def triple_violations(G: Graph, J, triple: EmbeddingTriple, c: EdgeColoring, p: int) -> list[str]:
    """Independent check of the three conditions on a triple; empty list means valid."""
    out = []
    Jset = set(J)
    rest = set(range(G.n)) - Jset
    if set(triple.f) != rest:
        out.append("f is not defined exactly on V(G) - J")
    if set(triple.h) != Jset or set(triple.h_prime) != Jset:
        out.append("h, h' are not defined exactly on J")
    ell = c.host_order
    images = list(triple.f.values()) + list(triple.h.values()) + list(triple.h_prime.values())
    if any(not 0 <= x < ell for x in images):
        out.append("image outside host")
    fimg = list(triple.f.values())
    if len(set(fimg)) != len(fimg):
        out.append("f not injective")
    for name, m in (("h", triple.h), ("h'", triple.h_prime)):
        if len(set(m.values())) != len(m):
            out.append(f"{name} not injective")
    if set(fimg) & (set(triple.h.values()) | set(triple.h_prime.values())):
        out.append("condition 1: f image meets h/h' images")
    for v in triple.h:
        for w in triple.h_prime:
            if v != w and triple.h[v] == triple.h_prime[w]:
                out.append(f"condition 2: h({v}) = h'({w})")
    if not out and len(triple.unequal(G, c)) < p:
        out.append(f"condition 3: only {len(triple.unequal(G, c))} unequal indices, need {p}")
    return out


@dataclass(frozen=True)
class Step3Assignment:
    u_star: int
    w: tuple[int, ...]
    w_prime: tuple[int, ...]
    unequal: tuple[int, ...]  # positions within omega(j)


@dataclass(frozen=True)
class PhaseOneSuccess:
    triple: EmbeddingTriple
    unequal: tuple[int, ...]  # blueprint vertices with h/h' sums that differ


@dataclass(frozen=True)
class PhaseOneStuck:
    tau: int
    u_tau: int
    omega: tuple[int, ...]  # indices into schedule.J
    pool: tuple[int, ...]
    k_tau: int
    colorings: np.ndarray = field(repr=False)
    f: dict = field(repr=False)
    h: dict = field(repr=False)
    h_prime: dict = field(repr=False)


def partial_colorings(sched: ProcessSchedule, j: int, f: dict, c: EdgeColoring) -> np.ndarray:
    """Row ``i``: ``C_i(w) = c(w f(N_{a_i} - {u_j}))`` for every host vertex ``w``."""
    u = sched.ordered_U[j]
    om = sched.omega[j]
    ell = c.host_order
    C = np.zeros((len(om), ell), dtype=np.int64)
    for r, a in enumerate(om):
        imgs = [f[y] for y in sched.N[a] if y != u]
        if imgs:
            C[r] = c.colors[:, imgs].sum(axis=1) % c.modulus
    return C


def step3_search(u_star: int, pool: np.ndarray, C: np.ndarray, k_j: int,
                 c: EdgeColoring) -> Step3Assignment | None:
    """Try to place the current U-vertex at ``u_star`` with ``k_j`` unequal pairs.

    Returns ``None`` when the scan from ``u_star`` finds fewer than ``k_j``
    witnesses. Ties are broken towards the lowest host vertex throughout.
    """
    pool = np.asarray(pool, dtype=np.int64)
    k = C.shape[0]
    if k_j == 0:
        others = [x for x in pool.tolist() if x != u_star]
        if len(others) < k:
            raise HostTooSmall("pool too small for singleton candidates")
        w = tuple(others[:k])
        return Step3Assignment(u_star, w, w, ())

    scan = scan_vertex(u_star, pool, C, c.colors, c.modulus)
    if len(scan.witnesses) < k_j:
        return None

    chosen = sorted(scan.witnesses)[:k_j]
    Q = set(scan.witnesses.values())
    used = {u_star} | {scan.witnesses[i] for i in chosen}
    others = scan.others
    pos = {x: t for t, x in enumerate(others.tolist())}
    w = [None] * k
    wp = [None] * k
    for i in chosen:
        wp[i] = scan.witnesses[i]
        beta = scan.vals[i][pos[wp[i]]]
        cands = others[scan.vals[i] != beta].tolist()
        pick = next((x for x in cands if x not in used and x not in Q), None)
        if pick is None:
            pick = next((x for x in cands if x not in used), None)
        if pick is None:
            raise HostTooSmall("no distinct partner for an unequal pair")
        w[i] = pick
        used.add(pick)
    free = (x for x in others.tolist() if x not in used)
    for i in range(k):
        if w[i] is None:
            x = next(free, None)
            if x is None:
                raise HostTooSmall("pool too small for singleton candidates")
            w[i] = wp[i] = x
            used.add(x)
    return Step3Assignment(u_star, tuple(w), tuple(wp), tuple(chosen))


def phase_one(G: Graph, sched: ProcessSchedule, c: EdgeColoring) -> PhaseOneSuccess | PhaseOneStuck:
    ell = c.host_order
    free = np.ones(ell, dtype=bool)
    f: dict[int, int] = {}
    h: dict[int, int] = {}
    hp: dict[int, int] = {}
    unequal: list[int] = []
    needed = sched.needed()

    def take(count):
        idx = np.flatnonzero(free)[:count]
        if len(idx) < count:
            raise HostTooSmall(f"host of order {ell} exhausted during incremental embedding")
        free[idx] = False
        return idx.tolist()

    for j in range(sched.t_prime):
        u = sched.ordered_U[j]
        if u not in needed:
            continue  # embedded in bulk at the end
        om = sched.omega[j]
        if not om:
            f[u] = take(1)[0]
            continue
        k_j = sched.quotas[j]
        C = partial_colorings(sched, j, f, c)
        pool = np.flatnonzero(free)
        found = None
        for u_star in pool.tolist():
            found = step3_search(u_star, pool, C, k_j, c)
            if found is not None:
                break
        if found is None:
            _log.trace("phase1: stuck at tau=%d (u=%d, |omega|=%d, k_tau=%d, pool=%d)",
                       j, u, len(om), k_j, len(pool))
            return PhaseOneStuck(
                tau=j, u_tau=u, omega=om, pool=tuple(pool.tolist()), k_tau=k_j,
                colorings=C, f=dict(f), h=dict(h), h_prime=dict(hp),
            )
        f[u] = found.u_star
        free[found.u_star] = False
        for r, a in enumerate(om):
            v = sched.J[a]
            h[v] = found.w[r]
            hp[v] = found.w_prime[r]
            free[found.w[r]] = False
            free[found.w_prime[r]] = False
        unequal.extend(sched.J[om[r]] for r in found.unequal)

    Jset = set(sched.J)
    rest = [v for v in range(G.n) if v not in f and v not in Jset]
    for v, x in zip(rest, take(len(rest))):
        f[v] = x
    for i in range(sched.s_prime, sched.s):
        x = take(1)[0]
        h[sched.J[i]] = hp[sched.J[i]] = x
    _log.trace("phase1: success after %d steps, %d unequal indices", sched.t_prime, len(unequal))
    return PhaseOneSuccess(EmbeddingTriple(f, h, hp), tuple(sorted(unequal)))
