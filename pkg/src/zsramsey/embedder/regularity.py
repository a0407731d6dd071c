"""The majority/witness scan and the regularity table built from it.

For a candidate vertex ``u`` and index ``i`` the scan looks at the values
``c(uw) + C_i(w)`` over the pool. Indices whose values are constant once a
small exception set is removed land in ``I``; every other index contributes a
witness vertex to ``Q``. Incremental embedding uses the scan as a search
(enough witnesses means an assignment exists) and the fallback uses it as a
certificate (too few witnesses for every ``u`` means ``u`` is regular).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import _log
from ..errors import TheoremViolation, violation


@dataclass(frozen=True)
class VertexScan:
    u: int
    others: np.ndarray  # pool without u, ascending
    vals: np.ndarray  # k x len(others), c(uw) + C_i(w) mod p
    gamma: np.ndarray  # majority value per index (smallest on ties)
    I: tuple[int, ...]
    witnesses: dict[int, int]  # index -> deviating vertex, for indices outside I

    @property
    def Q(self) -> tuple[int, ...]:
        return tuple(self.witnesses[i] for i in sorted(self.witnesses))


def scan_vertex(u: int, pool: np.ndarray, C: np.ndarray, colors: np.ndarray, p: int) -> VertexScan:
    others = pool[pool != u]
    k = C.shape[0]
    vals = (colors[u, others][None, :] + C[:, others]) % p
    gamma = np.array(
        [np.bincount(row, minlength=p).argmax() if row.size else 0 for row in vals],
        dtype=np.int64,
    ).reshape(k)
    taken: set[int] = set()
    witnesses: dict[int, int] = {}
    I = []
    for i in range(k):
        w = None
        for cand in others[vals[i] != gamma[i]].tolist():
            if cand not in taken:
                w = cand
                break
        if w is None:
            I.append(i)
        else:
            witnesses[i] = w
            taken.add(w)
    return VertexScan(u, others, vals, gamma, tuple(I), witnesses)


@dataclass(frozen=True)
class RegularityTable:
    """Per-vertex regularity data on the pool left when the process stalled.

    ``colorings[i, w]`` is ``C_i(w)``, the color sum from ``w`` to the already
    embedded part of the ``i``-th neighbourhood in ``omega``. For each pool
    vertex ``u``: ``c(uw) + C_i(w)`` is constant over ``w in R_u`` for every
    ``i in I[u]``, where ``R_u = pool - L[u]``.
    """

    tau: int
    u_tau: int
    omega: tuple[int, ...]
    pool: tuple[int, ...]
    k_tau: int
    colorings: np.ndarray = field(repr=False)
    I: dict = field(repr=False)
    L: dict = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.omega)

    @property
    def k_prime(self) -> int:
        return self.k_tau - 1

    def R(self, u: int) -> frozenset[int]:
        return frozenset(self.pool) - self.L[u]

    def pool_array(self) -> np.ndarray:
        return np.asarray(self.pool, dtype=np.int64)


def regularity_analysis(stuck, c, n: int, d: int, *, validate: bool = True,
                        hypotheses_hold: bool = True) -> RegularityTable:
    """Certify every pool vertex as regular and build the table.

    ``stuck`` is the :class:`PhaseOneStuck` returned by :func:`phase_one`.
    With ``validate`` every table invariant is checked and a failure raises
    :class:`TheoremViolation` (the pool-size bound raises
    :class:`HostTooSmall` instead when the instance is below the hypotheses).
    """
    p = c.modulus
    colors = c.colors
    pool = np.asarray(stuck.pool, dtype=np.int64)
    C = stuck.colorings
    k = C.shape[0]
    k_tau = stuck.k_tau
    I: dict[int, frozenset[int]] = {}
    L: dict[int, frozenset[int]] = {}
    for u in pool.tolist():
        scan = scan_vertex(u, pool, C, colors, p)
        if validate and len(scan.Q) >= k_tau:
            raise TheoremViolation(
                "pool vertex is not regular: the stall was declared prematurely",
                {"tau": stuck.tau, "u": u, "Q": list(scan.Q), "k_tau": k_tau},
            )
        I[u] = frozenset(scan.I)
        L[u] = frozenset(scan.Q) | {u}
        if validate:
            _check_vertex(u, scan, C, p, k, k_tau, stuck.tau)

    table = RegularityTable(
        tau=stuck.tau, u_tau=stuck.u_tau, omega=stuck.omega, pool=tuple(pool.tolist()),
        k_tau=k_tau, colorings=C, I=I, L=L,
    )
    k_prime = k_tau - 1
    bound = n + p + (2 + 3 * d) * k_prime
    if validate and len(pool) < bound:
        raise violation(hypotheses_hold, f"|R(tau)| = {len(pool)} < n + p + (2+3d)k' = {bound}",
                        {"tau": stuck.tau, "pool_size": len(pool), "bound": bound}, size_bound=True)
    _log.trace("regularity: tau=%d k=%d k_tau=%d k'=%d |R(tau)|=%d",
               stuck.tau, k, k_tau, k_prime, len(pool))
    return table


def _check_vertex(u, scan: VertexScan, C, p, k, k_tau, tau):
    I = scan.I
    Lu = set(scan.Q) | {u}
    witness = {"tau": tau, "u": u, "I": list(I), "L": sorted(Lu)}
    if not 2 * len(I) > k:
        raise TheoremViolation("|I_u| <= k/2", witness)
    if len(Lu) > k_tau:
        raise TheoremViolation("|L_u| > k_tau", witness)
    keep = ~np.isin(scan.others, list(Lu))
    Ru = scan.others[keep]
    for i in I:
        if np.unique(scan.vals[i][keep]).size > 1:
            raise TheoremViolation("c(uw) + C_i(w) not constant on R_u", {**witness, "i": i})
    # pairwise differences of the vertex colorings agree on R_u
    if len(I) > 1 and Ru.size:
        base = C[I[0], Ru]
        for j in I[1:]:
            diff = (C[j, Ru] - base) % p
            if np.unique(diff).size > 1:
                raise TheoremViolation("C_i - C_j not constant on R_u", {**witness, "i": I[0], "j": j})
