from __future__ import annotations

from dataclasses import dataclass

from ..graph import Blueprint


@dataclass(frozen=True)
class ProcessSchedule:
    """Visiting order and per-step quotas for the incremental embedding.

    Positions are 0-based: step ``j`` handles ``ordered_U[j]``. ``J`` is
    re-indexed by the position of each element's last neighbour, so the
    elements handled within the first ``t_prime`` steps form the prefix
    ``J[:s_prime]``. ``omega[j]`` lists indices into ``J``.
    """

    p: int
    J: tuple[int, ...]
    N: tuple[tuple[int, ...], ...]
    ordered_U: tuple[int, ...]
    degree_into_J: dict
    last_index: tuple[int, ...]
    omega: tuple[tuple[int, ...], ...]
    t_prime: int
    quotas: tuple[int, ...]
    s_prime: int
    Z: frozenset[int]

    @property
    def s(self) -> int:
        return len(self.J)

    @property
    def t(self) -> int:
        return len(self.ordered_U)

    @property
    def U(self) -> frozenset[int]:
        return frozenset(self.ordered_U)

    def psi(self, upto: int) -> int:
        """Sum of ``ceil(|omega(j)|/2)`` over the first ``upto`` positions."""
        return sum((len(w) + 1) // 2 for w in self.omega[:upto])

    def needed(self) -> frozenset[int]:
        """U-vertices adjacent to some element of ``J[:s_prime]``."""
        return frozenset(u for i in range(self.s_prime) for u in self.N[i])


def build_schedule(bp: Blueprint, p: int) -> ProcessSchedule:
    s = bp.s
    if s < 2 * p:
        raise ValueError(f"schedule needs s >= 2p = {2 * p}, blueprint has {s}")
    deg_J: dict[int, int] = {}
    for nb in bp.neighborhoods:
        for u in nb:
            deg_J[u] = deg_J.get(u, 0) + 1
    ordered_U = tuple(sorted(deg_J, key=lambda u: (-deg_J[u], u)))
    pos = {u: j for j, u in enumerate(ordered_U)}
    last = [max(pos[u] for u in nb) for nb in bp.neighborhoods]

    # stable re-index of J by last-neighbour position
    perm = sorted(range(s), key=lambda i: (last[i], i))
    J = tuple(bp.J[i] for i in perm)
    N = tuple(bp.neighborhoods[i] for i in perm)
    last_index = tuple(last[i] for i in perm)

    omega_lists: list[list[int]] = [[] for _ in ordered_U]
    for i, j in enumerate(last_index):
        omega_lists[j].append(i)
    omega = tuple(tuple(w) for w in omega_lists)

    psi = 0
    quotas = []
    t_prime = 0
    for j, w in enumerate(omega):
        step = (len(w) + 1) // 2
        if psi + step >= p:
            quotas.append(p - psi)
            t_prime = j + 1
            break
        quotas.append(step)
        psi += step
    else:  # pragma: no cover - psi(t) >= p whenever s >= 2p
        raise AssertionError("psi never reached p")

    s_prime = sum(len(w) for w in omega[:t_prime])
    return ProcessSchedule(
        p=p,
        J=J,
        N=N,
        ordered_U=ordered_U,
        degree_into_J=deg_J,
        last_index=last_index,
        omega=omega,
        t_prime=t_prime,
        quotas=tuple(quotas),
        s_prime=s_prime,
        Z=bp.Z,
    )
