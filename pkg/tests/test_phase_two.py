import numpy as np
import pytest

from zsramsey.coloring import affine_coloring, constant_coloring
from zsramsey.embedder import (
    PhaseTwoRegion,
    PhaseTwoSuccess,
    RegularityTable,
    build_schedule,
    phase_one,
    phase_two_attempt,
    regularity_analysis,
    triple_violations,
)
from zsramsey.embedder.driver import _correct_sum, host_bound
from zsramsey.errors import PoolExhausted
from zsramsey.graph import extract_blueprint
from zsramsey.oracle import verify_zero_sum

from conftest import random_graph


def instance(seed, p=3, d=1, m=24):
    G = random_graph(d, m, seed)
    sched = build_schedule(extract_blueprint(G, d, 2 * p), p)
    return G, sched, host_bound(G.n, d, p)


def forced_table(sched, ell, I_of=lambda u: frozenset({0, 1})):
    """Stall declared by hand at the first step: every vertex regular with no exceptions."""
    pool = tuple(range(ell))
    return RegularityTable(
        tau=0, u_tau=sched.ordered_U[0], omega=(0, 1), pool=pool, k_tau=1,
        colorings=np.zeros((2, ell), dtype=np.int64),
        I={u: I_of(u) for u in pool}, L={u: frozenset({u}) for u in pool},
    )


def test_constant_coloring_gets_stuck_first():
    for seed in range(5):
        G, sched, ell = instance(seed)
        c = constant_coloring(ell, 3, 1)
        table = regularity_analysis(phase_one(G, sched, c), c, G.n, 1)
        out = phase_two_attempt(table, table.pool, sched, c, G, 1)
        assert isinstance(out, PhaseTwoRegion)
        assert out.i_star == 0
        # second attempt inside the first region also stalls and keeps constancy
        again = phase_two_attempt(table, out.region, sched, c, G, 1)
        assert isinstance(again, PhaseTwoRegion)
        assert again.region


def test_forced_stall_on_affine_succeeds():
    for seed in range(10):
        G, sched, ell = instance(seed)
        c = affine_coloring(ell, 3)
        table = forced_table(sched, ell)
        out = phase_two_attempt(table, table.pool, sched, c, G, 1)
        assert isinstance(out, PhaseTwoSuccess)
        assert triple_violations(G, sched.J, out.triple, c, 3) == []
        sums = out.triple.choice_sums(G, c)
        assert all(sums[v][0] != sums[v][1] for v in sched.J[:3])
        emb = _correct_sum(G, sched, out.triple, c, 3, True)
        assert verify_zero_sum(G, emb.map, c, 3).ok


def test_small_regular_class_exhausts():
    G, sched, ell = instance(0)
    table = forced_table(sched, ell, I_of=lambda u: frozenset({0}) if u == 0 else frozenset())
    with pytest.raises(PoolExhausted):
        phase_two_attempt(table, table.pool, sched, affine_coloring(ell, 3), G, 1)
