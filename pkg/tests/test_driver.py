import pytest

from zsramsey.coloring import affine_coloring, constant_coloring, make_coloring, uniform_coloring
from zsramsey.embedder import build_schedule, embed_two_phase, run_pipeline, zero_sum_embed
from zsramsey.embedder.driver import check_hypotheses, host_bound
from zsramsey.errors import HypothesisViolation, ModulusMismatch, ZeroSumError
from zsramsey.graph import Graph, degeneracy_order, extract_blueprint
from zsramsey.oracle import verify_zero_sum

from conftest import random_graph


def test_constant_one_forest():
    G = random_graph(1, 24, 0)
    c = constant_coloring(host_bound(G.n, 1, 3), 3, 1)
    res = run_pipeline(G, 3, c)
    assert res.route == "mono"
    assert verify_zero_sum(G, res.embedding.map, c, 3).ok


def test_p_not_dividing_m():
    G = random_graph(1, 24, 0)
    with pytest.raises(HypothesisViolation) as exc:
        zero_sum_embed(G, 5, uniform_coloring(host_bound(G.n, 1, 5), 5, 0))
    assert any("does not divide" in v for v in exc.value.violations)


def test_non_prime_and_modulus_mismatch():
    G = random_graph(1, 24, 0)
    with pytest.raises(HypothesisViolation):
        zero_sum_embed(G, 4, uniform_coloring(50, 3, 0))
    with pytest.raises(ModulusMismatch):
        zero_sum_embed(G, 3, uniform_coloring(50, 5, 0))


def test_hypothesis_list():
    G = random_graph(1, 24, 0)
    assert check_hypotheses(G, 3, 1, host_bound(G.n, 1, 3)) == []
    bad = check_hypotheses(G, 3, 1, host_bound(G.n, 1, 3) - 1)
    assert len(bad) == 1 and "host order" in bad[0]
    assert any("2d" in v for v in check_hypotheses(random_graph(2, 180, 0), 3, 2, 999))


def test_affine_goes_through_phase_one():
    G = random_graph(1, 27, 3)
    c = affine_coloring(host_bound(G.n, 1, 3), 3)
    sched = build_schedule(extract_blueprint(G, 1, 6), 3)
    out = embed_two_phase(G, sched, c, 1, degeneracy_order(G))
    assert out.route == "phase1" and out.triple is not None


def test_edgeless_graph():
    res = run_pipeline(Graph(4, []), 3, uniform_coloring(4, 3, 0), mode="permissive")
    assert res.embedding.map == (0, 1, 2, 3)


@pytest.mark.parametrize("mode", ["uniform", "constant:0", "constant:1", "constant:2", "two-block:2"])
def test_below_bound_never_lies(mode):
    """One vertex short of the bound: a verified embedding or a typed error, never a wrong answer."""
    for seed in range(10):
        G = random_graph(1, 24, seed)
        c = make_coloring(mode, host_bound(G.n, 1, 3) - 1, 3, seed)
        try:
            res = run_pipeline(G, 3, c, mode="permissive")
        except ZeroSumError as exc:
            assert exc.kind != "theorem-violation"
            continue
        assert not res.hypotheses_hold and res.warnings
        assert verify_zero_sum(G, res.embedding.map, c, 3).ok


def test_trace_log_records_transitions(caplog):
    G = random_graph(1, 24, 1)
    c = constant_coloring(host_bound(G.n, 1, 3), 3, 0)
    with caplog.at_level(5, logger="zsramsey"):
        run_pipeline(G, 3, c)
    text = caplog.text
    for needle in ("phase1 -> regularity", "k'=", "rho=", "phase2 -> mono region", "via mono"):
        assert needle in text


def test_strict_d2_run():
    G = random_graph(2, 180, 2)
    d = degeneracy_order(G).degeneracy
    c = uniform_coloring(host_bound(G.n, d, 5), 5, 2)
    res = run_pipeline(G, 5, c)
    assert verify_zero_sum(G, res.embedding.map, c, 5).ok
