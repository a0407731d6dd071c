"""Independent verification, brute-force ground truth, and the stress harness.

Nothing here reads embedder internals: the verifier recomputes the edge sum
from the graph, the map and the coloring alone, and the brute-force routines
enumerate injections and colorings directly.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .coloring import EdgeColoring, make_coloring
from .embedder import run_pipeline
from .embedder.driver import host_bound
from .errors import TooLarge, ZeroSumError
from .graph import Graph, forward_degrees, gen_degenerate_graph, min_vertices_for
from .zp import ZpElement

INJECTION_BUDGET = 10**7
EXACT_R_BUDGET = 10**8


@dataclass(frozen=True)
class VerificationReport:
    injective: bool
    in_range: bool
    edge_sum: ZpElement
    per_edge_terms: tuple[tuple[tuple[int, int], int], ...]

    @property
    def zero_sum(self) -> bool:
        return self.edge_sum.value == 0

    @property
    def ok(self) -> bool:
        return self.injective and self.in_range and self.zero_sum

    def to_text(self) -> str:
        return (
            f"injective: {str(self.injective).lower()}\n"
            f"in_range: {str(self.in_range).lower()}\n"
            f"edge_sum: {self.edge_sum.value}\n"
            f"zero_sum: {str(self.zero_sum).lower()}\n"
        )


def verify_zero_sum(G: Graph, mapping: Sequence[int], c: EdgeColoring, p: int) -> VerificationReport:
    """Recompute ``sum c(map(x) map(y))`` over E(G) with injectivity and range checks."""
    mapping = list(getattr(mapping, "map", mapping))
    ell = len(c.colors)
    in_range = len(mapping) == G.n and all(0 <= x < ell for x in mapping)
    injective = len(set(mapping)) == len(mapping)
    terms = []
    total = 0
    if in_range:
        for x, y in G.edges:
            a, b = mapping[x], mapping[y]
            col = int(c.colors[a][b]) if a != b else 0
            terms.append(((x, y), col))
            total += col
    return VerificationReport(injective, in_range, ZpElement(total, p), tuple(terms))


def injection_count(ell: int, n: int) -> int:
    return math.perm(ell, n) if n <= ell else 0


def brute_force_find(G: Graph, c: EdgeColoring, p: int, budget: int = INJECTION_BUDGET):
    """First zero-sum injection in lexicographic order of image tuples, or ``None``."""
    ell = c.host_order
    if G.n > ell:
        return None
    if injection_count(ell, G.n) > budget:
        raise TooLarge(f"{injection_count(ell, G.n)} injections exceed the budget {budget}")
    cols = c.colors.tolist()
    edges = G.edges
    for img in permutations(range(ell), G.n):
        if sum(cols[img[x]][img[y]] for x, y in edges) % p == 0:
            return img
    return None


def brute_force_degeneracy(G: Graph) -> int:
    """Minimum over all vertex orders of the largest forward degree (tiny graphs)."""
    if G.n == 0:
        return 0
    return min(max(forward_degrees(G, order)) for order in permutations(range(G.n)))


def _every_coloring_has_copy(G: Graph, p: int, ell: int) -> bool:
    slots = ell * (ell - 1) // 2
    iu = np.triu_indices(ell, 1)
    injections = list(permutations(range(ell), G.n))
    edge_idx = np.array(G.edges, dtype=np.int64).reshape(-1, 2)
    # slot index of every (image) edge for every injection: rows = injections
    slot_of = np.full((ell, ell), -1, dtype=np.int64)
    slot_of[iu] = np.arange(slots)
    slot_of = np.maximum(slot_of, slot_of.T)
    inj = np.array(injections, dtype=np.int64).reshape(len(injections), G.n)
    used = slot_of[inj[:, edge_idx[:, 0]], inj[:, edge_idx[:, 1]]] if len(edge_idx) else np.zeros((len(inj), 0), int)
    # odometer over colorings, first copy found ends the inner search
    for vals in product(range(p), repeat=slots):
        v = np.asarray(vals, dtype=np.int64)
        sums = v[used].sum(axis=1) % p if used.shape[1] else np.zeros(len(inj), int)
        if not np.any(sums == 0):
            return False
    return True


def exact_R(G: Graph, p: int, ell_max: int, budget: int = EXACT_R_BUDGET, check_monotone: bool = True):
    """Smallest ``ell <= ell_max`` such that every Z_p coloring of K_ell has a zero-sum copy.

    Returns ``None`` when no such ``ell`` exists up to ``ell_max`` (in
    particular whenever ``p`` does not divide ``m``: the constant coloring 1
    then has no zero-sum copy at any order).
    """
    if G.m % p:
        return None
    for ell in range(max(G.n, 1), ell_max + 1):
        _guard(G, p, ell, budget)
        if _every_coloring_has_copy(G, p, ell):
            if check_monotone and ell + 1 <= ell_max:
                _guard(G, p, ell + 1, budget)
                if not _every_coloring_has_copy(G, p, ell + 1):
                    raise AssertionError(f"monotonicity broken between {ell} and {ell + 1}")
            return ell
    return None


def _guard(G, p, ell, budget):
    work = p ** (ell * (ell - 1) // 2) * max(1, injection_count(ell, G.n))
    if work > budget:
        raise TooLarge(f"exact_R at ell={ell}: {work} steps exceed the budget {budget}")


# -- stress harness -------------------------------------------------------------

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(master: int, index: int) -> int:
    """Seed of trial ``index``: splitmix64 applied to ``master`` then mixed with the index."""
    return splitmix64(splitmix64(master & MASK64) ^ index) >> 1


@dataclass(frozen=True)
class StressConfig:
    d: int
    p: int
    m: int
    trials: int
    seed: int = 0
    colorings: tuple[str, ...] = ("uniform",)
    n_extra: int = 4  # n = smallest feasible n + uniform draw in [0, n_extra]
    host_slack: int = 0  # ell = n + (3+3d)p + host_slack
    mode: str = "strict"


@dataclass
class StressReport:
    config: dict
    trials: int = 0
    successes: int = 0
    failures: list = field(default_factory=list)
    routes: dict = field(default_factory=dict)
    reached_tau: int = 0
    timings: dict = field(default_factory=dict)

    def to_json(self, include_timing: bool = False) -> str:
        doc = {
            "config": self.config,
            "trials": self.trials,
            "successes": self.successes,
            "failures": self.failures,
            "routes": dict(sorted(self.routes.items())),
            "reached_tau": self.reached_tau,
        }
        if include_timing:
            doc["timings"] = dict(sorted(self.timings.items()))
        return json.dumps(doc, indent=2) + "\n"


def _run_trial(cfg: StressConfig, index: int) -> dict:
    seed = trial_seed(cfg.seed, index)
    rng = np.random.default_rng(seed)
    n = min_vertices_for(cfg.m, cfg.d) + int(rng.integers(0, cfg.n_extra + 1))
    G = gen_degenerate_graph(n, cfg.d, cfg.m, int(rng.integers(0, 2**63)))
    ell = host_bound(n, cfg.d, cfg.p) + cfg.host_slack
    mode = cfg.colorings[index % len(cfg.colorings)]
    c = make_coloring(mode, ell, cfg.p, int(rng.integers(0, 2**63)))
    out = {"index": index, "seed": seed, "coloring": mode, "timings": {}}
    try:
        res = run_pipeline(G, cfg.p, c, cfg.mode)
    except ZeroSumError as exc:
        out.update(ok=False, kind=exc.kind, message=str(exc),
                   witness=_witness(G, c, getattr(exc, "witness", None)))
        return out
    rep = verify_zero_sum(G, res.embedding.map, c, cfg.p)
    out.update(route=res.route, reached_tau="regularity" in res.events, timings=res.timings)
    if rep.ok:
        out["ok"] = True
    else:
        out.update(ok=False, kind="verification-failed", message=rep.to_text(),
                   witness=_witness(G, c, {"map": list(res.embedding.map)}))
    return out


def _witness(G, c, extra):
    w = {"graph": G.to_text(), "coloring": c.to_text()}
    if extra:
        w["detail"] = json.loads(json.dumps(extra, default=str))
    return w


def stress(cfg: StressConfig, jobs: int = 1) -> StressReport:
    """Generate ``cfg.trials`` instances, embed each, and check with the verifier.

    Per-trial seeds come from :func:`trial_seed`, so results do not depend on
    ``jobs``.
    """
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_trial, [cfg] * cfg.trials, range(cfg.trials)))
    else:
        results = [_run_trial(cfg, i) for i in range(cfg.trials)]
    report = StressReport(config=asdict(cfg))
    routes: Counter = Counter()
    for r in results:
        report.trials += 1
        for k, v in r.get("timings", {}).items():
            report.timings[k] = report.timings.get(k, 0.0) + v
        if r["ok"]:
            report.successes += 1
            routes[r["route"]] += 1
            report.reached_tau += bool(r["reached_tau"])
        else:
            report.failures.append({"seed": r["seed"], "index": r["index"], "coloring": r["coloring"],
                                    "kind": r["kind"], "message": r["message"], "witness": r["witness"]})
    report.routes = dict(routes)
    return report
