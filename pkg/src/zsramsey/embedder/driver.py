"""Top-level pipeline: blueprint, two-phase embedding, fallback, sum correction."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from .. import _log
from ..coloring import EdgeColoring, check_modulus
from ..errors import HypothesisViolation, HostTooSmall, NotZeroSum, violation
from ..graph import DegeneracyOrdering, Graph, degeneracy_order, extract_blueprint
from ..zp import ChoicePair, is_prime, reachable_sums, select_sequence
from .mono import Embedding, MonoRegion, mono_embed_into, mono_region
from .phase_one import EmbeddingTriple, PhaseOneSuccess, phase_one, triple_violations
from .phase_two import PhaseTwoSuccess, phase_two_attempt
from .regularity import RegularityTable, regularity_analysis
from .schedule import ProcessSchedule, build_schedule

ROUTES = ("phase1", "phase2-A", "phase2-B", "mono")


@dataclass
class TwoPhaseOutcome:
    route: str
    triple: EmbeddingTriple | None = None
    embedding: Embedding | None = None
    events: list[str] = field(default_factory=list)
    table: RegularityTable | None = None
    mono: MonoRegion | None = None
    diagnostics: dict = field(default_factory=dict)


@dataclass
class PipelineResult:
    embedding: Embedding
    route: str
    events: list[str]
    hypotheses_hold: bool
    warnings: list[str]
    diagnostics: dict
    timings: dict


@contextmanager
def _timed(timings: dict | None, key: str):
    t0 = time.perf_counter()
    try:
        yield
    finally:
        if timings is not None:
            timings[key] = timings.get(key, 0.0) + time.perf_counter() - t0


def host_bound(n: int, d: int, p: int) -> int:
    return n + (3 + 3 * d) * p


def check_hypotheses(G: Graph, p: int, d: int, ell: int) -> list[str]:
    """Names of the violated hypotheses of the zero-sum bound (empty when all hold)."""
    out = []
    m = G.m
    if not is_prime(p):
        out.append(f"p={p} is not prime")
        return out
    if m % p:
        out.append(f"p={p} does not divide m={m}")
    if 2 * d >= p:
        out.append(f"2d={2 * d} >= p={p}")
    if d > 0 and 2 * p * d * (d + 1) ** 2 > m:
        out.append(f"p={p} > m/(2d(d+1)^2) = {m}/{2 * d * (d + 1) ** 2}")
    if ell < host_bound(G.n, d, p):
        out.append(f"host order {ell} < n + (3+3d)p = {host_bound(G.n, d, p)}")
    return out


def embed_two_phase(G: Graph, sched: ProcessSchedule, c: EdgeColoring, d: int,
                 order: DegeneracyOrdering | None = None, *, hypotheses_hold: bool = True,
                 timings: dict | None = None) -> TwoPhaseOutcome:
    """Either a valid triple ``(f, h, h')`` or a monochromatic embedding of ``G``."""
    n = G.n
    events = ["phase1"]
    with _timed(timings, "phase1"):
        first = phase_one(G, sched, c)
    if isinstance(first, PhaseOneSuccess):
        return TwoPhaseOutcome("phase1", triple=first.triple, events=events)

    events.append("stuck")
    _log.trace("transition: phase1 -> regularity (tau=%d)", first.tau)
    with _timed(timings, "regularity"):
        table = regularity_analysis(first, c, n, d, hypotheses_hold=hypotheses_hold)
    events.append("regularity")
    diag = {"tau": table.tau, "k": table.k, "k_prime": table.k_prime, "pool": len(table.pool)}

    with _timed(timings, "phase2"):
        a = phase_two_attempt(table, table.pool, sched, c, G, d, hypotheses_hold=hypotheses_hold)
    events.append("phase2-A")
    diag["rho_A"] = a.state.rho
    if isinstance(a, PhaseTwoSuccess):
        _log.trace("transition: phase2-A success")
        return TwoPhaseOutcome("phase2-A", triple=a.triple, events=events, table=table, diagnostics=diag)
    diag["region_A"] = len(a.region)
    events.append("region-A")

    with _timed(timings, "phase2"):
        b = phase_two_attempt(table, a.region, sched, c, G, d, hypotheses_hold=hypotheses_hold)
    events.append("phase2-B")
    diag["rho_B"] = b.state.rho
    if isinstance(b, PhaseTwoSuccess):
        _log.trace("transition: phase2-B success")
        return TwoPhaseOutcome("phase2-B", triple=b.triple, events=events, table=table, diagnostics=diag)
    diag["region_B"] = len(b.region)
    events.append("region-B")

    _log.trace("transition: phase2 -> mono region (|R(A)|=%d |R(B)|=%d)", len(a.region), len(b.region))
    with _timed(timings, "mono"):
        mono = mono_region(a.region, b.region, table, c, n, d, hypotheses_hold=hypotheses_hold)
        events.append("mono-region")
        emb = mono_embed_into(G, mono, order)
    events.append("mono-embed")
    g = mono.majority
    bad = [(x, y) for x, y in G.edges if c.colors[emb.map[x], emb.map[y]] != g]
    if bad:
        raise violation(hypotheses_hold, "monochromatic embedding uses an off-color edge",
                        {"edges": bad, "g": g})
    diag.update(mono_vertices=len(mono.vertices), majority=g)
    return TwoPhaseOutcome("mono", embedding=emb, events=events, table=table, mono=mono,
                         diagnostics=diag)


def run_pipeline(G: Graph, p: int, c: EdgeColoring, mode: str = "strict") -> PipelineResult:
    """Full zero-sum embedding with diagnostics; see :func:`zero_sum_embed`."""
    if mode not in ("strict", "permissive"):
        raise ValueError(f"mode must be 'strict' or 'permissive', not {mode!r}")
    if not is_prime(p):
        raise HypothesisViolation([f"p={p} is not prime"])
    check_modulus(c, p)
    timings: dict[str, float] = {}
    order = degeneracy_order(G)
    d = order.degeneracy
    ell = c.host_order
    problems = check_hypotheses(G, p, d, ell)
    if problems and mode == "strict":
        raise HypothesisViolation(problems)
    ok = not problems
    if problems:
        _log.logger.warning("permissive run outside hypotheses: %s", "; ".join(problems))

    if G.m == 0:
        if ell < G.n:
            raise HostTooSmall(f"host order {ell} < n = {G.n}")
        emb = Embedding(tuple(range(G.n)), "edgeless", tuple(problems))
        return PipelineResult(emb, "edgeless", [], ok, problems, {}, timings)

    bp = extract_blueprint(G, d, 2 * p, order)
    sched = build_schedule(bp, p)
    _log.trace("blueprint: s=%d extracted=%d t=%d t'=%d s'=%d", bp.s, bp.extracted,
               sched.t, sched.t_prime, sched.s_prime)
    out = embed_two_phase(G, sched, c, d, order, hypotheses_hold=ok, timings=timings)

    if out.embedding is not None:
        emb = out.embedding
    else:
        with _timed(timings, "cd"):
            emb = _correct_sum(G, sched, out.triple, c, p, ok)
    total = sum(int(c.colors[emb.map[x], emb.map[y]]) for x, y in G.edges) % p
    if total != 0 or len(set(emb.map)) != G.n:
        msg = f"final embedding is not a zero-sum injection (sum {total})"
        if ok:
            raise violation(True, msg, {"map": list(emb.map)})
        raise NotZeroSum(msg)
    emb = Embedding(emb.map, out.route, tuple(problems))
    _log.logger.info("zero-sum embedding via %s", out.route)
    return PipelineResult(emb, out.route, out.events, ok, problems, out.diagnostics, timings)


def _correct_sum(G: Graph, sched: ProcessSchedule, triple: EmbeddingTriple, c: EdgeColoring,
                 p: int, ok: bool) -> Embedding:
    bad = triple_violations(G, sched.J, triple, c, p)
    if bad:
        raise violation(ok, "embedding triple fails its conditions: " + "; ".join(bad),
                        {"violations": bad})
    Jset = set(sched.J)
    sums = triple.choice_sums(G, c)
    pairs = [ChoicePair.of(*sums[v], p) for v in sched.J]
    base = sum(int(c.colors[triple.f[x], triple.f[y]]) for x, y in G.edges
               if x not in Jset and y not in Jset)
    table = reachable_sums(pairs)
    choice = select_sequence(pairs, -base, table)
    image = [0] * G.n
    for v, x in triple.f.items():
        image[v] = x
    for v, pick in zip(sched.J, choice):
        image[v] = triple.h_prime[v] if pick else triple.h[v]
    return Embedding(tuple(image))


def zero_sum_embed(G: Graph, p: int, c: EdgeColoring, mode: str = "strict") -> Embedding:
    """Injection of ``G`` into the host of ``c`` whose edge colors sum to 0 mod ``p``.

    In ``strict`` mode every hypothesis (``p`` prime, ``p | m``, ``2d < p``,
    ``p <= m / (2d(d+1)^2)``, host order at least ``n + (3+3d)p``) is
    checked up front. ``permissive`` runs the same pipeline regardless and
    either returns a checked zero-sum embedding, with the violated hypotheses
    listed in ``warnings``, or raises a typed error.
    """
    return run_pipeline(G, p, c, mode).embedding
