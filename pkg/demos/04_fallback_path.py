"""Constant and two-block colorings force the monochromatic fallback.

Set ZSRAMSEY_LOG=trace to watch every transition on stderr.
"""

# %%
from zsramsey import _log
from zsramsey.coloring import constant_coloring, two_block_coloring
from zsramsey.embedder import run_pipeline
from zsramsey.embedder.driver import host_bound
from zsramsey.graph import gen_degenerate_graph
from zsramsey.oracle import verify_zero_sum

_log.configure_from_env()
p, d = 3, 1
G = gen_degenerate_graph(28, d, 24, seed=2)
ell = host_bound(G.n, d, p)

# %%
# With c = 2 everywhere no candidate pair ever has different sums, so the
# incremental process stalls at its first quota and every later stage runs.
c = constant_coloring(ell, p, 2)
res = run_pipeline(G, p, c)
print(res.route, res.events)
print(res.diagnostics)
print("zero sum:", verify_zero_sum(G, res.embedding.map, c, p).zero_sum)

# %%
# Two tiny blocks across a sea of color 0: the majority color is 0 and the
# host graph lives in the big block.
c = two_block_coloring(ell, p, 2)
res = run_pipeline(G, p, c)
print(res.route, "majority", res.diagnostics.get("majority"))
print("images avoid the small block:", min(res.embedding.map) >= 2)
