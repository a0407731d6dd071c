"""A zero-sum copy of a forest in a random Z_3 coloring, checked by the verifier."""

# %%
from zsramsey.coloring import uniform_coloring
from zsramsey.embedder import run_pipeline
from zsramsey.embedder.driver import host_bound
from zsramsey.graph import gen_degenerate_graph
from zsramsey.oracle import verify_zero_sum

p, d = 3, 1
G = gen_degenerate_graph(30, d, 27, seed=11)
ell = host_bound(G.n, d, p)  # n + (3 + 3d) p
c = uniform_coloring(ell, p, seed=11)
print(f"forest with {G.m} edges on {G.n} vertices, host K_{ell}")

# %%
res = run_pipeline(G, p, c)
print("route :", res.route)
print("events:", res.events)

# %%
# The verifier only sees the graph, the map and the coloring.
rep = verify_zero_sum(G, res.embedding.map, c, p)
print(rep.to_text())
print("first terms:", rep.per_edge_terms[:5])
