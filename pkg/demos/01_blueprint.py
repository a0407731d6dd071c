"""Degeneracy orderings, blueprint extraction and the visiting schedule."""

# %%
from zsramsey.embedder import build_schedule
from zsramsey.graph import (
    blueprint_lower_bound,
    degeneracy_order,
    extract_blueprint,
    gen_degenerate_graph,
    greedy_blueprint_set,
)

# a random 2-degenerate graph with exactly 180 edges
G = gen_degenerate_graph(100, 2, 180, seed=1)
order = degeneracy_order(G)
print(f"n={G.n} m={G.m} degeneracy={order.degeneracy}")

# %%
# The greedy independent set visits low-degree vertices in degeneracy order.
# Its size never drops below ceil(m / (d (d+1)^2)).
d = order.degeneracy
J = greedy_blueprint_set(G, d, order)
print(f"greedy set: {len(J)} vertices, guaranteed at least {blueprint_lower_bound(G.m, d)}")

# %%
# Keep the first 2p of them and build the schedule for p = 5
p = 5
bp = extract_blueprint(G, d, 2 * p, order)
sched = build_schedule(bp, p)
print("J          ", sched.J)
print("U in order ", sched.ordered_U)
print("omega sizes", [len(w) for w in sched.omega])
print("quotas     ", sched.quotas, "sum =", sum(sched.quotas))
print(f"t'={sched.t_prime}  s'={sched.s_prime}")
