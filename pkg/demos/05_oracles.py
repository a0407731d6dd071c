"""Brute-force ground truth on tiny instances."""

# %%
from zsramsey.coloring import EdgeColoring, uniform_coloring
from zsramsey.embedder import run_pipeline
from zsramsey.errors import ZeroSumError
from zsramsey.graph import Graph
from zsramsey.oracle import brute_force_find, exact_R

P3 = Graph(3, [(0, 1), (1, 2)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])

# %%
# Smallest host order at which every 2-coloring has an even copy
for name, G in (("P_3", P3), ("C_4", C4)):
    print(name, "R(G, Z_2) =", exact_R(G, 2, 5))

# %%
# One odd edge in a triangle: the oracle walks injections in lexicographic order
c = EdgeColoring.from_function(3, 2, lambda x, y: int((x, y) == (0, 1)))
print("first even P_3:", brute_force_find(P3, c, 2))

# %%
# The star K_{1,4} at p = 2 is small enough to compare engine and oracle
star = Graph(5, [(0, i) for i in range(1, 5)])
for seed in range(5):
    c = uniform_coloring(8, 2, seed)
    try:
        emb = run_pipeline(star, 2, c, mode="permissive").embedding.map
    except ZeroSumError as exc:
        emb = exc.kind
    print(seed, "engine:", emb, " oracle:", brute_force_find(star, c, 2))
