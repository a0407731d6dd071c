"""Seeded stress runs with a JSON report."""

# %%
from zsramsey.oracle import StressConfig, stress

cfg = StressConfig(d=1, p=3, m=24, trials=30, seed=5,
                   colorings=("uniform", "affine", "constant:1", "two-block:2"))
rep = stress(cfg, jobs=2)
print(f"{rep.successes}/{rep.trials} verified, routes {rep.routes}, {rep.reached_tau} reached the stall")

# %%
# the report without timings is byte-identical for a fixed seed
print(rep.to_json()[:400])
print({k: round(v, 3) for k, v in rep.timings.items()})
