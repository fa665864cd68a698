"""
Average stretch on uniform random points
========================================

A small version of the simulation table; ``chromospan table`` runs the full one.
"""

from chromospan.experiments import PUBLISHED_MEANS, ExperimentConfig, run_experiment

table = run_experiment(ExperimentConfig(trials=20, n=50, k_range=(2, 4, 6, 8, 10)))

print(" k  offline  online   (reference means, 200 trials)")
for k in table.config.k_range:
    off = table.get(k, "offline_k").mean
    on = table.get(k, "online_k").mean
    ref = PUBLISHED_MEANS[50]
    print(f"{k:2d}  {off:.4f}   {on:.4f}   ({ref[(k, 'offline_k')]:.4f} / {ref[(k, 'online_k')]:.4f})")

# CSV output, the same format the CLI writes
print(table.to_csv())
