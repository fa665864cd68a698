"""
Coloring points as they arrive
==============================

"""

import numpy as np

from chromospan import bound_for
from chromospan.online import create

k = 4
colorer = create(k)
pts = np.random.default_rng(3).random((40, 2))

# The stretch bound holds after every single insertion, not only at the end
worst = 1.0
for i, p in enumerate(pts):
    color = colorer.insert(p)
    s = colorer.finalize_stretch().stretch
    worst = max(worst, s)
    if i < 5:
        print(f"point {i} -> color {color}, neighbors {colorer.last_neighbors}, stretch so far {s:.4f}")

print(f"worst prefix stretch {worst:.4f} <= bound {bound_for('online', k):.4f}")
