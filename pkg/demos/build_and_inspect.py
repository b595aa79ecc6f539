"""Build a few small DCells and look at their shape."""
from collections import Counter

import numpy as np

from dcell import Params, build_graph, neighbors, uid, vertex_count

# vertex counts grow doubly exponentially in k
for k in range(4):
    print(k, [vertex_count(k, n) for n in (2, 3, 4)])

g = build_graph(Params(2, 2))
g.num_vertices, g.num_edges      # 42 vertices, 63 edges
g.level_counts()                 # level 0 has t(n-1)/2 edges, every other level t/2
set(g.degrees().tolist())        # regular of degree n - 1 + k

# labels are tuples, most significant first; uid is their mixed-radix value
for lab in g.labels[:5]:
    print(lab, uid(lab, 2, 2))

# neighbors come without building anything, so big instances are fine
big = Params(4, 2)
for lab, level in neighbors((0, 0, 0, 2, 1), big):
    print(level, lab)

# the edge array is plain numpy, one row per edge (x, y, level)
e = g.edges()
print(e[:4])
print(Counter(e[:, 2].tolist()))
print(np.bincount(g.indices, minlength=g.num_vertices)[:6])
