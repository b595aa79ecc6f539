"""Permutations of the n+1 copies in H lift to automorphisms of D_{1,n}."""
import itertools
import random
import time

from dcell import d1_wiring, flag_of, induced_automorphism, is_automorphism, transitivity_map
from dcell.symmetry import random_wiring

s = d1_wiring(3)
print(s.graph.num_vertices, "vertices in D_{1,3}")

# every vertex is a flag: (its copy, the copy at the other end of its external edge)
for v in s.vertices[:4]:
    print(v, "->", tuple(flag_of(s, v)))

# a copy permutation moves flags around and keeps adjacency
phi = induced_automorphism(s, [1, 2, 3, 0])
print(phi.verified, bool(is_automorphism(s.graph, phi.perm)))

# one map per ordered pair of vertices
start = time.perf_counter()
s6 = d1_wiring(6)
ok = all(transitivity_map(s6, u, v).verified == "pass"
         for u, v in itertools.product(s6.vertices, repeat=2))
print("n=6 all pairs:", ok, f"{time.perf_counter() - start:.2f}s")

# the wiring does not matter
w = random_wiring(4, random.Random(7))
u, v = w.vertices[0], w.vertices[-1]
print(transitivity_map(w, u, v)(u) == v)
