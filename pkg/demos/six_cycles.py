"""Six-cycle counts separate vertices once k reaches 2."""
from collections import Counter

from dcell import Params, build_graph, cycles_through, six_cycle_census
from dcell.cycles import format_witness

p = Params(2, 2)
census = six_cycle_census(build_graph(p))
print(Counter(c.count for c in census.values()))      # not constant, so not vertex-transitive

res = cycles_through(p, (3, 1, 1), 6, collect=True)
print(res.count)
for w in res.witnesses:
    print(format_witness(w))

# the implicit oracle handles k=4 without materializing 10^7 vertices
for k in (2, 3, 4):
    print(k, cycles_through(Params(k, 2), (0,) * (k - 1) + (2, 1), 6).count)

# n >= 3: (0..0,0,0) gains cycles from the top level, (0..0,1,2) does not
for n in (3, 4):
    base = cycles_through(Params(1, n), (0, 0), 6).count
    print(n, base, cycles_through(Params(2, n), (0, 0, 0), 6).count,
          cycles_through(Params(2, n), (0, 1, 2), 6).count)
