"""Decide vertex-transitivity and look at the evidence."""
from dcell import Params, build_graph, decide, exhaustive_orbits, paper_check

for k in range(4):
    print(k, [decide(Params(k, n)).decision for n in (2, 3, 4)])

v = decide(Params(2, 3))
print(v.witness)
print(v.dumps()[:200])

orbits = exhaustive_orbits(build_graph(Params(2, 2)))
print(len(orbits), "orbits in D_{2,2}")

report = paper_check()
print(report.ok, len(report.claims))
for c in report.claims[:3]:
    print(c.id, c.expected, c.computed, c.status)
