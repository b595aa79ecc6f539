import itertools
import json

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from dcell import cycles
from dcell.certify import (
    Inconclusive, decide, exhaustive_orbits, find_automorphism, invariant_partition,
    witness_pair,
)
from dcell.claims import en3_table, paper_check, u_table
from dcell.core import Params, Topology, build_graph
from dcell.symmetry import d1_wiring, is_automorphism
from oracles import complete_graph


def _from_adj(adj):
    return Topology.from_edges(list(adj), [(x, y) for x in adj for y in adj[x] if x < y])


def test_invariant_partition_examples():
    c6 = _from_adj({i: [(i - 1) % 6, (i + 1) % 6] for i in range(6)})
    assert len(invariant_partition(c6, {6})) == 1
    part = invariant_partition(build_graph(Params(2, 2)), {6})
    # counts 1, 2, 3 all occur, so three blocks
    assert len(part) == 3
    assert part.block_of((0, 2, 0)) != part.block_of((3, 1, 1))
    assert len(invariant_partition(build_graph(Params(1, 3)), {3, 4, 5, 6})) == 1


def test_exhaustive_orbits_examples():
    assert len(exhaustive_orbits(_from_adj(complete_graph(4)))) == 1
    d22 = exhaustive_orbits(build_graph(Params(2, 2)))
    assert len(d22) == 21
    assert d22.block_of((0, 2, 0)) != d22.block_of((3, 1, 1))
    assert len(exhaustive_orbits(build_graph(Params(1, 4)))) == 1


def test_exhaustive_orbits_match_networkx():
    for k, n in [(2, 2), (1, 3)]:
        g = build_graph(Params(k, n))
        ours = exhaustive_orbits(g)
        G = nx.Graph()
        G.add_edges_from((int(x), int(y)) for x, y, _ in g.edges())
        autos = list(GraphMatcher(G, G).isomorphisms_iter())
        ref = {tuple(sorted({g.labels[a[v]] for a in autos})) for v in G}
        assert set(ours.blocks) == ref


def test_exhaustive_orbits_on_irregular_graph():
    # path 0-1-2-3 plus pendant 4 on 1: orbits {0,4}, {1}, {2}, {3}
    g = Topology.from_edges(range(5), [(0, 1), (1, 2), (2, 3), (1, 4)])
    assert set(exhaustive_orbits(g).blocks) == {(0, 4), (1,), (2,), (3,)}


def test_exhaustive_cap():
    with pytest.raises(Inconclusive):
        exhaustive_orbits(build_graph(Params(2, 3)), cap=128)


def test_find_automorphism_is_verified():
    g = build_graph(Params(1, 5))
    perm = find_automorphism(g, 0, 17)
    assert perm[0] == 17 and is_automorphism(g, perm)
    d22 = build_graph(Params(2, 2))
    assert find_automorphism(d22, d22.index((0, 2, 0)), d22.index((3, 1, 1))) is None


@pytest.mark.parametrize("k,n", [(2, 2), (1, 2), (1, 3), (1, 4)])
def test_partitions_agree(k, n):
    g = build_graph(Params(k, n))
    exact = exhaustive_orbits(g)
    inv = invariant_partition(g, {6})
    assert exact.refines(inv)
    assert (len(exact) == 1) == (len(inv) == 1)


def test_decide_examples():
    v = decide(Params(0, 5))
    assert v.decision == "Transitive"
    v = decide(Params(2, 2))
    assert v.decision == "NotTransitive"
    assert (v.witness.u, v.witness.count_u) == ((0, 2, 1), 1)
    assert v.witness.v == (3, 1, 1) and v.witness.count_v >= 2
    v = decide(Params(2, 3))
    w = v.witness
    assert (w.u, w.v) == ((0, 0, 0), (0, 1, 2))
    c1 = cycles.cycles_through(Params(1, 3), (0, 0), 6).count
    assert w.count_u > c1 == w.count_v
    v = decide(Params(1, 4))
    assert v.certificate.pairs_verified == 400 == v.certificate.pairs_total
    assert decide(Params(1, 3)).certificate.pairs_verified == 144


def test_refutations_are_reproducible():
    for k, n in itertools.product((2, 3), (2, 3, 4)):
        v = decide(Params(k, n))
        u, w = witness_pair(Params(k, n))
        assert (v.witness.u, v.witness.v) == (u, w)
        cu = cycles.cycles_through(Params(k, n), u, 6).count
        cw = cycles.cycles_through(Params(k, n), w, 6).count
        assert (cu, cw) == (v.witness.count_u, v.witness.count_v) and cu != cw


def test_certificates_reverify():
    for k, n in [(0, 3), (1, 2), (1, 4)]:
        v = decide(Params(k, n))
        g = build_graph(Params(k, n)) if k == 0 else d1_wiring(n).graph
        for a in v.certificate.generators:
            assert a.verified == "pass" and is_automorphism(g, a.perm)


def test_decide_matches_theorem_grid():
    for k, n in itertools.product(range(4), (2, 3, 4)):
        assert decide(Params(k, n)).transitive == (k <= 1)


def test_decide_sampling_above_eight():
    v = decide(Params(1, 9), sample=300)
    assert v.certificate.sampled and v.certificate.pairs_verified == 300
    assert v.certificate.pairs_total == 90 ** 2
    assert "pair verification sampled" in v.notes


def test_decide_inconclusive():
    with pytest.raises(Inconclusive):
        decide(Params(1, 9), budget=50)
    with pytest.raises(Inconclusive):
        decide(Params(3, 2), budget=10)


def test_decide_exhaustive_flag():
    v = decide(Params(2, 2), exhaustive=True)
    assert len(v.orbits) == 21


def test_verdict_json_fields():
    d = json.loads(decide(Params(2, 2)).dumps())
    assert d["decision"] == "NotTransitive"
    assert d["witness"]["u"] == "0,2,1" and d["witness"]["invariant"] == "6-cycle count"
    assert d["counts"] == {"0,2,1": 1, "3,1,1": 2}
    d = json.loads(decide(Params(1, 3)).dumps())
    assert d["decision"] == "Transitive" and d["certificate"]["pairs_verified"] == 144
    assert len(d["certificate"]["generators"]) == 2


def test_transcribed_tables():
    assert u_table(4)[2] == (0, 0, 6, 0, 0)
    assert en3_table(3, 4)[8] == ((7, 0, 1, 3), (8, 0, 1, 3))


def test_paper_check_all_pass():
    report = paper_check()
    assert report.ok, report.failing
    assert len(report.claims) >= 12
    ids = [c.id for c in report.claims]
    assert ids == sorted(ids)
    assert {"D12_IS_C6", "D22_NOT_VT"} <= set(ids)
    d12 = next(c for c in report.claims if c.id == "D12_IS_C6")
    assert d12.expected == "cycle of length 6"
