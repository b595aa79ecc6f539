"""Independent reference implementations used only by the tests."""
import itertools
from functools import lru_cache


@lru_cache(maxsize=None)
def recursive_vertices(k, n):
    """Labels of D_{k,n} in construction order; no uid arithmetic involved."""
    if k == 0:
        return tuple((a,) for a in range(n))
    inner = recursive_vertices(k - 1, n)
    return tuple((i,) + v for i in range(len(inner) + 1) for v in inner)


def recursive_edges(k, n):
    """Edge set ``{frozenset({x, y}): level}`` by enumerating every copy pair (a, b)."""
    if k == 0:
        return {frozenset(((a,), (b,))): 0 for a, b in itertools.combinations(range(n), 2)}
    inner_v = recursive_vertices(k - 1, n)
    inner_e = recursive_edges(k - 1, n)
    out = {}
    for i in range(len(inner_v) + 1):
        for e, lev in inner_e.items():
            out[frozenset((i,) + x for x in e)] = lev
    for a, b in itertools.combinations(range(len(inner_v) + 1), 2):
        out[frozenset(((a,) + inner_v[b - 1], (b,) + inner_v[a]))] = k
    return out


def naive_cycle_count(adj, root, length):
    """Count cycles through root by trying every vertex subset and ordering."""
    others = [v for v in adj if v != root]
    total = 0
    for subset in itertools.combinations(others, length - 1):
        for order in itertools.permutations(subset):
            cyc = (root,) + order
            if all(cyc[(i + 1) % length] in adj[cyc[i]] for i in range(length)):
                total += 1
    return total // 2


def all_automorphisms(adj):
    verts = list(adj)
    edges = {frozenset((x, y)) for x in adj for y in adj[x]}
    for img in itertools.permutations(verts):
        m = dict(zip(verts, img))
        if all(frozenset((m[x], m[y])) in edges for x, y in map(tuple, edges)):
            yield m


def cycle_graph(n):
    return {i: [(i - 1) % n, (i + 1) % n] for i in range(n)}


def complete_graph(n):
    return {i: [j for j in range(n) if j != i] for i in range(n)}


def k33():
    return {i: [j for j in range(6) if (j < 3) != (i < 3)] for i in range(6)}
