"""The graph H: n+1 copies of K_n with one edge between every pair of copies.

A vertex is ``(copy, position)``.  Every vertex has exactly one neighbor
outside its copy, so it is also named by its *flag* ``(copy, partner)``,
where ``partner`` is the copy holding that external neighbor.  Permuting
copy indices acts on flags, and that action is always an automorphism.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .core import ParameterError, Topology, format_label

Vertex = tuple[int, int]

PROVENANCES = ("induced-by-copy-permutation", "exhaustive-search", "external",
               "literal-case")


class Flag(NamedTuple):
    copy: int
    partner: int


@dataclass(frozen=True, eq=False)
class HSpec:
    """``wiring[(a, b)] = (j_a, j_b)`` for ``a < b``: position ``j_a`` of copy
    ``a`` is joined to position ``j_b`` of copy ``b``."""
    n: int
    wiring: Mapping[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        n = self.n
        if n < 2:
            raise ParameterError(f"n must be >= 2, got {n}")
        pairs = set(itertools.combinations(range(n + 1), 2))
        if set(self.wiring) != pairs:
            raise ParameterError("wiring must cover every copy pair (a, b), a < b")
        for a in range(n + 1):
            used = sorted(self._position(a, b) for b in range(n + 1) if b != a)
            if used != list(range(n)):
                raise ParameterError(
                    f"copy {a}: external edges do not use each position once")

    def _position(self, a: int, b: int) -> int:
        return self.wiring[(a, b)][0] if a < b else self.wiring[(b, a)][1]

    @cached_property
    def _partner_of(self) -> dict[Vertex, int]:
        return {(a, self._position(a, b)): b
                for a in range(self.n + 1) for b in range(self.n + 1) if a != b}

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple((i, p) for i in range(self.n + 1) for p in range(self.n))

    def external(self, v: Vertex) -> Vertex:
        b = self._partner_of[v]
        return (b, self._position(b, v[0]))

    @cached_property
    def graph(self) -> Topology:
        n = self.n
        edges = [((i, p), (i, q), 0) for i in range(n + 1)
                 for p, q in itertools.combinations(range(n), 2)]
        edges += [((a, ja), (b, jb), 1) for (a, b), (ja, jb) in self.wiring.items()]
        return Topology.from_edges(self.vertices, edges)

    def index(self, v: Vertex) -> int:
        return v[0] * self.n + v[1]


def d1_wiring(n: int) -> HSpec:
    """The wiring of ``D_{1,n}``: position ``b-1`` of copy ``a`` meets position ``a`` of copy ``b``."""
    if n < 2:
        raise ParameterError(f"n must be >= 2, got {n}")
    return HSpec(n, {(a, b): (b - 1, a)
                     for a, b in itertools.combinations(range(n + 1), 2)})


def random_wiring(n: int, rng: random.Random) -> HSpec:
    """A uniformly random valid wiring: each copy assigns its positions to the other copies."""
    assign = {}
    for a in range(n + 1):
        others = [b for b in range(n + 1) if b != a]
        rng.shuffle(others)
        assign.update({(a, b): p for p, b in enumerate(others)})
    return HSpec(n, {(a, b): (assign[(a, b)], assign[(b, a)])
                     for a, b in itertools.combinations(range(n + 1), 2)})


def _check_vertex(spec: HSpec, v) -> Vertex:
    v = tuple(v)
    if len(v) != 2 or not (0 <= v[0] <= spec.n and 0 <= v[1] < spec.n):
        raise ParameterError(f"{v!r} is not a vertex of H with n={spec.n}")
    return v


def flag_of(spec: HSpec, vertex) -> Flag:
    vertex = _check_vertex(spec, vertex)
    return Flag(vertex[0], spec._partner_of[vertex])


def vertex_of(spec: HSpec, flag) -> Vertex:
    i, c = flag
    if i == c:
        raise ParameterError(f"flag {tuple(flag)} has copy == partner")
    if not (0 <= i <= spec.n and 0 <= c <= spec.n):
        raise ParameterError(f"flag {tuple(flag)} out of range for n={spec.n}")
    return (i, spec._position(i, c))


# ---------------------------------------------------------------- automorphisms

@dataclass(frozen=True, eq=False)
class Automorphism:
    """Vertex permutation of a graph: vertex index ``i`` maps to ``perm[i]``."""
    perm: np.ndarray
    labels: tuple
    provenance: str = "external"
    verified: str = "unchecked"

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ParameterError(f"unknown provenance {self.provenance!r}")

    def __call__(self, label):
        index = {lab: i for i, lab in enumerate(self.labels)}
        return self.labels[self.perm[index[tuple(label)]]]

    def pairs(self) -> list[tuple]:
        return [(self.labels[i], self.labels[j]) for i, j in enumerate(self.perm)]

    def to_json(self) -> list[list[str]]:
        return [[format_label(x), format_label(y)] for x, y in self.pairs()]

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class AutomorphismCheck:
    ok: bool
    violation: tuple | None = None

    def __bool__(self):
        return self.ok


def is_automorphism(graph: Topology, perm) -> AutomorphismCheck:
    """Check that ``perm`` (array over vertex indices) maps edges onto edges.

    A bijection that maps every edge to an edge also maps non-edges to
    non-edges, since the edge count is finite and preserved.
    """
    perm = np.asarray(getattr(perm, "perm", perm), dtype=np.int64)
    nv = graph.num_vertices
    if perm.shape != (nv,):
        raise ParameterError(f"permutation has size {perm.size}, graph has {nv} vertices")
    if not np.array_equal(np.sort(perm), np.arange(nv)):
        raise ParameterError("not a bijection on the vertex set")
    e = graph.edges()[:, :2]
    codes = np.sort(e[:, 0] * nv + e[:, 1])
    img = perm[e]
    img_codes = img.min(axis=1) * nv + img.max(axis=1)
    hit = np.isin(img_codes, codes)
    if hit.all():
        return AutomorphismCheck(True)
    x, y = e[np.argmin(hit)]
    return AutomorphismCheck(False, (graph.labels[x], graph.labels[y]))


def _verified(graph: Topology, perm: np.ndarray, provenance: str) -> Automorphism:
    status = "pass" if is_automorphism(graph, perm) else "fail"
    return Automorphism(perm, graph.labels, provenance, status)


def induced_automorphism(spec: HSpec, sigma: Sequence[int]) -> Automorphism:
    """Vertex with flag ``(i, c)`` goes to the vertex with flag ``(sigma[i], sigma[c])``."""
    sigma = [int(s) for s in sigma]
    if sorted(sigma) != list(range(spec.n + 1)):
        raise ParameterError(f"sigma is not a permutation of 0..{spec.n}")
    perm = np.empty(len(spec.vertices), dtype=np.int64)
    for v in spec.vertices:
        i, c = flag_of(spec, v)
        perm[spec.index(v)] = spec.index(vertex_of(spec, (sigma[i], sigma[c])))
    return _verified(spec.graph, perm, "induced-by-copy-permutation")


def transitivity_sigma(spec: HSpec, u, v) -> list[int]:
    iu, cu = flag_of(spec, u)
    iv, cv = flag_of(spec, v)
    sigma = {iu: iv, cu: cv}
    rest_src = [x for x in range(spec.n + 1) if x not in sigma]
    rest_dst = [x for x in range(spec.n + 1) if x not in (iv, cv)]
    sigma.update(zip(rest_src, rest_dst))
    return [sigma[x] for x in range(spec.n + 1)]


def transitivity_map(spec: HSpec, u, v) -> Automorphism:
    """A verified automorphism of H sending ``u`` to ``v``."""
    return induced_automorphism(spec, transitivity_sigma(spec, u, v))


# ---------------------------------------------------------------- case taxonomy

def paper_case(spec: HSpec, u, v) -> str:
    """Classify ``(u, v)`` into one of ``1.1, 1.2.1, 1.2.2, 1.2.3, 2``.

    2: same copy.  1.1: ``uv`` is an edge.  Otherwise by the copies of the
    external neighbors ``u'``, ``v'``: 1.2.1 if one of them lands in the other
    vertex's copy, 1.2.2 if both land in one third copy, 1.2.3 if in two.
    """
    u, v = _check_vertex(spec, u), _check_vertex(spec, v)
    if u == v:
        raise ParameterError("u and v must differ")
    if u[0] == v[0]:
        return "2"
    up, vp = spec.external(u), spec.external(v)
    if up == v:
        return "1.1"
    if up[0] == v[0] or vp[0] == u[0]:
        return "1.2.1"
    if up[0] == vp[0]:
        return "1.2.2"
    return "1.2.3"


def _match_by_third_copy(spec: HSpec, a: int, b: int, skip: set[int]) -> dict:
    """Pair vertices of copies ``a`` and ``b`` whose external neighbors share a copy not in ``skip``."""
    out = {}
    for j in range(spec.n + 1):
        if j in skip or j in (a, b):
            continue
        out[vertex_of(spec, (a, j))] = vertex_of(spec, (b, j))
    return out


def literal_case_map(spec: HSpec, u, v) -> Automorphism | None:
    """The permutation written out in the case analysis, taken literally.

    Implemented for cases 1.1 and 2, whose maps are fully determined; other
    cases return ``None``.  The result's ``verified`` field records whether
    the literal map actually preserves adjacency for this wiring.
    """
    case = paper_case(spec, u, v)
    u, v = tuple(u), tuple(v)
    mapping: dict[Vertex, Vertex] = {}
    if case == "1.1":
        i1, i2 = u[0], v[0]
        f = {u: v}
        f.update(_match_by_third_copy(spec, i1, i2, set()))
        for x, y in f.items():
            mapping[x], mapping[y] = y, x
    elif case == "2":
        mapping[u], mapping[v] = v, u
        u1, v1 = spec.external(u), spec.external(v)
        i3, i4 = u1[0], v1[0]
        f = {u1: v1}
        f.update(_match_by_third_copy(spec, i3, i4, {u[0]}))
        x = vertex_of(spec, (i3, i4))
        f[x] = vertex_of(spec, (i4, i3))
        if len(set(f.values())) != len(f):
            return Automorphism(np.arange(len(spec.vertices)), spec.graph.labels,
                                "literal-case", "fail")
        for x, y in f.items():
            mapping[x], mapping[y] = y, x
    else:
        return None
    perm = np.arange(len(spec.vertices))
    for x, y in mapping.items():
        perm[spec.index(x)] = spec.index(y)
    if len(set(perm.tolist())) != len(perm):
        return Automorphism(np.arange(len(spec.vertices)), spec.graph.labels,
                            "literal-case", "fail")
    return _verified(spec.graph, perm, "literal-case")


def case_tally(spec: HSpec) -> dict[str, dict[str, int]]:
    """Per case: number of ordered pairs, and how many literal maps verify."""
    tally = {c: {"pairs": 0, "literal_pass": 0, "literal_fail": 0}
             for c in ("1.1", "1.2.1", "1.2.2", "1.2.3", "2")}
    for u, v in itertools.permutations(spec.vertices, 2):
        case = paper_case(spec, u, v)
        tally[case]["pairs"] += 1
        lit = literal_case_map(spec, u, v)
        if lit is None:
            continue
        ok = lit.verified == "pass" and lit(u) == v
        tally[case]["literal_pass" if ok else "literal_fail"] += 1
    return tally
