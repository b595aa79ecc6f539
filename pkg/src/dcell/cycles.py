"""Rooted enumeration of simple cycles of a fixed length.

Graphs may be given as a materialized :class:`~dcell.core.Topology`, as
:class:`~dcell.core.Params` (the implicit neighbor oracle, nothing is built),
or as a plain mapping ``{vertex: iterable of neighbors}``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import core
from .core import Params, ParameterError, Topology, format_label

MAX_LENGTH = 10


@dataclass(frozen=True)
class CycleCount:
    root: tuple
    length: int
    count: int
    witnesses: tuple | None = None


@dataclass(frozen=True)
class CycleCheck:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


class _Adjacency:
    """Uniform neighbor access; vertices are internal keys, ``label`` converts back."""

    def __init__(self, graph):
        self.graph = graph
        if isinstance(graph, Topology):
            self.neighbors = lambda i: graph.neighbor_indices(i).tolist()
            self.key = graph.index
            self.label = lambda i: graph.labels[i]
        elif isinstance(graph, Params):
            self.neighbors = lambda x: [y for y, _ in core.neighbors(x, graph)]
            self.key = lambda x: core.check_label(x, graph)
            self.label = lambda x: x
        elif isinstance(graph, Mapping):
            adj = {v: list(ns) for v, ns in graph.items()}
            self.neighbors = adj.__getitem__
            self.key = lambda x: _require(x, adj)
            self.label = lambda x: x
        else:
            raise TypeError(f"unsupported graph type {type(graph).__name__}")

    def adjacent(self, x, y) -> bool:
        return y in self.neighbors(x)


def _require(x, adj):
    if x not in adj:
        raise ParameterError(f"unknown vertex {x!r}")
    return x


def canonical_cycle(cycle: Sequence) -> tuple:
    """Rotate to start at ``cycle[0]`` and pick the lexicographically smaller direction."""
    cycle = tuple(cycle)
    reverse = (cycle[0],) + cycle[:0:-1]
    return min(cycle, reverse)


def _rooted_closed_paths(adj: _Adjacency, root, length: int):
    """Yield every simple path ``root, x_1, ..., x_{L-1}`` with ``x_{L-1}`` adjacent to root.

    Each undirected cycle through root appears twice, once per direction.
    """
    root_nbrs = set(adj.neighbors(root))
    path = [root]
    on_path = {root}

    def extend(x, depth):
        if depth == length - 1:
            if x in root_nbrs:
                yield tuple(path)
            return
        for y in adj.neighbors(x):
            if y in on_path:
                continue
            path.append(y)
            on_path.add(y)
            yield from extend(y, depth + 1)
            path.pop()
            on_path.discard(y)

    yield from extend(root, 0)


def _is_induced(adj: _Adjacency, cycle: Sequence) -> bool:
    members = set(cycle)
    inside = sum(1 for x in cycle for y in adj.neighbors(x) if y in members)
    return inside == 2 * len(cycle)


def cycles_through(graph, root, length: int, collect: bool = False,
                   induced: bool = False) -> CycleCount:
    """Count simple cycles of exactly ``length`` edges containing ``root``.

    Chords are allowed unless ``induced`` is set.  With ``collect`` the
    witnesses are returned as canonical label tuples, sorted.
    """
    if not 3 <= length <= MAX_LENGTH:
        raise ParameterError(f"length must lie in 3..{MAX_LENGTH}, got {length}")
    adj = _Adjacency(graph)
    r = adj.key(root)
    directed = 0
    found = set() if collect else None
    for path in _rooted_closed_paths(adj, r, length):
        if induced and not _is_induced(adj, path):
            continue
        directed += 1
        if collect:
            found.add(canonical_cycle(adj.label(x) for x in path))
    assert directed % 2 == 0
    count = directed // 2
    witnesses = None
    if collect:
        witnesses = tuple(sorted(found))
        assert len(witnesses) == count
    return CycleCount(adj.label(r), length, count, witnesses)


def census_counts(topology: Topology, length: int = 6, induced: bool = False) -> np.ndarray:
    """Per-vertex cycle counts as an array indexed like ``topology.labels``."""
    return np.array([cycles_through(topology, lab, length, induced=induced).count
                     for lab in topology.labels], dtype=np.int64)


def six_cycle_census(topology: Topology, length: int = 6,
                     induced: bool = False) -> dict[tuple, CycleCount]:
    counts = census_counts(topology, length, induced)
    return {lab: CycleCount(lab, length, int(c))
            for lab, c in zip(topology.labels, counts)}


def total_cycles(census: Mapping[tuple, CycleCount]) -> int:
    """Number of distinct cycles, from the handshake identity sum = L * total."""
    if not census:
        return 0
    length = next(iter(census.values())).length
    s = sum(c.count for c in census.values())
    if s % length:
        raise ValueError("census is inconsistent: sum not divisible by cycle length")
    return s // length


def verify_cycle(candidate: Sequence[Sequence[int]], params: Params) -> CycleCheck:
    """Check that ``candidate`` is a simple closed cycle in ``D_{k,n}``.

    A repeated closing label (``last == first``) is accepted and dropped.
    """
    cyc = [tuple(x) for x in candidate]
    if len(cyc) > 1 and cyc[0] == cyc[-1]:
        cyc = cyc[:-1]
    for i, x in enumerate(cyc):
        report = core.validate_label(x, params)
        if not report:
            return CycleCheck(False, f"invalid label at index {i}: {report.reason}")
    if len(cyc) < 3:
        return CycleCheck(False, f"too short: {len(cyc)} vertices")
    if len(set(cyc)) != len(cyc):
        return CycleCheck(False, "not simple")
    for i, x in enumerate(cyc):
        y = cyc[(i + 1) % len(cyc)]
        if y not in {z for z, _ in core.neighbors(x, params)}:
            return CycleCheck(False,
                              f"not adjacent: {format_label(x)} - {format_label(y)}")
    return CycleCheck(True)


def format_witness(cycle: Iterable[Sequence[int]]) -> str:
    return ";".join(format_label(x) for x in cycle)


# ---------------------------------------------------------------- blocked extensions

@dataclass(frozen=True)
class Candidate:
    via: tuple            # neighbor w of the root inside the root's top-level copy
    via_level: int
    copy: int             # top-level copy l entered through w
    entry: tuple          # w's top-level neighbor, in copy l
    edge: tuple           # (endpoint in partner copy, endpoint in copy l)
    closing_length: int   # shortest cycle through root using this route


@dataclass(frozen=True)
class BlockedExtensionReport:
    root: tuple
    params: Params
    partner: tuple
    partner_copy: int
    length: int
    candidates: tuple

    @property
    def blocked(self) -> bool:
        return all(c.closing_length > self.length for c in self.candidates)


def witness_roots(params: Params) -> list[tuple]:
    """Roots whose short cycles stay inside their level-(k-1) copy."""
    z = (0,) * (params.k - 1)
    if params.n == 2:
        return [z + (2, 1)]
    return [z + (1, 2)]


def _copy_distance(params: Params, source: tuple, target: tuple) -> int:
    """BFS distance using only edges of level < k (i.e. inside one top-level copy)."""
    if source == target:
        return 0
    k = params.k
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y, lev in core.neighbors(x, params):
            if lev == k or y in dist:
                continue
            dist[y] = dist[x] + 1
            if y == target:
                return dist[y]
            queue.append(y)
    raise ValueError(f"{target} unreachable from {source} inside its copy")


def blocked_extension_check(root, params: Params, length: int = 6) -> BlockedExtensionReport:
    """Enumerate cycles through ``root`` that leave its top-level copy.

    Such a cycle uses three top-level edges: root to its partner copy ``c``,
    ``c`` to some copy ``l``, and ``l`` back to the root's copy through a
    vertex ``w``.  Each copy contributes a path of at least one edge, so a
    cycle of the target length needs ``w`` adjacent to the root; all
    neighbors ``w`` below level k are therefore the complete candidate set.
    """
    root = core.check_label(root, params)
    if params.k < 2 or root not in witness_roots(params):
        raise ParameterError(f"{format_label(root)} is not a witness root for "
                             f"k={params.k}, n={params.n}")
    k = params.k
    partner = core.level_neighbor(root, k, params)
    c = partner[0]
    cands = []
    for w, lev in core.neighbors(root, params):
        if lev == k:
            continue
        entry = core.level_neighbor(w, k, params)
        l = entry[0]
        lo, hi = sorted((c, l))
        x, y = core.edge_between_copies(k, lo, hi, params)
        on_c, on_l = (x, y) if lo == c else (y, x)
        closing = (4 + _copy_distance(params, entry, on_l)
                   + _copy_distance(params, on_c, partner))
        cands.append(Candidate(w, lev, l, entry, (on_c, on_l), closing))
    return BlockedExtensionReport(root, params, partner, c, length, tuple(cands))
