"""DCell construction: label arithmetic, the level-j pairing rule, and topologies.

Labels are tuples ``(a_k, ..., a_1, a_0)``, most significant coordinate first.
Position ``j`` of a label means the coordinate ``a_j``, i.e. ``label[-1 - j]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from collections.abc import Iterable, Sequence

import numpy as np

Label = tuple[int, ...]

DEFAULT_BUDGET = 5_000_000


class DCellError(ValueError):
    """Base class for invalid parameters or labels."""


class ParameterError(DCellError):
    pass


class InvalidLabelError(DCellError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class BudgetExceeded(DCellError):
    def __init__(self, t: int, budget: int):
        super().__init__(
            f"refusing to materialize {t} vertices (budget {budget})")
        self.t = t
        self.budget = budget


@dataclass(frozen=True)
class Params:
    k: int
    n: int

    def __post_init__(self):
        _check_kn(self.k, self.n)

    @property
    def t(self) -> int:
        return vertex_count(self.k, self.n)

    @property
    def degree(self) -> int:
        return self.n - 1 + self.k


def _check_kn(k: int, n: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ParameterError(f"k must be an integer >= 0, got {k!r}")
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ParameterError(f"n must be an integer >= 2, got {n!r}")


@lru_cache(maxsize=None)
def _t(k: int, n: int) -> int:
    t = n
    for _ in range(k):
        t = t * (t + 1)
    return t


def vertex_count(k: int, n: int) -> int:
    """Number of servers ``t_{k,n}`` in ``D_{k,n}`` (exact, arbitrary size)."""
    _check_kn(k, n)
    return _t(int(k), int(n))


def radices(j: int, n: int) -> list[int]:
    """Place values ``[t_{j-1}, ..., t_0, 1]`` of the coordinates of a length-(j+1) suffix."""
    return [_t(l - 1, n) for l in range(j, 0, -1)] + [1]


# ---------------------------------------------------------------- labels

def parse_label(text: str) -> Label:
    """Parse the ``3,1,1`` text form."""
    try:
        return tuple(int(part) for part in text.strip().split(","))
    except ValueError:
        raise InvalidLabelError(f"malformed label {text!r}") from None


def format_label(label: Sequence[int]) -> str:
    return ",".join(str(int(a)) for a in label)


@dataclass(frozen=True)
class LabelReport:
    valid: bool
    position: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.valid


def validate_label(label: Sequence[int], params: Params) -> LabelReport:
    """Check coordinate ranges; the report names the first violation.

    ``a_0`` ranges over ``0..n-1`` and ``a_j`` (j >= 1) over ``0..t_{j-1,n}``.
    Positions are checked from ``a_0`` upwards.
    """
    if len(label) != params.k + 1:
        return LabelReport(False, None,
                           f"expected {params.k + 1} coordinates, got {len(label)}")
    for j in range(params.k + 1):
        a = label[-1 - j]
        if not isinstance(a, (int, np.integer)):
            return LabelReport(False, j, f"a_{j}={a!r} is not an integer")
        hi = params.n - 1 if j == 0 else _t(j - 1, params.n)
        if not 0 <= a <= hi:
            return LabelReport(False, j, f"a_{j}={a} outside 0..{hi}")
    return LabelReport(True)


def check_label(label: Sequence[int], params: Params) -> Label:
    report = validate_label(label, params)
    if not report:
        raise InvalidLabelError(f"invalid label {tuple(label)}: {report.reason}",
                                report.position)
    return tuple(int(a) for a in label)


def uid(label: Sequence[int], j: int, n: int) -> int:
    """Mixed-radix value of the suffix ``(a_j, ..., a_0)``."""
    if not 0 <= j < len(label):
        raise ParameterError(f"j={j} out of range for a label of length {len(label)}")
    value = label[-1]
    for l in range(1, j + 1):
        value += label[-1 - l] * _t(l - 1, n)
    return int(value)


def suffix_of_uid(m: int, j: int, n: int) -> Label:
    """Inverse of :func:`uid`: the length-(j+1) suffix with value ``m``."""
    if j < 0:
        raise ParameterError(f"j must be >= 0, got {j}")
    if not 0 <= m < _t(j, n):
        raise ParameterError(f"m={m} outside 0..{_t(j, n) - 1}")
    coords = []
    for place in radices(j, n):
        a, m = divmod(m, place)
        coords.append(a)
    return tuple(coords)


# ---------------------------------------------------------------- adjacency

def _partner(i: int, m: int) -> tuple[int, int]:
    # copy a, uid b-1  <->  copy b, uid a   (a < b)
    if m >= i:
        return m + 1, i
    return m, i - 1


def level_neighbor(label: Sequence[int], j: int, params: Params) -> Label:
    """The unique level-``j`` neighbor (``1 <= j <= k``)."""
    if not 1 <= j <= params.k:
        raise ParameterError(f"level must lie in 1..{params.k}, got {j}")
    label = check_label(label, params)
    n = params.n
    copy, m = _partner(label[-1 - j], uid(label, j - 1, n))
    return label[:params.k - j] + (copy,) + suffix_of_uid(m, j - 1, n)


def level0_neighbors(label: Sequence[int], n: int) -> list[Label]:
    label = tuple(label)
    if not 0 <= label[-1] < n:
        raise InvalidLabelError(f"a_0={label[-1]} outside 0..{n - 1}", 0)
    return [label[:-1] + (c,) for c in range(n) if c != label[-1]]


def neighbors(label: Sequence[int], params: Params) -> list[tuple[Label, int]]:
    """All ``(neighbor, level)`` pairs, level 0 first, then levels 1..k."""
    label = check_label(label, params)
    out = [(x, 0) for x in level0_neighbors(label, params.n)]
    out.extend((level_neighbor(label, j, params), j) for j in range(1, params.k + 1))
    return out


def edge_between_copies(j: int, a: int, b: int, params: Params,
                        prefix: Sequence[int] = ()) -> tuple[Label, Label]:
    """Endpoints of the level-``j`` edge joining copies ``a < b``.

    ``prefix`` holds the coordinates above position ``j`` and defaults to zeros.
    """
    if not 1 <= j <= params.k:
        raise ParameterError(f"level must lie in 1..{params.k}, got {j}")
    top = _t(j - 1, params.n)
    if not 0 <= a < b <= top:
        raise ParameterError(f"need 0 <= a < b <= {top}, got a={a}, b={b}")
    prefix = tuple(prefix) if prefix else (0,) * (params.k - j)
    if len(prefix) != params.k - j:
        raise ParameterError(f"prefix must have {params.k - j} coordinates")
    x = prefix + (a,) + suffix_of_uid(b - 1, j - 1, params.n)
    y = prefix + (b,) + suffix_of_uid(a, j - 1, params.n)
    return check_label(x, params), check_label(y, params)


def iter_labels(params: Params) -> Iterable[Label]:
    """All labels in uid order (which is also lexicographic order)."""
    t, k, n = params.t, params.k, params.n
    for m in range(t):
        yield suffix_of_uid(m, k, n)


# ---------------------------------------------------------------- topology

@dataclass(frozen=True, eq=False)
class Topology:
    """Read-only undirected graph in CSR form with a level tag per edge.

    Vertex ``i`` has neighbors ``indices[indptr[i]:indptr[i+1]]``.  For a
    DCell, vertex indices are ``uid_k`` and ``labels[i]`` is the label.
    """
    labels: tuple
    indptr: np.ndarray
    indices: np.ndarray
    levels: np.ndarray
    params: Params | None = None
    _index: dict = field(default=None, repr=False)

    def __post_init__(self):
        for arr in (self.indptr, self.indices, self.levels):
            arr.flags.writeable = False
        if self._index is None:
            object.__setattr__(self, "_index",
                               {lab: i for i, lab in enumerate(self.labels)})

    @classmethod
    def from_edges(cls, labels: Sequence, edges: Iterable[tuple],
                   params: Params | None = None) -> "Topology":
        """Build from ``(x, y)`` or ``(x, y, level)`` edges given as labels."""
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        rows = []
        for e in edges:
            x, y = index[e[0]], index[e[1]]
            lev = e[2] if len(e) > 2 else 0
            if x == y:
                raise ParameterError(f"self-loop at {labels[x]!r}")
            rows.append((x, y, lev))
            rows.append((y, x, lev))
        arr = np.array(rows, dtype=np.int64).reshape(-1, 3)
        arr = arr[np.lexsort((arr[:, 1], arr[:, 0]))]
        if len(arr) and np.any(np.all(arr[1:, :2] == arr[:-1, :2], axis=1)):
            raise ParameterError("duplicate edge")
        counts = np.bincount(arr[:, 0], minlength=len(labels))
        indptr = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
        return cls(labels, indptr, arr[:, 1].copy(), arr[:, 2].copy(), params, index)

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.indices) // 2

    def index(self, label) -> int:
        try:
            return self._index[tuple(label) if isinstance(label, list) else label]
        except KeyError:
            raise InvalidLabelError(f"unknown vertex {label!r}") from None

    def neighbor_indices(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def neighbors(self, label) -> list[tuple]:
        i = self.index(label)
        lo, hi = self.indptr[i], self.indptr[i + 1]
        return [(self.labels[y], int(lev))
                for y, lev in zip(self.indices[lo:hi], self.levels[lo:hi])]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def edges(self) -> np.ndarray:
        """``(x, y, level)`` rows with ``x < y``, sorted by ``(x, level, y)``."""
        src = np.repeat(np.arange(self.num_vertices), self.degrees())
        keep = src < self.indices
        arr = np.column_stack([src[keep], self.indices[keep], self.levels[keep]])
        return arr[np.lexsort((arr[:, 1], arr[:, 2], arr[:, 0]))]

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(x), int(y)) for x, y, _ in self.edges()}

    def level_counts(self) -> dict[int, int]:
        lev, cnt = np.unique(self.edges()[:, 2], return_counts=True)
        return {int(a): int(b) for a, b in zip(lev, cnt)}

    def is_connected(self) -> bool:
        from scipy.sparse import csr_matrix
        from scipy.sparse.csgraph import connected_components

        n = self.num_vertices
        mat = csr_matrix((np.ones(len(self.indices)), self.indices, self.indptr),
                         shape=(n, n))
        return connected_components(mat, directed=False)[0] == 1

    def same_graph(self, other: "Topology") -> bool:
        if self.labels != other.labels:
            return False
        return np.array_equal(self.edges(), other.edges())


def _uid_partner_array(u: np.ndarray, j: int, n: int) -> np.ndarray:
    tj, tj1 = _t(j, n), _t(j - 1, n)
    block = u - u % tj
    i, m = np.divmod(u % tj, tj1)
    up = m >= i
    copy = np.where(up, m + 1, m)
    inner = np.where(up, i, i - 1)
    return block + copy * tj1 + inner


def build_graph(params: Params, budget: int = DEFAULT_BUDGET) -> Topology:
    """Materialize ``D_{k,n}`` with vertices indexed by ``uid_k``."""
    t = params.t
    if t > budget:
        raise BudgetExceeded(t, budget)
    n, k, d = params.n, params.k, params.degree
    u = np.arange(t, dtype=np.int64)
    nbr = np.empty((t, d), dtype=np.int64)
    lev = np.empty((t, d), dtype=np.int64)
    a0 = u % n
    for c in range(1, n):
        nbr[:, c - 1] = u - a0 + (a0 + c) % n
    lev[:, :n - 1] = 0
    for j in range(1, k + 1):
        nbr[:, n - 2 + j] = _uid_partner_array(u, j, n)
        lev[:, n - 2 + j] = j
    # keep level-0 neighbors in ascending a_0 order, as the implicit oracle does
    if n > 2:
        order = np.argsort(nbr[:, :n - 1], axis=1, kind="stable")
        nbr[:, :n - 1] = np.take_along_axis(nbr[:, :n - 1], order, axis=1)
    labels = tuple(iter_labels(params)) if t <= 200_000 else _LazyLabels(params)
    indptr = np.arange(t + 1, dtype=np.int64) * d
    return Topology(labels, indptr, nbr.ravel(), lev.ravel(), params,
                    _index=None if t <= 200_000 else _LazyIndex(params))


class _LazyLabels(Sequence):
    """Label sequence computed on access, for very large builds."""

    def __init__(self, params: Params):
        self._params = params

    def __len__(self):
        return self._params.t

    def __getitem__(self, i):
        if isinstance(i, slice):
            return tuple(self[m] for m in range(*i.indices(len(self))))
        if i < 0:
            i += len(self)
        if not 0 <= i < len(self):
            raise IndexError(i)
        return suffix_of_uid(int(i), self._params.k, self._params.n)

    def __iter__(self):
        return iter(iter_labels(self._params))

    def __eq__(self, other):
        if isinstance(other, _LazyLabels):
            return self._params == other._params
        return len(self) == len(other) and all(a == b for a, b in zip(self, other))


class _LazyIndex(dict):
    def __init__(self, params: Params):
        super().__init__()
        self._params = params

    def __missing__(self, label):
        if not validate_label(label, self._params):
            raise KeyError(label)
        return uid(label, self._params.k, self._params.n)
