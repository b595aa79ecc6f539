"""Reproduction gate: every checkable claim about DCell symmetry, recomputed.

Expected values for the neighbor and edge tables are transcribed as
templates in ``(k, n)`` and compared to generated labels by exact string
match, so a wrong pairing rule cannot agree with itself.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, asdict
from typing import Callable

from . import certify, core, cycles, symmetry
from .core import Params, format_label, vertex_count

LEVEL1_READING = ("c^1(x) counts the 6-cycles through x that lie inside the "
                  "level-1 subnetwork D^0_{1,n} containing x")


@dataclass(frozen=True)
class Claim:
    id: str
    location: str
    expected: str
    computed: str
    status: str


@dataclass(frozen=True)
class ClaimReport:
    claims: tuple

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.claims)

    @property
    def failing(self) -> list[str]:
        return [c.id for c in self.claims if c.status != "pass"]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "claims": [asdict(c) for c in self.claims],
                "notes": [LEVEL1_READING]}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


# ---------------------------------------------------------------- transcribed tables

def _pad(head: tuple, tail: tuple, k: int) -> tuple:
    """``head, 0, ..., 0, tail`` as a label with ``k + 1`` coordinates."""
    return head + (0,) * (k + 1 - len(head) - len(tail)) + tail


def u_table(k: int) -> list[tuple]:
    """Neighbors u_0..u_k of u = (0,...,0,2,1) in D_{k,2}."""
    rows = [_pad((), (2, 0), k), _pad((), (1, 1), k)]
    rows += [_pad((), (6,) + (0,) * j, k) for j in range(2, k + 1)]
    return rows


def u_partner_copies(k: int) -> list[int]:
    """Top-level copies of u_{0,k}, ..., u_{k-1,k}."""
    return [5, 4] + [6 * vertex_count(j - 1, 2) + 1 for j in range(2, k)]


def e6_table(k: int) -> dict[int, tuple[tuple, tuple]]:
    """e_{6,l} as (endpoint in copy 6, endpoint in copy l), for l in {4, 5, 37, 253}."""
    return {
        4: (_pad((6,), (2, 0), k), _pad((4,), (2, 1), k)),
        5: (_pad((6,), (2, 1), k), _pad((5,), (2, 1), k)),
        37: (_pad((6,), (6, 0, 0), k), _pad((37,), (1, 0, 0), k)),
        253: (_pad((6,), (6, 0, 0, 0), k), _pad((253,), (1, 0, 0), k)),
    }


def v_table(k: int, n: int) -> list[tuple]:
    """Neighbors v_0^i (i != 2), v_1, ..., v_k of v = (0,...,0,1,2) in D_{k,n}."""
    rows = [_pad((), (1, i), k) for i in range(n) if i != 2]
    rows.append(_pad((), (3, 1), k))
    rows += [_pad((), (n + 3,) + (0,) * j, k) for j in range(2, k + 1)]
    return rows


def v_partner_copies(k: int, n: int) -> list[int]:
    out = [n + 1 + i for i in range(n) if i != 2]
    out.append(3 * n + 2)
    if k >= 3:
        out.append(n * (n + 1) * (n + 3) + 1)
    out += [(n + 3) * vertex_count(j - 1, n) + 1 for j in range(3, k)]
    return out


def en3_table(k: int, n: int) -> dict[int, tuple[tuple, tuple]]:
    """e_{n+3,l} as (endpoint in copy n+3, endpoint in copy l)."""
    c = n + 3
    out = {
        n + 1: (_pad((c,), (1, 1), k), _pad((n + 1,), (1, 2), k)),
        n + 2: (_pad((c,), (1, 2), k), _pad((n + 2,), (1, 2), k)),
        n + 4: (_pad((c,), (1, 3), k), _pad((n + 4,), (1, 3), k)),
        2 * n: (_pad((c,), (1, n - 1), k), _pad((2 * n,), (1, 3), k)),
        3 * n + 2: (_pad((c,), (3, 1), k), _pad((3 * n + 2,), (1, 3), k)),
    }
    big = n * (n + 1) * (n + 3) + 1
    out[big] = (_pad((c,), (c, 0, 0), k), _pad((big,), (1, 3), k))
    last = c * vertex_count(k - 2, n) + 1
    out[last] = (_pad((c, c), (), k), _pad((last,), (1, 3), k))
    return out


def _labels(rows) -> str:
    return " ".join(format_label(r) for r in rows)


def _edge_str(pair) -> str:
    return "(" + format_label(pair[0]) + ")(" + format_label(pair[1]) + ")"


def _oriented_edge(k: int, c: int, l: int, params: Params) -> tuple:
    x, y = core.edge_between_copies(k, min(c, l), max(c, l), params)
    return (x, y) if x[0] == c else (y, x)


# ---------------------------------------------------------------- checks

def _claim(id, location, expected, computed, ok) -> Claim:
    return Claim(id, location, str(expected), str(computed), "pass" if ok else "fail")


def _check_vertex_counts():
    expected = {(1, 2): 6, (2, 2): 42, (3, 2): 1806, (1, 3): 12, (2, 3): 156}
    computed = {kn: vertex_count(*kn) for kn in expected}
    built = {kn: core.build_graph(Params(*kn)).num_vertices for kn in expected}
    ok = computed == expected == built
    return _claim("VERTEX_COUNTS", "vertex count recurrence t_k = t_{k-1}(t_{k-1}+1)",
                  sorted(expected.items()), sorted(built.items()), ok)


def _check_edge_law():
    cases = [(1, n) for n in range(2, 6)] + [(2, n) for n in range(2, 5)] + [(3, 2)]
    bad = []
    for k, n in cases:
        g = core.build_graph(Params(k, n))
        t = g.num_vertices
        want = {0: t * (n - 1) // 2, **{j: t // 2 for j in range(1, k + 1)}}
        if g.level_counts() != want:
            bad.append((k, n))
    return _claim("EDGE_COUNT_LAW", "t/2 edges per level j >= 1, t(n-1)/2 at level 0",
                  "all cases", "all cases" if not bad else f"violations {bad}", not bad)


def _is_cycle_graph(params: Params) -> tuple[bool, str]:
    g = core.build_graph(params)
    t = g.num_vertices
    census = cycles.census_counts(g, t)
    ok = set(g.degrees().tolist()) == {2} and g.is_connected() and set(census.tolist()) == {1}
    return ok, f"cycle of length {t}" if ok else "not a cycle"


def _check_d03():
    ok, got = _is_cycle_graph(Params(0, 3))
    return _claim("D03_IS_TRIANGLE", "D_{0,3} structure", "cycle of length 3", got,
                  ok and got == "cycle of length 3")


def _check_d12():
    ok, got = _is_cycle_graph(Params(1, 2))
    return _claim("D12_IS_C6", "D_{1,2} structure", "cycle of length 6", got,
                  ok and got == "cycle of length 6")


def _check_d22_counts():
    p = Params(2, 2)
    a = cycles.cycles_through(p, (0, 2, 0), 6).count
    b = cycles.cycles_through(p, (3, 1, 1), 6).count
    return [
        _claim("D22_020_ONE_6CYCLE", "6-cycles through (0,2,0) in D_{2,2}", 1, a, a == 1),
        _claim("D22_311_SEVERAL_6CYCLES", "6-cycles through (3,1,1) in D_{2,2}",
               ">= 2", b, b >= 2),
    ]


def _check_heavy_cycle():
    cyc = [(3, 1, 1), (3, 1, 0), (2, 1, 0), (2, 1, 1), (4, 1, 0), (4, 1, 1), (3, 1, 1)]
    r = cycles.verify_cycle(cyc, Params(2, 2))
    return _claim("D22_HEAVY_CYCLE", "explicit 6-cycle through (3,1,1) in D_{2,2}",
                  "valid cycle", "valid cycle" if r else r.reason, bool(r))


def _check_d22_not_vt():
    orbits = certify.exhaustive_orbits(core.build_graph(Params(2, 2)))
    split = orbits.block_of((0, 2, 0)) != orbits.block_of((3, 1, 1))
    return _claim("D22_NOT_VT", "automorphism orbits of D_{2,2}",
                  ">= 2 orbits, (0,2,0) and (3,1,1) apart",
                  f"{len(orbits)} orbits, apart={split}", len(orbits) >= 2 and split)


def _check_unique_6cycle():
    got = {k: cycles.cycles_through(Params(k, 2), (0,) * (k - 1) + (2, 1), 6).count
           for k in (2, 3, 4)}
    return _claim("U21_UNIQUE_6CYCLE", "6-cycles through (0,...,0,2,1) in D_{k,2}, k=2..4",
                  {k: 1 for k in got}, got, set(got.values()) == {1})


def _check_u_tables():
    k, p = 4, Params(4, 2)
    u = (0, 0, 0, 2, 1)
    nbrs = [x for x, _ in core.neighbors(u, p)]
    partners = [core.level_neighbor(x, k, p)[0] for x in nbrs[:k]]
    edges = {l: _edge_str(_oriented_edge(k, 6, l, p)) for l in (4, 5, 37, 253)}
    want_edges = {l: _edge_str(e) for l, e in e6_table(k).items()}
    return [
        _claim("U_NEIGHBOR_TABLE", "level-i neighbors of u in D_{4,2}",
               _labels(u_table(k)), _labels(nbrs), _labels(nbrs) == _labels(u_table(k))),
        _claim("U_PARTNER_COPIES", "top-level copies of u_{i,k} in D_{4,2}",
               u_partner_copies(k), partners, partners == u_partner_copies(k)),
        _claim("E6_EDGES", "edges e_{6,l} of D_{4,2}", want_edges, edges, edges == want_edges),
    ]


def _check_v_tables():
    k, n = 3, 4
    p = Params(k, n)
    v = (0, 0, 1, 2)
    nbrs = [x for x, _ in core.neighbors(v, p)]
    partners = [core.level_neighbor(x, k, p)[0] for x in nbrs[:-1]]
    want = en3_table(k, n)
    edges = {l: _edge_str(_oriented_edge(k, n + 3, l, p)) for l in want}
    want_edges = {l: _edge_str(e) for l, e in want.items()}
    return [
        _claim("V_NEIGHBOR_TABLE", "neighbors of v in D_{3,4}",
               _labels(v_table(k, n)), _labels(nbrs), _labels(nbrs) == _labels(v_table(k, n))),
        _claim("V_PARTNER_COPIES", "top-level copies of v_{0,k}^i and v_{j,k} in D_{3,4}",
               v_partner_copies(k, n), partners, partners == v_partner_copies(k, n)),
        _claim("EN3_EDGES", "edges e_{n+3,l} of D_{3,4}", want_edges, edges, edges == want_edges),
    ]


def _check_blocked():
    got = {}
    for k, n in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4), (3, 4)]:
        p = Params(k, n)
        rep = cycles.blocked_extension_check(cycles.witness_roots(p)[0], p, 6)
        got[f"{k},{n}"] = min(c.closing_length for c in rep.candidates)
    return _claim("BLOCKED_EXTENSIONS",
                  "shortest cycle leaving the top-level copy of the witness root",
                  "> 6 everywhere", got, all(v > 6 for v in got.values()))


def _check_outside_cycle():
    cyc = [(0, 0, 0), (0, 0, 1), (2, 0, 0), (2, 0, 1), (1, 0, 1), (1, 0, 0), (0, 0, 0)]
    bad = [n for n in (3, 4, 5) if not cycles.verify_cycle(cyc, Params(2, n))]
    return _claim("U000_OUTSIDE_CYCLE", "explicit 6-cycle through (0,0,0) in D_{2,n}",
                  "valid for n=3,4,5", "valid" if not bad else f"invalid for n={bad}",
                  not bad)


def _check_level1_counts():
    claims = []
    gains, keeps = {}, {}
    for k, n in [(2, 3), (2, 4), (3, 3)]:
        p, low = Params(k, n), Params(1, n)
        z = (0,) * (k - 1)
        cu = cycles.cycles_through(p, z + (0, 0), 6).count
        cv = cycles.cycles_through(p, z + (1, 2), 6).count
        bu = cycles.cycles_through(low, (0, 0), 6).count
        bv = cycles.cycles_through(low, (1, 2), 6).count
        gains[f"{k},{n}"] = (cu, bu)
        keeps[f"{k},{n}"] = (cv, bv)
    claims.append(_claim("U000_GAINS_6CYCLES", "c^k(u) > c^1(u) for u=(0,...,0)",
                         "first > second", gains, all(a > b for a, b in gains.values())))
    claims.append(_claim("V012_KEEPS_6CYCLES", "c^k(v) = c^1(v) for v=(0,...,0,1,2)",
                         "first == second", keeps, all(a == b for a, b in keeps.values())))
    return claims


def _check_h_transitive():
    bad = []
    for n in range(2, 7):
        spec = symmetry.d1_wiring(n)
        for u, v in itertools.product(spec.vertices, repeat=2):
            phi = symmetry.transitivity_map(spec, u, v)
            if phi.verified != "pass" or phi.perm[spec.index(u)] != spec.index(v):
                bad.append((n, u, v))
    rng = random.Random(2019)
    for _ in range(5):
        spec = symmetry.random_wiring(4, rng)
        for u, v in itertools.product(spec.vertices, repeat=2):
            phi = symmetry.transitivity_map(spec, u, v)
            if phi.verified != "pass" or phi.perm[spec.index(u)] != spec.index(v):
                bad.append(("random", u, v))
    return _claim("D1N_VT", "all-pairs automorphisms of D_{1,n} (n=2..6) and random H (n=4)",
                  "every pair certified", "every pair certified" if not bad else bad[:3],
                  not bad)


def _check_decide():
    got = {}
    for k, n in itertools.product(range(4), (2, 3, 4)):
        got[f"{k},{n}"] = certify.decide(Params(k, n)).decision
    ok = all((v == "Transitive") == (int(kn[0]) <= 1) for kn, v in got.items())
    return _claim("NOT_VT_K_GE_2", "decision for k=0..3, n=2..4",
                  "Transitive iff k <= 1", got, ok)


CHECKS: list[Callable] = [
    _check_vertex_counts, _check_edge_law, _check_d03, _check_d12, _check_d22_counts,
    _check_heavy_cycle, _check_d22_not_vt, _check_unique_6cycle, _check_u_tables,
    _check_v_tables, _check_blocked, _check_outside_cycle, _check_level1_counts,
    _check_h_transitive, _check_decide,
]


def paper_check() -> ClaimReport:
    """Run every claim; failures and exceptions are reported, never raised."""
    claims: list[Claim] = []
    for check in CHECKS:
        try:
            out = check()
        except Exception as exc:  # noqa: BLE001 - a crash is a failed claim
            name = check.__name__.removeprefix("_check_").upper()
            out = _claim(name, "check crashed", "no error", f"{type(exc).__name__}: {exc}",
                         False)
        claims.extend(out if isinstance(out, list) else [out])
    return ClaimReport(tuple(sorted(claims, key=lambda c: c.id)))
