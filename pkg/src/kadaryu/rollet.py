"""Rollet graphs: the branching graphs of the bounded-height towers.

Vertices are pairs (p, lam) with lam a partition of min(p, l+2); there is an
edge between (p, lam) and (p+1, mu) when mu equals lam (both already of full
size l+2) or mu is lam with one box added.  Walks from (0, ()) count
standard-module dimensions; decorating each vertex with its rank-n Gram
determinant produces the marginal vertex function 𝒱 and its conjectural
Chebyshev counterpart 𝒞 built from the one-cup series of the arm labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .cheby import quantum_number
from .exactmath import Polynomial, Q, RationalFunction
from .gram import ModuleLabel, factor_one_cup, gram_det
from .symmetric import hook_dimension, partitions

Vertex = tuple[int, tuple[int, ...]]


def _vertex_partitions(l: int, p: int) -> list[tuple[int, ...]]:
    return partitions(min(p, l + 2))


def edge(l: int, v: Vertex, w: Vertex) -> bool:
    """Adjacency; v, w in either order, |p difference| must be 1."""
    (p1, lam1), (p2, lam2) = sorted([v, w])
    if p2 != p1 + 1:
        return False
    if sum(lam1) == sum(lam2):  # both at full size l+2
        return lam1 == lam2
    big, small = (lam2, lam1)
    if sum(big) != sum(small) + 1:
        return False
    # one added box
    a = list(small) + [0] * (len(big) - len(small))
    diffs = [b - c for b, c in zip(big, a)]
    return all(d >= 0 for d in diffs) and sum(diffs) == 1


class RolletGraph:
    """The branching graph for height bound l, truncated at p <= p_max."""

    def __init__(self, l: int, p_max: int):
        self.l = l
        self.p_max = p_max
        self.vertices: list[Vertex] = [
            (p, lam) for p in range(p_max + 1) for lam in _vertex_partitions(l, p)]
        self.edges: list[tuple[Vertex, Vertex]] = []
        vs = set(self.vertices)
        for (p, lam) in self.vertices:
            for mu in _vertex_partitions(l, p + 1):
                w = (p + 1, mu)
                if w in vs and edge(l, (p, lam), w):
                    self.edges.append(((p, lam), w))

    def neighbours(self, v: Vertex) -> list[Vertex]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def up_neighbours(self, v: Vertex) -> list[Vertex]:
        return [w for w in self.neighbours(v) if w[0] == v[0] + 1]


@lru_cache(maxsize=None)
def _graph(l: int, p_max: int) -> RolletGraph:
    return RolletGraph(l, p_max)


def dimension(l: int, n: int, vertex: Vertex) -> int:
    """Number of length-n walks from (0, ()) to the vertex; 0 on parity or
    reachability mismatch.  Equals the standard-module dimension."""
    p, lam = vertex
    if p < 0 or p > n or (n - p) % 2:
        return 0
    g = _graph(l, n)
    counts: dict[Vertex, int] = {(0, ()): 1}
    for _ in range(n):
        nxt: dict[Vertex, int] = {}
        for v, c in counts.items():
            for w in g.neighbours(v):
                nxt[w] = nxt.get(w, 0) + c
        counts = nxt
    return counts.get((p, tuple(lam)), 0)


def _det(l: int, n: int, vertex: Vertex) -> Polynomial:
    p, lam = vertex
    return gram_det(ModuleLabel(l, n, p, tuple(lam)))


def marginal_v(l: int, vertex: Vertex, n: int) -> RationalFunction:
    """det_n(vertex) / prod over neighbours of det_{n-1}(neighbour)."""
    p, lam = vertex
    num = _det(l, n, vertex)
    den = Polynomial.one()
    g = _graph(l, max(n, p + 1))
    for (q, mu) in g.neighbours((p, tuple(lam))):
        if 0 <= q <= n - 1:
            den = den * _det(l, n - 1, (q, mu))
    return RationalFunction(num, den)


def chebyshev_c(l: int, vertex: Vertex, n: int) -> RationalFunction:
    """The Chebyshev-series prediction for the marginal vertex function.

    Product over the up-neighbours (p+1, mu) that carry full-size partitions
    of (P^(mu)_{p+2} / P^(mu)_{p+1}) ** dimension(l, n-1, (p+1, mu)).  The
    ratio is anchored at the vertex, so on the arms it reproduces 𝒱 exactly
    and towards the head it is a genuine conjecture, not a tautology.
    """
    p, lam = vertex
    if p + 1 < l + 2:
        raise ValueError("no full-size up-neighbour: vertex too close to the root")
    out = RationalFunction(Polynomial.one())
    g = _graph(l, p + 1)
    for (q, mu) in g.up_neighbours((p, tuple(lam))):
        if sum(mu) != l + 2:
            continue
        _c, series = factor_one_cup(l, mu)
        ratio = RationalFunction(series.term(p + 2), series.term(p + 1))
        out = out * ratio ** dimension(l, n - 1, (q, mu))
    return out


@dataclass
class ArmRecord:
    p: int
    m: int
    n: int
    equal: bool
    residual: RationalFunction  # 𝒞 / 𝒱; one when equal


def arm_verify(l: int, lam: tuple[int, ...], p_range, m_range) -> list[ArmRecord]:
    """Compare 𝒱 and 𝒞 on the arm of a full-size partition lam |- l+2."""
    lam = tuple(lam)
    if sum(lam) != l + 2:
        raise ValueError("arm labels carry partitions of l+2")
    out = []
    for p in p_range:
        if p < l + 2:
            continue
        for m in m_range:
            n = p + 2 * m
            v = marginal_v(l, (p, lam), n)
            c = chebyshev_c(l, (p, lam), n)
            res = c / v
            out.append(ArmRecord(p, m, n, res == RationalFunction(Polynomial.one()), res))
    return out


# ---------------------------------------------------------------------------
# the l = -1 recursive determinant oracle
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _tl_factored(n: int, p: int) -> tuple[tuple[int, int], ...]:
    """Factored det for the chain: dict-as-tuple {quantum index: exponent}.

    Recursion over rank: det_n(p) picks up det_{n-1}(p-1), det_{n-1}(p+1)
    and the ratio [p+2]/[p+1] raised to the dimension of the (p+1)-module
    one rank down.  Exponents may go negative along the way; the final
    product must divide out exactly.
    """
    if p < 0 or p > n or (n - p) % 2:
        raise ValueError("bad chain label")
    if p == n:
        return ()
    acc: dict[int, int] = {}

    def mix(factors, mult=1):
        for k, e in factors:
            acc[k] = acc.get(k, 0) + e * mult

    if p > 0:
        mix(_tl_factored(n - 1, p - 1))
    d_up = dimension(-1, n - 1, (p + 1, (1,) if p + 1 >= 1 else ()))
    mix(_tl_factored(n - 1, p + 1))
    acc[p + 2] = acc.get(p + 2, 0) + d_up
    acc[p + 1] = acc.get(p + 1, 0) - d_up
    # [1] = 1 contributes nothing
    return tuple(sorted((k, e) for k, e in acc.items() if e and k > 1))


def tl_recursive_det(n: int, p: int) -> Polynomial:
    """Chain-module Gram determinant in the loop parameter, computed by the
    diamond recursion over quantum numbers (no Gram matrix is built)."""
    num, den = Polynomial.one(), Polynomial.one()
    for k, e in _tl_factored(n, p):
        if e > 0:
            num = num * quantum_number(k) ** e
        else:
            den = den * quantum_number(k) ** (-e)
    return num.exact_div(den)


def tl_factored_det(n: int, p: int) -> dict[int, int]:
    """The {quantum index: exponent} form of tl_recursive_det."""
    return dict(_tl_factored(n, p))


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def _vertex_id(v: Vertex) -> str:
    p, lam = v
    return f"{p}_{'-'.join(map(str, lam))}" if lam else f"{p}_"


def export_dot(graph: RolletGraph) -> str:
    lines = ["graph rollet {"]
    for v in graph.vertices:
        label = f"({v[0]}, {list(v[1])})"
        lines.append(f'  "{_vertex_id(v)}" [label="{label}"];')
    for a, b in graph.edges:
        lines.append(f'  "{_vertex_id(a)}" -- "{_vertex_id(b)}";')
    lines.append("}")
    return "\n".join(lines)


def export_json(graph: RolletGraph, n_values=(), decorate_det=True,
                decorate_mvf=False) -> str:
    out = {"l": graph.l, "vertices": []}
    for (p, lam) in graph.vertices:
        fibre = {}
        for n in n_values:
            if n < p or (n - p) % 2:
                continue
            entry = {}
            if decorate_det:
                entry["det"] = _det(graph.l, n, (p, lam)).to_json()
            if decorate_mvf and n > p:
                mvf = marginal_v(graph.l, (p, lam), n)
                entry["mvf"] = {"num": mvf.num.to_json(), "den": mvf.den.to_json()}
            if entry:
                fibre[str(n)] = entry
        out["vertices"].append({"p": p, "lambda": list(lam), "fibre": fibre})
    return json.dumps(out, indent=2, sort_keys=True)
