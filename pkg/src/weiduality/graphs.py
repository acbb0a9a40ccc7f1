"""Cycle matroids of multigraphs: bonds, cycles, and the b/c sequences."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from .bits import MAX_N, popcounts
from .core import GroundSet, PartitionReport, check_partition
from .errors import BadParameters, InternalError, SizeError
from .matroid import (
    CircuitFamily,
    Matroid,
    circuit_sequence_from_profile,
    circuits,
    cocircuit_sequence_from_profile,
    cocircuits,
    f_coefficients,
    union_sequence,
)


@dataclass(frozen=True)
class Multigraph:
    """Edges are ground-set elements in list order; loops and parallel edges allowed."""
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise SizeError("vertex count must be non-negative")
        if len(edges) > MAX_N:
            raise SizeError(f"{len(edges)} edges exceed the {MAX_N}-element limit")
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise SizeError(f"edge ({u},{v}) has an endpoint outside 0..{self.vertex_count - 1}")

    @property
    def n(self) -> int:
        return len(self.edges)


def forest_rank(G: Multigraph, mask: int) -> int:
    """Edges in a spanning forest of ``(V, X)``: vertices minus components, by union-find."""
    parent = list(range(G.vertex_count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    r = 0
    for i, (u, v) in enumerate(G.edges):
        if mask >> i & 1:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
    return r


def forest_rank_table(G: Multigraph) -> np.ndarray:
    """``forest_rank`` for all masks, built by adding the top edge to the rest.

    ``labels[X]`` holds a component label per vertex for the subgraph ``X``.
    """
    n, nv = G.n, G.vertex_count
    labels = np.zeros((1 << n, max(nv, 1)), dtype=np.int64)
    labels[0] = np.arange(max(nv, 1))
    ranks = np.zeros(1 << n, dtype=np.int64)
    for i, (u, v) in enumerate(G.edges):
        lo, hi = 1 << i, 1 << (i + 1)
        base = labels[:lo]
        lu, lv = base[:, u], base[:, v]
        joins = lu != lv
        new = np.where(base == lv[:, None], lu[:, None], base)
        labels[lo:hi] = new
        ranks[lo:hi] = ranks[:lo] + joins
    return ranks


def cycle_matroid(G: Multigraph, max_n: int | None = None) -> Matroid:
    return Matroid(GroundSet(G.n), lambda x: forest_rank(G, x), kind="graphic",
                   table_fn=lambda: forest_rank_table(G), max_n=max_n)


def bonds(G: Multigraph, max_n: int | None = None) -> CircuitFamily:
    return cocircuits(cycle_matroid(G, max_n))


def graph_cycles(G: Multigraph, max_n: int | None = None) -> CircuitFamily:
    return circuits(cycle_matroid(G, max_n))


@dataclass(frozen=True)
class BondCycleSequences:
    b: tuple[int, ...]
    c: tuple[int, ...]
    U: tuple[int, ...]
    V: tuple[int, ...]
    partition: PartitionReport


def bc_sequences(G: Multigraph, max_n: int | None = None) -> BondCycleSequences:
    """b_i and c_j twice over: from the f-profile and from irredundant-union search."""
    M = cycle_matroid(G, max_n)
    n, k = M.n, M.k
    fp = f_coefficients(M)
    b = cocircuit_sequence_from_profile(fp, n, k)
    c = circuit_sequence_from_profile(fp, n, k)
    b_search = union_sequence(cocircuits(M), k)
    c_search = union_sequence(circuits(M), n - k)
    if b != b_search or c != c_search:
        raise InternalError(f"profile route b={b}, c={c} vs union search b={b_search}, c={c_search}")
    U = tuple(sorted(b))
    V = tuple(sorted(n + 1 - x for x in c))
    return BondCycleSequences(b, c, U, V, check_partition("UV_G", U, V, n))


def max_subgraph_check(G: Multigraph, max_n: int | None = None) -> dict:
    """Check both extremal descriptions of ``n - b_i`` and ``n - c_j`` by direct scans.

    ``n - b_i`` is the largest edge set whose spanning forests have ``k - i``
    edges. ``n - c_j`` is the largest edge set ``E'`` such that deleting any
    ``(n-k-j+1)``-subset of ``E'`` leaves a graph that no longer spans ``G``.
    """
    seq = bc_sequences(G, max_n)
    M = cycle_matroid(G, max_n)
    n, k = M.n, M.k
    rank = M.table
    pc = popcounts(n)
    forest_sizes = []
    for i in range(1, k + 1):
        forest_sizes.append(int(pc[rank == k - i].max()))
    # keeps_spanning[X]: deleting X leaves a spanning subgraph; largest[X]: biggest such subset of X
    full = (1 << n) - 1
    keeps_spanning = rank[full ^ np.arange(1 << n)] == k
    largest = np.where(keeps_spanning, pc, 0)
    for i in range(n):
        bit = 1 << i
        has = (np.arange(1 << n) & bit) != 0
        idx = np.flatnonzero(has)
        largest[idx] = np.maximum(largest[idx], largest[idx ^ bit])
    disconnect_sizes = []
    for j in range(1, n - k + 1):
        r = n - k - j + 1
        disconnect_sizes.append(int(pc[largest < r].max()))
    b_ok = all(n - bi == m for bi, m in zip(seq.b, forest_sizes))
    c_ok = all(n - cj == m for cj, m in zip(seq.c, disconnect_sizes))
    return {
        "b": list(seq.b),
        "c": list(seq.c),
        "largest_forest_limited": forest_sizes,
        "largest_disconnecting": disconnect_sizes,
        "b_ok": b_ok,
        "c_ok": c_ok,
        "ok": b_ok and c_ok,
    }


def complete_graph(m: int) -> Multigraph:
    if m < 1:
        raise BadParameters("complete graph needs m >= 1")
    return Multigraph(m, tuple((u, v) for u in range(m) for v in range(u + 1, m)))


def complete_bipartite(l: int, m: int) -> Multigraph:
    if l < 1 or m < 1:
        raise BadParameters("complete bipartite graph needs l, m >= 1")
    return Multigraph(l + m, tuple((u, l + v) for u in range(l) for v in range(m)))


def km_closed_form(m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Closed-form b-set and c-set of the complete graph on ``m`` vertices."""
    if m < 1:
        raise BadParameters("closed form needs m >= 1")
    n, k = comb(m, 2), m - 1
    b = {n - comb(i, 2) for i in range(1, k + 1)}
    c = set(range(1, n + 1)) - {comb(i, 2) + 1 for i in range(1, k + 1)}
    return tuple(sorted(b)), tuple(sorted(c))


def klm_closed_form(l: int, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Closed-form b-set and c-set of the complete bipartite graph with parts ``l >= m``."""
    if not l >= m >= 1:
        raise BadParameters(f"closed form needs l >= m >= 1, got l={l}, m={m}")
    n = l * m
    b = {i * m for i in range(1, l - m + 1)} | {n - i * i // 4 for i in range(1, 2 * m)}
    removed = {n + 1 - i * m for i in range(1, l - m + 1)} | {i * i // 4 + 1 for i in range(1, 2 * m)}
    c = set(range(1, n + 1)) - removed
    return tuple(sorted(b)), tuple(sorted(c))


def four_cycle_with_chord() -> Multigraph:
    """Five edges: the 4-cycle 0-1-2-3-0 plus the chord 1-3."""
    return Multigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (1, 3)))


def graph_from_edges(vertices: int, edges: Sequence[Sequence[int]]) -> Multigraph:
    return Multigraph(vertices, tuple(tuple(e) for e in edges))
