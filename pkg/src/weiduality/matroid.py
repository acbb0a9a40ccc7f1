"""Matroids behind rank oracles, and everything the duality theorems need from them.

A :class:`Matroid` wraps a callable ``rank(mask) -> int``. Backings live next to
their data: explicit bases and uniform matroids here, graphs in
:mod:`weiduality.graphs`, set systems in :mod:`weiduality.transversal`, and
matrices in :mod:`weiduality.codes`.

The irredundant-union identities are used in the form

    min |union of i irredundant cocircuits| = n - f_{k-i}
    min |union of j irredundant circuits|   = n - f*_{(n-k)-j}

so the first union is the smallest cocircuit (for a graph, the smallest bond).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from .bits import check_table_cap, indices_from_mask, iter_bits, mask_from_indices, popcounts
from .core import DemiMatroid, GroundSet, PartitionReport, check_partition
from .errors import (
    EmptyBases,
    ExchangeViolation,
    Infeasible,
    InternalError,
    MixedCardinality,
    NotPMD,
)

RankFn = Callable[[int], int]

INDEXING_NOTE = (
    "irredundant unions use n - f_{k-i} (cocircuits) and n - f*_{(n-k)-j} (circuits); "
    "indexing them as n - f_{i-1} would list the sequence in reverse"
)


class Matroid:
    """A ground set with a rank oracle.

    ``table`` materialises the oracle over all ``2**n`` subsets on first use
    (subject to ``max_n``); oracles may supply a faster ``table_fn``.
    """

    def __init__(self, ground: GroundSet, rank: RankFn, *, kind: str = "oracle",
                 table_fn: Callable[[], np.ndarray] | None = None, max_n: int | None = None):
        self.ground = ground
        self._rank = rank
        self._table_fn = table_fn
        self.kind = kind
        self.max_n = max_n
        self.k = rank(ground.full)

    @property
    def n(self) -> int:
        return self.ground.n

    def rank(self, mask: int) -> int:
        return self._rank(mask)

    @cached_property
    def table(self) -> np.ndarray:
        check_table_cap(self.n, self.max_n)
        if self._table_fn is not None:
            values = np.asarray(self._table_fn(), dtype=np.int64)
        else:
            values = np.fromiter((self._rank(x) for x in range(1 << self.n)),
                                 dtype=np.int64, count=1 << self.n)
        values.flags.writeable = False
        return values

    def __repr__(self):
        return f"Matroid({self.kind}, n={self.n}, k={self.k})"


def _bases_table(n: int, bases: Sequence[int]) -> np.ndarray:
    masks = np.arange(1 << n)
    pc = popcounts(n)
    best = np.zeros(1 << n, dtype=np.int64)
    for b in bases:
        np.maximum(best, pc[masks & b], out=best)
    return best


def check_basis_exchange(n: int, bases: Sequence[int]) -> None:
    """For bases B1, B2 and x in B1-B2 there is y in B2-B1 with B1-x+y a basis."""
    if n > 16:
        raise ExchangeViolation("exchange verification is limited to n <= 16")
    family = set(bases)
    for b1 in family:
        for b2 in family:
            for x in iter_bits(b1 & ~b2):
                if not any((b1 ^ x) | y in family for y in iter_bits(b2 & ~b1)):
                    raise ExchangeViolation(
                        f"no exchange for B1={indices_from_mask(b1)}, B2={indices_from_mask(b2)}, "
                        f"x={indices_from_mask(x)[0]}")


def matroid_from_bases(n: int, bases: Sequence[int], *, labels: Sequence[str] | None = None,
                       verify: bool = False, max_n: int | None = None) -> Matroid:
    bases = sorted(set(int(b) for b in bases))
    if not bases:
        raise EmptyBases("a matroid needs at least one basis")
    sizes = {b.bit_count() for b in bases}
    if len(sizes) != 1:
        raise MixedCardinality(f"bases have sizes {sorted(sizes)}")
    if any(b >> n for b in bases):
        raise EmptyBases(f"a basis mentions an element outside 0..{n - 1}")
    if verify:
        check_basis_exchange(n, bases)
    ground = GroundSet(n, tuple(labels) if labels is not None else None)

    def rank(x: int) -> int:
        return max((x & b).bit_count() for b in bases)

    return Matroid(ground, rank, kind="bases", table_fn=lambda: _bases_table(n, bases), max_n=max_n)


def uniform_matroid(n: int, k: int, *, max_n: int | None = None) -> Matroid:
    if not 0 <= k <= n:
        raise MixedCardinality(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    return Matroid(GroundSet(n), lambda x: min(x.bit_count(), k), kind="uniform",
                   table_fn=lambda: np.minimum(popcounts(n), k), max_n=max_n)


def free_matroid(n: int) -> Matroid:
    return uniform_matroid(n, n)


VAMOS_NONBASES = ((1, 2, 5, 6), (1, 3, 5, 7), (1, 4, 5, 8), (2, 3, 6, 7), (2, 4, 6, 8))


def vamos() -> Matroid:
    """The Vámos matroid on elements labelled ``"1".."8"`` (element ``i`` has label ``i+1``)."""
    excluded = {mask_from_indices(e - 1 for e in quad) for quad in VAMOS_NONBASES}
    bases = [mask_from_indices(c) for c in combinations(range(8), 4)]
    bases = [b for b in bases if b not in excluded]
    return matroid_from_bases(8, bases, labels=[str(i) for i in range(1, 9)])


def dual_rank(M: Matroid, x: int) -> int:
    full = M.ground.full
    return x.bit_count() - M.k + M.rank(full & ~x)


def dual_matroid(M: Matroid) -> Matroid:
    """Dual via ``rank*(X) = |X| - rank(E) + rank(E - X)``, evaluated lazily."""
    def table():
        t = M.table
        return popcounts(M.n) - M.k + t[::-1]

    return Matroid(M.ground, lambda x: dual_rank(M, x), kind=f"dual({M.kind})",
                   table_fn=table, max_n=M.max_n)


def to_demimatroid(M: Matroid) -> DemiMatroid:
    return DemiMatroid(M.ground, M.table, dual_matroid(M).table, max_n=M.max_n or M.n)


# -- f-coefficients and the matroid Wei theorem ------------------------------------

@dataclass(frozen=True)
class FlatProfile:
    f: tuple[int, ...]
    fstar: tuple[int, ...]


def max_size_by_rank(table: np.ndarray, n: int) -> tuple[int, ...]:
    """``max{|F| : rank(F) = i}`` for ``i = 0..rank(E)``, by a full scan."""
    top = int(table[-1])
    largest = np.full(top + 1, -1, dtype=np.int64)
    np.maximum.at(largest, table, popcounts(n))
    return tuple(int(v) for v in largest)


def f_coefficients(M: Matroid) -> FlatProfile:
    return FlatProfile(max_size_by_rank(M.table, M.n),
                       max_size_by_rank(dual_matroid(M).table, M.n))


def st_from_profile(fp: FlatProfile, n: int, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    S = sorted(n - fp.f[i] for i in range(k))
    T = sorted(fp.fstar[j] + 1 for j in range(n - k))
    return tuple(S), tuple(T)


def st_sets(M: Matroid) -> PartitionReport:
    S, T = st_from_profile(f_coefficients(M), M.n, M.k)
    return check_partition("ST_M", S, T, M.n)


# -- circuits and irredundant unions -----------------------------------------------

@dataclass(frozen=True)
class CircuitFamily:
    n: int
    circuits: tuple[int, ...]

    def __len__(self):
        return len(self.circuits)

    def __iter__(self):
        return iter(self.circuits)

    def as_indices(self) -> list[list[int]]:
        return [indices_from_mask(c) for c in self.circuits]


def minimal_dependent_sets(table: np.ndarray, n: int) -> tuple[int, ...]:
    """Masks ``X`` with ``rank(X) < |X|`` whose every one-smaller subset is independent.

    Since dependence is inherited by supersets, this is exactly "dependent and
    containing no smaller dependent set". Sorted by (popcount, mask).
    """
    pc = popcounts(n)
    dependent = table < pc
    minimal = dependent.copy()
    masks = np.arange(1 << n)
    for i in range(n):
        bit = 1 << i
        has = (masks & bit) != 0
        minimal[has] &= ~dependent[masks[has] ^ bit]
    found = np.flatnonzero(minimal)
    order = np.lexsort((found, pc[found]))
    return tuple(int(x) for x in found[order])


def circuits(M: Matroid) -> CircuitFamily:
    return CircuitFamily(M.n, minimal_dependent_sets(M.table, M.n))


def cocircuits(M: Matroid) -> CircuitFamily:
    return circuits(dual_matroid(M))


def min_irredundant_union(family: CircuitFamily | Sequence[int], count: int,
                          lower_bound: int = 0) -> tuple[int, list[int]]:
    """Smallest ``|X|`` with ``X`` a union of ``count`` members, none inside the union of the rest.

    Exhaustive branch and bound over member combinations in index order. A member
    is redundant exactly when every one of its elements is covered twice, so the
    search tracks the elements covered once (``once``) and more than once
    (``multi``) and cuts a branch as soon as some chosen member loses all of its
    private elements; that can never be repaired by adding members. Every further
    member must bring at least one new element, which gives the size bound.

    ``lower_bound`` is a size known to be unbeatable (for instance one more than
    the optimum for ``count - 1``); the search stops once it is reached.
    """
    members = list(family.circuits if isinstance(family, CircuitFamily) else family)
    members = sorted(set(members), key=lambda m: (m.bit_count(), m))
    if count < 1:
        raise Infeasible("count must be at least 1")
    if len(members) < count:
        raise Infeasible(f"only {len(members)} members, {count} requested")
    if count == 1:
        return members[0].bit_count(), [members[0]]

    best_size = sum(m.bit_count() for m in members) + 1
    best: list[int] = []
    chosen: list[int] = []
    nmem = len(members)

    floor = max(lower_bound, members[0].bit_count() + count - 1)

    def search(start: int, union: int, once: int, multi: int) -> bool:
        """Return True once an optimum at ``floor`` is found."""
        nonlocal best_size, best
        need = count - len(chosen)
        size = union.bit_count()
        if need == 0:
            if size < best_size:
                best_size, best = size, list(chosen)
            return best_size <= floor
        if size + need >= best_size:
            return False
        for idx in range(start, nmem - need + 1):
            c = members[idx]
            new = c & ~union
            if not new:
                continue
            grown = size + new.bit_count()
            if grown + need - 1 >= best_size:
                # members are sorted by size, but a later one may overlap more; keep scanning
                continue
            n_once = (once & ~c) | new
            n_multi = multi | (once & c)
            if any(not (m & n_once) for m in chosen):
                continue
            chosen.append(c)
            done = search(idx + 1, union | c, n_once, n_multi)
            chosen.pop()
            if done:
                return True
        return False

    search(0, 0, 0, 0)
    if not best:
        raise Infeasible(f"no {count} irredundant members exist")
    return best_size, best


def union_sequence(family: CircuitFamily, length: int) -> tuple[int, ...]:
    """``min_irredundant_union(family, i)`` for ``i = 1..length``.

    Dropping one member of an optimal ``i``-union leaves an irredundant
    ``(i-1)``-union at least one element smaller, so each optimum bounds the next.
    """
    out: list[int] = []
    for i in range(1, length + 1):
        size, _ = min_irredundant_union(family, i, lower_bound=out[-1] + 1 if out else 0)
        out.append(size)
    return tuple(out)


def cocircuit_sequence_from_profile(fp: FlatProfile, n: int, k: int) -> tuple[int, ...]:
    return tuple(n - fp.f[k - i] for i in range(1, k + 1))


def circuit_sequence_from_profile(fp: FlatProfile, n: int, k: int) -> tuple[int, ...]:
    return tuple(n - fp.fstar[(n - k) - j] for j in range(1, n - k + 1))


# -- closure and perfect matroid designs -------------------------------------------

def closure(M: Matroid, x: int) -> int:
    r = M.rank(x)
    cl = x
    for bit in iter_bits(M.ground.full & ~x):
        if M.rank(x | bit) == r:
            cl |= bit
    return cl


def flats(M: Matroid) -> tuple[int, ...]:
    """All closed sets, ascending by mask."""
    t = M.table
    n = M.n
    masks = np.arange(1 << n)
    closed = np.ones(1 << n, dtype=bool)
    for i in range(n):
        bit = 1 << i
        out = (masks & bit) == 0
        closed[out] &= t[masks[out] | bit] > t[masks[out]]
    return tuple(int(x) for x in np.flatnonzero(closed))


def is_pmd(M: Matroid) -> tuple[bool, tuple[int, ...] | None]:
    """Whether all flats of equal rank have equal size; if so, the size for each rank."""
    t = M.table
    sizes: dict[int, set[int]] = {}
    for f in flats(M):
        sizes.setdefault(int(t[f]), set()).add(f.bit_count())
    if any(len(v) > 1 for v in sizes.values()):
        return False, None
    return True, tuple(sizes[r].pop() for r in range(M.k + 1))


@dataclass(frozen=True)
class PMDReport:
    flat_sizes: tuple[int, ...]
    S: tuple[int, ...]
    predicted_T: tuple[int, ...]
    predicted_fstar: tuple[int, ...]
    actual_T: tuple[int, ...]
    actual_fstar: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.predicted_T == self.actual_T and self.predicted_fstar == self.actual_fstar


def pmd_dual_profile_check(M: Matroid) -> PMDReport:
    """Recover the dual's f-profile from the flat sizes of a perfect matroid design.

    Flat sizes give ``S_M``; the partition theorem forces ``T_M`` to be the
    complement, and ``T_M`` lists ``f*_j + 1`` in increasing order.
    """
    ok, sizes = is_pmd(M)
    if not ok:
        raise NotPMD("flats of equal rank have different sizes")
    n, k = M.n, M.k
    S = tuple(sorted(n - sizes[i] for i in range(k)))
    predicted_T = tuple(x for x in range(1, n + 1) if x not in S)
    predicted_fstar = tuple(x - 1 for x in predicted_T) + (n,)
    fp = f_coefficients(M)
    _, actual_T = st_from_profile(fp, n, k)
    if sizes != fp.f:
        raise InternalError(f"flat sizes {sizes} disagree with f-profile {fp.f}")
    return PMDReport(sizes, S, predicted_T, predicted_fstar, actual_T, fp.fstar)


def check_unit_increase(M: Matroid, pairs) -> list[tuple[int, int]]:
    """Pairs ``(X, x)`` where adding element ``x`` changes the rank by other than 0 or 1."""
    bad = []
    for x, e in pairs:
        step = M.rank(x | (1 << e)) - M.rank(x)
        if step not in (0, 1) or (x >> e & 1 and step):
            bad.append((x, e))
    return bad
