"""Transversal matroids of set systems, plugs, and the m/p sequences."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

import numpy as np

from .bits import check_table_cap, indices_from_mask, iter_bits, mask_from_indices, popcounts
from .core import GroundSet, PartitionReport, check_partition
from .errors import InternalError, SizeError
from .matroid import (
    CircuitFamily,
    Matroid,
    circuit_sequence_from_profile,
    circuits,
    f_coefficients,
    union_sequence,
)


class ErratumWarning(UserWarning):
    """Recomputed values differ from the reference values recorded for a known system."""


@dataclass(frozen=True)
class SetSystem:
    """A multiset ``A_1..A_m`` of subsets of the ground set (masks, in order)."""
    ground: GroundSet
    sets: tuple[int, ...]

    def __post_init__(self):
        sets = tuple(int(a) for a in self.sets)
        object.__setattr__(self, "sets", sets)
        for a in sets:
            if a < 0 or a >> self.ground.n:
                raise SizeError(f"set {a:#b} is not a subset of the {self.ground.n}-element ground set")

    @property
    def n(self) -> int:
        return self.ground.n

    @classmethod
    def from_labels(cls, labels: Sequence[str], sets: Sequence[Sequence[str]]) -> "SetSystem":
        pos = {x: i for i, x in enumerate(labels)}
        return cls(GroundSet(len(labels), tuple(labels)),
                   tuple(mask_from_indices(pos[x] for x in a) for a in sets))


def transversal_rank(A: SetSystem, x: int) -> int:
    """Maximum matching between the elements of ``x`` and the sets, by augmenting paths."""
    owner = [-1] * len(A.sets)  # set index -> matched element
    elems = indices_from_mask(x)
    adj = {e: [j for j, a in enumerate(A.sets) if a >> e & 1] for e in elems}

    def augment(e: int, seen: set[int]) -> bool:
        for j in adj[e]:
            if j in seen:
                continue
            seen.add(j)
            if owner[j] < 0 or augment(owner[j], seen):
                owner[j] = e
                return True
        return False

    return sum(augment(e, set()) for e in elems)


def exhaustive_matching_ranks(A: SetSystem) -> np.ndarray:
    """Rank of every subset by brute force: try injective set assignments directly.

    ``Y`` is a partial transversal when some ordering of ``|Y|`` distinct sets
    matches its elements one by one; only sets whose one-smaller subsets all pass
    are tried, and the rank of ``X`` is the largest passing ``Y`` inside it.
    """
    n, m = A.n, len(A.sets)
    pc = popcounts(n)
    partial = np.zeros(1 << n, dtype=bool)
    partial[0] = True
    for y in sorted(range(1, 1 << n), key=lambda v: (pc[v], v)):
        size = int(pc[y])
        if size > m or not all(partial[y ^ b] for b in iter_bits(y)):
            continue
        elems = indices_from_mask(y)
        partial[y] = any(all(A.sets[j] >> e & 1 for e, j in zip(elems, order))
                         for order in permutations(range(m), size))
    ranks = np.where(partial, pc, 0)
    for i in range(n):
        bit = 1 << i
        idx = np.flatnonzero(np.arange(1 << n) & bit)
        ranks[idx] = np.maximum(ranks[idx], ranks[idx ^ bit])
    return ranks


def transversal_matroid(A: SetSystem, max_n: int | None = None) -> Matroid:
    return Matroid(A.ground, lambda x: transversal_rank(A, x), kind="transversal", max_n=max_n)


def is_plug(A: SetSystem, x: int) -> bool:
    """Not a partial transversal, though removing any one element makes it one."""
    size = x.bit_count()
    if transversal_rank(A, x) == size:
        return False
    return all(transversal_rank(A, x ^ b) == size - 1 for b in iter_bits(x))


def plugs(A: SetSystem, max_n: int | None = None) -> CircuitFamily:
    family = circuits(transversal_matroid(A, max_n))
    for x in family:
        if not is_plug(A, x):
            raise InternalError(f"circuit {indices_from_mask(x)} fails the plug definition")
    return family


@dataclass(frozen=True)
class TransversalSequences:
    m: tuple[int, ...]
    p: tuple[int, ...]
    U: tuple[int, ...]
    V: tuple[int, ...]
    partition: PartitionReport
    warnings: tuple[str, ...] = ()


def _largest_with_rank(ranks: np.ndarray, n: int, i: int) -> int:
    """Largest set containing a partial transversal of size ``i`` but none of size ``i+1``."""
    return int(popcounts(n)[ranks == i].max())


REFERENCE_SYSTEM = {
    "labels": ("a", "b", "c", "d", "e"),
    "sets": (("a", "b"), ("a", "c"), ("d",), ("d",)),
    "U": (2, 4, 5),
    "V": (1, 3),
}


def example_set_system() -> SetSystem:
    return SetSystem.from_labels(REFERENCE_SYSTEM["labels"], REFERENCE_SYSTEM["sets"])


def _reference_values_for(A: SetSystem) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    ref = example_set_system()
    if A.n == ref.n and sorted(A.sets) == sorted(ref.sets):
        return REFERENCE_SYSTEM["U"], REFERENCE_SYSTEM["V"]
    return None


def mp_sequences(A: SetSystem, max_n: int | None = None) -> TransversalSequences:
    """m_i from largest rank-i sets and p_j from plug unions, with a cross-check of p_j."""
    check_table_cap(A.n, max_n)
    M = transversal_matroid(A, max_n)
    n, k = A.n, M.k
    ranks = M.table
    m = tuple(_largest_with_rank(ranks, n, i) for i in range(k))
    p = union_sequence(plugs(A, max_n), n - k) if n > k else ()
    fp = f_coefficients(M)
    expected_p = circuit_sequence_from_profile(fp, n, k)
    if p != expected_p or m != fp.f[:k]:
        raise InternalError(f"plug unions {p} / m {m} disagree with the f-profile {fp}")
    U = tuple(sorted(x + 1 for x in m))
    V = tuple(sorted(p))
    notes = []
    reference = _reference_values_for(A)
    if reference is not None and reference != (U, V):
        msg = (f"reference values U={set(reference[0])}, V={set(reference[1])} for this system are not "
               f"reproducible; exhaustive matching gives U={set(U)}, V={set(V)}")
        notes.append(msg)
        warnings.warn(msg, ErratumWarning, stacklevel=2)
    return TransversalSequences(m, p, U, V, check_partition("UV_A", U, V, n), tuple(notes))
