"""Demi-matroids: validation, the two involutions, weight profiles and feature sets.

A demi-matroid on ``n`` elements is stored as two dense rank tables of length
``2**n`` indexed by subset mask. Everything here is exhaustive over subsets,
so the default cap is ``n <= 20``; pass ``max_n`` to go further.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .bits import MAX_N, check_table_cap, full_mask, popcounts
from .errors import DViolation, InternalError, RViolation, SizeError


@dataclass(frozen=True)
class GroundSet:
    n: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise SizeError(f"ground set size {self.n} outside [0, {MAX_N}]")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise SizeError(f"{len(labels)} labels for {self.n} elements")
            if len(set(labels)) != self.n:
                raise SizeError("labels must be pairwise distinct")
            object.__setattr__(self, "labels", labels)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.label(i) for i in range(self.n) if mask >> i & 1) + "}"


def as_table(values, n: int, name: str = "table") -> np.ndarray:
    """Copy ``values`` into a read-only int64 rank table of length ``2**n``."""
    table = np.array(values, dtype=np.int64).reshape(-1)
    if table.shape[0] != 1 << n:
        raise SizeError(f"{name} table has length {table.shape[0]}, expected 2**{n} = {1 << n}")
    table.flags.writeable = False
    return table


def check_axiom_r(table: np.ndarray, n: int, name: str) -> None:
    """Raise :class:`RViolation` unless ``0 <= f(X) <= f(Y) <= |Y|`` for all ``X ⊆ Y``.

    Single-element steps suffice: monotonicity is transitive along chains.
    """
    pc = popcounts(n)
    bad = np.flatnonzero(table < 0)
    if bad.size:
        x = int(bad[0])
        raise RViolation(name, x, x, "negative value")
    bad = np.flatnonzero(table > pc)
    if bad.size:
        y = int(bad[0])
        raise RViolation(name, y, y, f"value {int(table[y])} exceeds |Y|={int(pc[y])}")
    masks = np.arange(1 << n)
    worst = None
    for i in range(n):
        bit = 1 << i
        lower = masks[(masks & bit) == 0]
        drops = lower[table[lower | bit] < table[lower]]
        if drops.size and (worst is None or drops[0] < worst[0]):
            worst = (int(drops[0]), int(drops[0]) | bit)
    if worst is not None:
        raise RViolation(name, worst[0], worst[1], "not monotone")


def check_axiom_d(s: np.ndarray, t: np.ndarray, n: int) -> None:
    """Raise :class:`DViolation` unless both (D) and its mirror (D') hold everywhere."""
    pc = popcounts(n)
    full = full_mask(n)
    co = n - pc  # |E - X|; reversing a table maps X to E - X
    bad_d = np.flatnonzero(co - s[::-1] != t[full] - t)
    bad_dp = np.flatnonzero(co - t[::-1] != s[full] - s)
    if bad_d.size:
        x = int(bad_d[0])
        raise DViolation(x, "D", f"|E-X|-s(E-X)={int(co[x] - s[full ^ x])} but t(E)-t(X)={int(t[full] - t[x])}")
    if bad_dp.size:
        # (D) and (D') are equivalent once s(∅)=t(∅)=0; reaching here means (R) was skipped
        x = int(bad_dp[0])
        raise DViolation(x, "D'", "mirror identity fails")
    if int(s[full]) + int(t[full]) != n:
        raise DViolation(0, "D", f"s(E)+t(E)={int(s[full]) + int(t[full])} != n={n}")


class DemiMatroid:
    """A triple ``(E, s, t)`` with both tables satisfying (R) and jointly (D).

    Instances are immutable; ``s`` and ``t`` are read-only numpy arrays.
    """

    def __init__(self, ground: GroundSet, s, t, *, validate: bool = True, max_n: int | None = None):
        check_table_cap(ground.n, max_n)
        self.ground = ground
        self.s = as_table(s, ground.n, "s")
        self.t = as_table(t, ground.n, "t")
        if validate:
            check_axiom_r(self.s, ground.n, "s")
            check_axiom_r(self.t, ground.n, "t")
            check_axiom_d(self.s, self.t, ground.n)
        self.k = int(self.s[ground.full])

    @property
    def n(self) -> int:
        return self.ground.n

    def __eq__(self, other):
        if not isinstance(other, DemiMatroid):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.s, other.s)
                and np.array_equal(self.t, other.t))

    def __hash__(self):
        return hash((self.n, self.s.tobytes(), self.t.tobytes()))

    def __repr__(self):
        return f"DemiMatroid(n={self.n}, k={self.k})"

    @cached_property
    def sequences(self) -> "Sequences":
        return _sequences(self)


def build_demimatroid(n: int, s_table, t_table, labels: Sequence[str] | None = None,
                      max_n: int | None = None) -> DemiMatroid:
    ground = GroundSet(n, tuple(labels) if labels is not None else None)
    return DemiMatroid(ground, s_table, t_table, max_n=max_n)


def dual(D: DemiMatroid) -> DemiMatroid:
    return DemiMatroid(D.ground, D.t, D.s, validate=False, max_n=D.n)


def bar(table: np.ndarray) -> np.ndarray:
    """Pointwise ``f(E) - f(E - X)``."""
    return table[-1] - table[::-1]


def supplement(D: DemiMatroid) -> DemiMatroid:
    try:
        return DemiMatroid(D.ground, bar(D.s), bar(D.t), max_n=D.n)
    except (RViolation, DViolation) as exc:
        raise InternalError(f"supplement failed re-validation: {exc}") from exc


# -- weight profiles -------------------------------------------------------------

@dataclass(frozen=True)
class Sequences:
    """The four unbarred sequences of one demi-matroid."""
    sigma: tuple[int, ...]
    tau: tuple[int, ...]
    smax: tuple[int, ...]
    tmax: tuple[int, ...]


@dataclass(frozen=True)
class WeightProfile:
    sigma: tuple[int, ...]
    tau: tuple[int, ...]
    smax: tuple[int, ...]
    tmax: tuple[int, ...]
    sigma_bar: tuple[int, ...]
    tau_bar: tuple[int, ...]
    smax_bar: tuple[int, ...]
    tmax_bar: tuple[int, ...]


def size_extremes(table: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per rank value ``v``: smallest and largest ``|X|`` with ``f(X) == v``.

    Values never attained get ``n + 1`` (smallest) and ``-1`` (largest).
    """
    top = int(table[-1])
    pc = popcounts(n)
    smallest = np.full(top + 1, n + 1, dtype=np.int64)
    largest = np.full(top + 1, -1, dtype=np.int64)
    np.minimum.at(smallest, table, pc)
    np.maximum.at(largest, table, pc)
    return smallest, largest


def min_size_at_least(table: np.ndarray, n: int) -> tuple[int, ...]:
    """``min{|X| : f(X) >= i}`` for ``i = 0..f(E)``."""
    smallest, _ = size_extremes(table, n)
    return tuple(int(v) for v in np.minimum.accumulate(smallest[::-1])[::-1])


def max_size_at_most(table: np.ndarray, n: int) -> tuple[int, ...]:
    """``max{|X| : f(X) <= i}`` for ``i = 0..f(E)``."""
    _, largest = size_extremes(table, n)
    return tuple(int(v) for v in np.maximum.accumulate(largest))


def _sequences(D: DemiMatroid) -> Sequences:
    return Sequences(
        sigma=min_size_at_least(D.s, D.n),
        tau=min_size_at_least(D.t, D.n),
        smax=max_size_at_most(D.s, D.n),
        tmax=max_size_at_most(D.t, D.n),
    )


def profiles(D: DemiMatroid) -> WeightProfile:
    own = D.sequences
    sup = supplement(D).sequences
    return WeightProfile(own.sigma, own.tau, own.smax, own.tmax,
                         sup.sigma, sup.tau, sup.smax, sup.tmax)


# -- feature sets and the two partition theorems ---------------------------------

@dataclass(frozen=True)
class FeatureSets:
    S: tuple[int, ...]
    T: tuple[int, ...]
    U: tuple[int, ...]
    V: tuple[int, ...]


def feature_sets(D: DemiMatroid) -> FeatureSets:
    n, k = D.n, D.k
    seq = D.sequences
    S = [n - seq.smax[i] for i in range(k)]
    T = [seq.tmax[j] + 1 for j in range(n - k)]
    U = list(seq.sigma[1:])
    V = [n + 1 - seq.tau[j] for j in range(1, n - k + 1)]
    return FeatureSets(*(tuple(sorted(x)) for x in (S, T, U, V)))


@dataclass(frozen=True)
class PartitionReport:
    """Whether ``first`` and ``second`` split ``{1..n}`` into two disjoint parts."""
    tag: str
    first: tuple[int, ...]
    second: tuple[int, ...]
    n: int
    violations: tuple[tuple[str, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_partition(tag: str, first, second, n: int) -> PartitionReport:
    a, b = list(first), list(second)
    sa, sb = set(a), set(b)
    bad: set[int] = set()
    bad |= set(range(1, n + 1)) - (sa | sb)
    bad |= sa & sb
    bad |= {x for x in sa | sb if not 1 <= x <= n}
    # a repeated value inside one side is as fatal as an overlap
    bad |= {x for x in sa if a.count(x) > 1} | {x for x in sb if b.count(x) > 1}
    return PartitionReport(tag, tuple(sorted(sa)), tuple(sorted(sb)), n,
                           tuple((tag, x) for x in sorted(bad)))


@dataclass(frozen=True)
class DualityReport:
    feature_sets: FeatureSets
    st: PartitionReport
    uv: PartitionReport

    @property
    def partition_equ_ok(self) -> bool:
        return self.st.ok

    @property
    def partition_ok(self) -> bool:
        return self.uv.ok

    @property
    def violations(self) -> tuple[tuple[str, int], ...]:
        return self.st.violations + self.uv.violations


def verify_wei(D: DemiMatroid) -> DualityReport:
    fs = feature_sets(D)
    return DualityReport(fs, check_partition("ST", fs.S, fs.T, D.n),
                         check_partition("UV", fs.U, fs.V, D.n))


@dataclass(frozen=True)
class BoundRecord:
    name: str
    index: int
    value: int
    bound: int
    satisfied: bool


def singleton_check(D: DemiMatroid) -> list[BoundRecord]:
    """Every profile entry against its Singleton-type bound (``n-k+i`` or ``k+j``)."""
    n, k = D.n, D.k
    seq = D.sequences
    out = []
    for name, values, offset in (("sigma", seq.sigma, n - k), ("smax", seq.smax, n - k),
                                 ("tau", seq.tau, k), ("tmax", seq.tmax, k)):
        for i, v in enumerate(values):
            out.append(BoundRecord(name, i, v, offset + i, v <= offset + i))
    return out


def is_matroid_like(D: DemiMatroid) -> bool:
    """True when ``sigma_i = i`` and ``tau_j = j``; necessary for ``(E, rho, rho*)``."""
    seq = D.sequences
    return seq.sigma == tuple(range(D.k + 1)) and seq.tau == tuple(range(D.n - D.k + 1))


def _strict_chain(values: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


def audit(D: DemiMatroid) -> dict[str, bool]:
    """Check every structural law on ``D``; keys name the law, values say whether it holds."""
    n, k = D.n, D.k
    pc = popcounts(n)
    masks = np.arange(1 << n)
    checks: dict[str, bool] = {}

    unit = True
    for i in range(n):
        bit = 1 << i
        upper = masks[(masks & bit) != 0]
        for f in (D.s, D.t):
            if np.any(f[upper ^ bit] < f[upper] - 1):
                unit = False
    checks["difference_lemma"] = unit

    same = True
    for f in (D.s, D.t):
        smallest, largest = size_extremes(f, n)
        same &= tuple(int(v) for v in smallest) == min_size_at_least(f, n)
        same &= tuple(int(v) for v in largest) == max_size_at_most(f, n)
    checks["equivalent_characterizations"] = bool(same)

    seq = D.sequences
    checks["monotone_chains"] = (
        seq.sigma[0] == 0 and seq.tau[0] == 0
        and _strict_chain(seq.sigma) and _strict_chain(seq.tau)
        and _strict_chain(seq.smax) and _strict_chain(seq.tmax)
        and seq.smax[-1] == n and seq.tmax[-1] == n
        and seq.sigma[-1] <= n and seq.tau[-1] <= n and seq.smax[0] >= 0 and seq.tmax[0] >= 0
        and len(seq.sigma) == k + 1 and len(seq.tau) == n - k + 1
    )
    checks["singleton_bounds"] = all(r.satisfied for r in singleton_check(D))

    Ds, Db = dual(D), supplement(D)
    checks["dual_involution"] = dual(Ds) == D
    checks["supplement_involution"] = supplement(Db) == D
    checks["dual_supplement_commute"] = supplement(Ds) == dual(Db)

    sb = Db.sequences
    checks["index_reversal"] = all(
        seq.smax[i] == n - sb.sigma[k - i] and seq.sigma[i] == n - sb.smax[k - i] for i in range(k + 1)
    ) and all(
        seq.tmax[j] == n - sb.tau[n - k - j] and seq.tau[j] == n - sb.tmax[n - k - j]
        for j in range(n - k + 1)
    )
    fs, fb = feature_sets(D), feature_sets(Db)
    checks["supplement_swaps_sets"] = fs.S == fb.U and fs.T == fb.V
    report = verify_wei(D)
    checks["partition_ST"] = report.partition_equ_ok
    checks["partition_UV"] = report.partition_ok
    checks["cardinality_sum"] = int(D.s[-1]) + int(D.t[-1]) == n and bool(np.all(D.s <= pc))
    return checks
