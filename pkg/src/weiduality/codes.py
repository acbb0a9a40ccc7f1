"""Linear codes over finite fields and their generalized Hamming weights."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .bits import MAX_N, check_table_cap, full_mask, popcounts
from .core import DemiMatroid, GroundSet, PartitionReport, check_partition, supplement
from .errors import CapExceeded, InternalError, SizeError
from .gf import FiniteField, as_matrix, batched_column_ranks, nullspace, rref
from .matroid import Matroid

ORACLE_CODEWORD_LIMIT = 4096
SUBSPACE_LIMIT = 5_000


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Row space of ``generator`` over ``field``; the generator is kept in RREF with no zero rows."""
    field: FiniteField
    generator: np.ndarray
    n: int

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @classmethod
    def from_rows(cls, field: FiniteField, rows, n: int | None = None) -> "LinearCode":
        M = as_matrix(field, rows, n)
        if n is not None and M.shape[1] != n:
            raise SizeError(f"generator has {M.shape[1]} columns, expected {n}")
        n = M.shape[1]
        if n > MAX_N:
            raise SizeError(f"code length {n} exceeds {MAX_N}")
        R, r, _ = rref(field, M) if M.shape[0] else (M, 0, ())
        G = np.array(R[:r], dtype=np.int64).reshape(r, n)
        G.flags.writeable = False
        return cls(field, G, n)

    def same_space(self, other: "LinearCode") -> bool:
        return (self.field == other.field and self.n == other.n
                and np.array_equal(self.generator, other.generator))

    def codewords(self) -> np.ndarray:
        """All ``q**k`` codewords, one per row."""
        F, k = self.field, self.k
        words = np.zeros((1, self.n), dtype=np.int64)
        for row in self.generator:
            multiples = F.mul[np.arange(F.q)[:, None], row[None, :]]
            words = F.add[words[:, None, :], multiples[None, :, :]].reshape(-1, self.n)
        assert words.shape[0] == F.q ** k
        return words


def support(word) -> int:
    mask = 0
    for i, x in enumerate(word):
        if x:
            mask |= 1 << i
    return mask


def weight(mask: int) -> int:
    return mask.bit_count()


def code_support(C: LinearCode) -> int:
    """Union of the supports of the generator rows (equal to the union over all codewords)."""
    mask = 0
    for row in C.generator:
        mask |= support(row)
    return mask


def dual_code(C: LinearCode) -> LinearCode:
    if C.k == 0:
        return LinearCode.from_rows(C.field, np.eye(C.n, dtype=np.int64), C.n)
    return LinearCode.from_rows(C.field, nullspace(C.field, C.generator), C.n)


def _columns(C: LinearCode, keep: int) -> list[int]:
    return [c for c in range(C.n) if keep >> c & 1]


def puncture(C: LinearCode, x: int) -> LinearCode:
    """Delete the coordinates in ``x``."""
    cols = _columns(C, full_mask(C.n) & ~x)
    return LinearCode.from_rows(C.field, C.generator[:, cols].reshape(C.k, len(cols)), len(cols))


def shorten(C: LinearCode, x: int) -> LinearCode:
    """The subcode ``C(X)`` of codewords supported inside ``x``, on all ``n`` coordinates."""
    F = C.field
    outside = _columns(C, full_mask(C.n) & ~x)
    if C.k == 0:
        return C
    # messages u with (u G)_j = 0 for every j outside x
    msgs = nullspace(F, C.generator[:, outside].T) if outside else np.eye(C.k, dtype=np.int64)
    if msgs.shape[0] == 0:
        return LinearCode.from_rows(F, np.zeros((0, C.n), dtype=np.int64), C.n)
    return LinearCode.from_rows(F, _matmul(F, msgs, C.generator), C.n)


def _matmul(F: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[1]):
        out = F.add[out, F.mul[A[:, i][:, None], B[i][None, :]]]
    return out


def check_dimension_identity(C: LinearCode, x: int) -> bool:
    return puncture(C, x).k + shorten(C, x).k == C.k


def column_rank_table(C: LinearCode, max_n: int | None = None) -> np.ndarray:
    """``rho_C(X) = dim C punctured to X`` for every mask ``X``."""
    check_table_cap(C.n, max_n)
    ranks = batched_column_ranks(C.field, C.generator, np.arange(1 << C.n))
    ranks.flags.writeable = False
    return ranks


def vector_matroid(C: LinearCode, max_n: int | None = None) -> Matroid:
    from .gf import column_rank_of_subset

    return Matroid(GroundSet(C.n), lambda x: column_rank_of_subset(C.field, C.generator, x),
                   kind="vector", table_fn=lambda: column_rank_table(C, max_n), max_n=max_n)


def code_demimatroid(C: LinearCode, max_n: int | None = None) -> DemiMatroid:
    return DemiMatroid(GroundSet(C.n), column_rank_table(C, max_n),
                       column_rank_table(dual_code(C), max_n), max_n=max_n)


# -- generalized Hamming weights -------------------------------------------------

def gaussian_binomial(k: int, i: int, q: int) -> int:
    num = den = 1
    for j in range(i):
        num *= q ** (k - j) - 1
        den *= q ** (j + 1) - 1
    return num // den


def rref_coefficient_matrices(k: int, i: int, q: int):
    """Every ``i x k`` RREF matrix of rank ``i`` over GF(q): one per ``i``-dim subspace."""
    for pivots in combinations(range(k), i):
        free = [(r, c) for r in range(i) for c in range(pivots[r] + 1, k) if c not in pivots]
        for values in product(range(q), repeat=len(free)):
            A = np.zeros((i, k), dtype=np.int64)
            for r, p in enumerate(pivots):
                A[r, p] = 1
            for (r, c), v in zip(free, values):
                A[r, c] = v
            yield A


def ghw_by_subcodes(C: LinearCode) -> tuple[int, ...]:
    """``d_i`` as the least support size over all ``i``-dimensional subcodes, enumerated directly."""
    F, k = C.field, C.k
    out = []
    for i in range(1, k + 1):
        best = C.n + 1
        for A in rref_coefficient_matrices(k, i, F.q):
            best = min(best, _support_of_rows(_matmul(F, A, C.generator)).bit_count())
        out.append(best)
    return tuple(out)


def _support_of_rows(rows: np.ndarray) -> int:
    return support(np.any(rows != 0, axis=0))


def ghw_by_codewords(C: LinearCode) -> tuple[int, ...]:
    """``d_i`` from codeword supports alone: the least ``|S|`` holding ``q**i`` codewords.

    Every ``i``-dimensional subcode with support inside ``S`` lies in the set of
    codewords supported in ``S``, and that set is itself a subcode, so counting
    codewords per support (a superset-sum over masks) finds the optimum.
    """
    n, q = C.n, C.field.q
    counts = np.zeros(1 << n, dtype=np.int64)
    words = C.codewords()
    supp = np.zeros(words.shape[0], dtype=np.int64)
    for c in range(n):
        supp |= (words[:, c] != 0).astype(np.int64) << c
    np.add.at(counts, supp, 1)
    for i in range(n):
        bit = 1 << i
        idx = np.flatnonzero(np.arange(1 << n) & bit)
        counts[idx] += counts[idx ^ bit]
    pc = popcounts(n)
    return tuple(int(pc[counts >= q ** i].min()) for i in range(1, C.k + 1))


@dataclass(frozen=True)
class WeightHierarchy:
    d: tuple[int, ...]
    d_perp: tuple[int, ...]
    U: tuple[int, ...]
    V: tuple[int, ...]
    oracle: str | None = None


def _direct_ghw(C: LinearCode) -> tuple[tuple[int, ...], str]:
    subspaces = sum(gaussian_binomial(C.k, i, C.field.q) for i in range(1, C.k + 1))
    if subspaces <= SUBSPACE_LIMIT:
        return ghw_by_subcodes(C), "subcodes"
    return ghw_by_codewords(C), "codewords"


def ghw(C: LinearCode, *, oracle: bool | None = None, max_n: int | None = None) -> WeightHierarchy:
    """Weight hierarchies of ``C`` and its dual from the supplement profile of ``D_C``.

    ``d_i = n - s_{k-i}`` and ``d_perp_j = n - t_{n-k-j}``. With ``oracle`` (default:
    whenever ``q**k`` and ``q**(n-k)`` are at most 4096) both hierarchies are also
    computed by direct enumeration and must agree.
    """
    D = code_demimatroid(C, max_n)
    n, k = C.n, C.k
    seq = D.sequences
    d = tuple(n - seq.smax[k - i] for i in range(1, k + 1))
    d_perp = tuple(n - seq.tmax[n - k - j] for j in range(1, n - k + 1))
    bar_seq = supplement(D).sequences
    if d != bar_seq.sigma[1:] or d_perp != bar_seq.tau[1:]:
        raise InternalError("index-reversal identity failed for the code demi-matroid")
    q = C.field.q
    run = oracle if oracle is not None else (q ** k <= ORACLE_CODEWORD_LIMIT
                                             and q ** (n - k) <= ORACLE_CODEWORD_LIMIT)
    used = None
    if run:
        if q ** max(k, n - k) > 1 << 20:
            raise CapExceeded("direct weight enumeration limited to 2**20 codewords")
        dd, used = _direct_ghw(C)
        dp, used_p = _direct_ghw(dual_code(C))
        if dd != d or dp != d_perp:
            raise InternalError(f"profile route d={d}, d_perp={d_perp} vs direct d={dd}, d_perp={dp}")
        used = used if used == used_p else f"{used}+{used_p}"
    U = tuple(sorted(d))
    V = tuple(sorted(n + 1 - x for x in d_perp))
    return WeightHierarchy(d, d_perp, U, V, used)


def code_wei_sets(C: LinearCode, *, oracle: bool | None = None, max_n: int | None = None) -> PartitionReport:
    h = ghw(C, oracle=oracle, max_n=max_n)
    return check_partition("UV_C", h.U, h.V, C.n)


def example_code() -> LinearCode:
    from .gf import make_field

    return LinearCode.from_rows(make_field(2), [[1, 0, 1, 0, 0], [0, 1, 1, 0, 0], [0, 0, 0, 1, 1]])
