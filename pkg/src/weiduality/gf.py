"""Exact arithmetic in GF(p^m) for p^m <= 256, plus RREF, rank and nullspace.

Field elements are integers ``0..q-1``; element ``a`` stands for the polynomial
whose base-``p`` digits (least significant first) are its coefficients. All
arithmetic goes through precomputed ``q x q`` tables so that prime and extension
fields share one code path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import NotPrime, OrderTooLarge, SizeError

MAX_ORDER = 256

# Conway polynomials, coefficients low degree first (monic leading 1 included).
CONWAY = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def _poly_mulmod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            for j in range(m + 1):
                prod[d - m + j] = (prod[d - m + j] - c * modulus[j]) % p
    out = prod[:m] + [0] * max(0, m - len(prod))
    return out


def _digits(a: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _number(digits: list[int], p: int) -> int:
    return sum(d * p ** i for i, d in enumerate(digits))


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Irreducibility by brute force: no monic factor of degree 1..m//2 divides it."""
    m = len(modulus) - 1
    for deg in range(1, m // 2 + 1):
        for lower in product(range(p), repeat=deg):
            factor = list(lower) + [1]
            rem = list(modulus)
            for d in range(m, deg - 1, -1):
                c = rem[d]
                if c:
                    for j in range(deg + 1):
                        rem[d - deg + j] = (rem[d - deg + j] - c * factor[j]) % p
            if not any(rem[:deg]):
                return False
    return True


def lowest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible polynomial of degree ``m``."""
    for lower in product(range(p), repeat=m):
        coeffs = tuple(reversed(lower)) + (1,)
        if coeffs[0] and _is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True, eq=False)
class FiniteField:
    p: int
    m: int
    modulus: tuple[int, ...] | None
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)
    inv: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def name(self) -> str:
        return f"GF({self.q})"

    def sub(self, a, b):
        return self.add[a, self.neg[b]]

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self):
        return hash((self.p, self.m))


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FiniteField:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise OrderTooLarge(f"degree must be >= 1, got {m}")
    q = p ** m
    if q > MAX_ORDER:
        raise OrderTooLarge(f"field order {q} exceeds {MAX_ORDER}")
    idx = np.arange(q)
    if m == 1:
        modulus = None
        add = (idx[:, None] + idx[None, :]) % p
        mul = (idx[:, None] * idx[None, :]) % p
    else:
        modulus = CONWAY.get((p, m))
        if modulus is None or not _is_irreducible(modulus, p):
            modulus = lowest_irreducible(p, m)
        digits = [_digits(a, p, m) for a in range(q)]
        add = np.array([[_number([(x + y) % p for x, y in zip(digits[a], digits[b])], p)
                         for b in range(q)] for a in range(q)])
        mul = np.array([[_number(_poly_mulmod(digits[a], digits[b], modulus, p), p)
                         for b in range(q)] for a in range(q)])
    neg = np.argmin(add, axis=1)  # the unique b with a + b = 0
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
    tables = []
    for t in (add, mul, neg, inv):
        t = np.asarray(t, dtype=np.int64)
        t.flags.writeable = False
        tables.append(t)
    return FiniteField(p, m, modulus, *tables)


def as_matrix(F: FiniteField, rows, cols: int | None = None) -> np.ndarray:
    """Validate a row-major nested list as a matrix over ``F``."""
    M = np.array(rows, dtype=np.int64)
    if M.size == 0:
        M = M.reshape(0, cols if cols is not None else 0)
    if M.ndim != 2:
        raise SizeError("matrix rows must all have the same length")
    if np.any(M < 0) or np.any(M >= F.q):
        raise SizeError(f"matrix entries must lie in [0, {F.q})")
    return M


def rref(F: FiniteField, M) -> tuple[np.ndarray, int, tuple[int, ...]]:
    """Reduced row-echelon form by leftmost-pivot, topmost-row elimination."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        A = A.reshape(0, 0)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = F.mul[F.inv[A[r, c]], A[r]]
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = F.sub(A[i], F.mul[A[i, c], A[r]])
        pivots.append(c)
        r += 1
    return A, r, tuple(pivots)


def rank(F: FiniteField, M) -> int:
    return rref(F, M)[1]


def nullspace(F: FiniteField, M) -> np.ndarray:
    """Rows spanning ``{y : M y^T = 0}``, one per free column, in column order."""
    R, r, pivots = rref(F, M)
    cols = R.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for i, pc in enumerate(pivots):
            basis[b, pc] = F.neg[R[i, f]]
    return basis


def column_rank_of_subset(F: FiniteField, M, X: int) -> int:
    """Rank of the columns of ``M`` selected by mask ``X``."""
    M = np.asarray(M, dtype=np.int64)
    cols = [c for c in range(M.shape[1]) if X >> c & 1]
    if not cols or M.shape[0] == 0:
        return 0
    return rank(F, M[:, cols])


def batched_column_ranks(F: FiniteField, M, masks: np.ndarray) -> np.ndarray:
    """``column_rank_of_subset`` for every mask at once.

    All submatrices (unselected columns zeroed) are eliminated in lock-step, one
    column at a time, so the cost is ``O(cols)`` numpy passes over the batch.
    """
    M = np.asarray(M, dtype=np.int64)
    rows, cols = M.shape
    masks = np.asarray(masks, dtype=np.int64)
    B = masks.shape[0]
    if rows == 0 or cols == 0 or B == 0:
        return np.zeros(B, dtype=np.int64)
    sel = ((masks[:, None] >> np.arange(cols)[None, :]) & 1).astype(bool)
    A = np.where(sel[:, None, :], M[None, :, :], 0)
    used = np.zeros((B, rows), dtype=bool)
    ranks = np.zeros(B, dtype=np.int64)
    ar = np.arange(B)
    for c in range(cols):
        cand = (A[:, :, c] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        pr = np.argmax(cand, axis=1)
        bi = ar[has]
        pi = pr[has]
        prow = A[bi, pi, :]
        prow = F.mul[F.inv[prow[:, c]][:, None], prow]
        factors = A[bi, :, c]
        factors[np.arange(bi.size), pi] = 0
        A[bi] = F.sub(A[bi], F.mul[factors[:, :, None], prow[:, None, :]])
        A[bi, pi, :] = prow
        used[bi, pi] = True
        ranks[bi] += 1
    return ranks
