"""Subset masks over a ground set {0, ..., n-1}.

Bit ``i`` (least significant first) marks element ``i``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

MAX_N = 63
DEFAULT_TABLE_CAP = 20


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(x: int) -> int:
    return x.bit_count()


def mask_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices_from_mask(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the single-bit masks contained in ``mask``, low to high."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def check_table_cap(n: int, cap: int | None) -> None:
    from .errors import CapExceeded, SizeError

    if n < 0 or n > MAX_N:
        raise SizeError(f"ground set size {n} outside [0, {MAX_N}]")
    limit = DEFAULT_TABLE_CAP if cap is None else min(cap, MAX_N)
    if n > limit:
        raise CapExceeded(f"n={n} exceeds the exhaustive-table cap {limit} (raise max_n)")


@lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    """Read-only array ``pc`` with ``pc[X] = |X|`` for every mask below 2**n."""
    pc = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        step = 1 << i
        pc[step:2 * step] = pc[:step] + 1
    pc.flags.writeable = False
    return pc


@lru_cache(maxsize=None)
def masks_by_popcount(n: int) -> np.ndarray:
    """All masks sorted by (popcount, mask): the fixed scan order for minima."""
    pc = popcounts(n)
    order = np.lexsort((np.arange(1 << n), pc))
    order.flags.writeable = False
    return order
