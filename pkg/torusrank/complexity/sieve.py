"""Square-free sieve over a radicand range."""
from math import isqrt

import numpy as np
from sympy import primerange


def square_free_mask(lo: int, hi: int) -> np.ndarray:
    """Boolean mask over [lo, hi): True where the integer is square-free.

    Zero is never square-free.
    """
    if hi <= lo:
        return np.zeros(0, dtype=bool)
    mask = np.ones(hi - lo, dtype=bool)
    if lo <= 0 < hi:
        mask[-lo] = False
    for p in primerange(2, isqrt(max(hi - 1, 1)) + 1):
        sq = p * p
        start = -(-lo // sq) * sq
        mask[start - lo::sq] = False
    return mask


def square_free_range(lo: int, hi: int) -> np.ndarray:
    """Square-free integers x >= 2 in [lo, hi), ascending, as int64."""
    lo = max(lo, 2)
    if hi <= lo:
        return np.zeros(0, dtype=np.int64)
    return np.flatnonzero(square_free_mask(lo, hi)).astype(np.int64) + lo
