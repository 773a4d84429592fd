"""Window scan: family members whose expansion has the base shape.

The scan sieves square-free x, then runs the (P, Q) automaton on whole
numpy arrays of radicands for exactly m + l steps. With states S_0..S_{m+l}
the expansion has shape (m, l) iff

    S_{m+l} == S_m,
    S_{m+d} != S_m for every proper divisor d of l,
    S_{m-1+l} != S_{m-1} when m >= 1.

Survivors are expanded exactly, one at a time, through the cache.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from math import gcd, isqrt
from typing import List, Optional, Tuple

import numpy as np

from torusrank.cfrac.expansion import expand
from torusrank.complexity.sieve import square_free_range
from torusrank.models.complexity import SearchConfig, SearchDiagnostics
from torusrank.models.surd import CFExpansion, QuadraticIrrational
from torusrank.store.cache import ExpansionCache

logger = logging.getLogger(__name__)

# radicands beyond this run on object arrays of Python ints
INT64_SAFE = 1 << 50

PoolEntry = Tuple[QuadraticIrrational, CFExpansion]


def family_constants(cfg: SearchConfig) -> Tuple[int, int, int]:
    if cfg.a is None or cfg.b is None or cfg.c is None:
        raise ValueError("family constants a, b, c must be set on the search config")
    return cfg.a, cfg.b, cfg.c


def _isqrt_array(R: np.ndarray) -> np.ndarray:
    if R.dtype == object:
        return np.array([isqrt(int(v)) for v in R], dtype=object)
    r = np.floor(np.sqrt(R.astype(np.float64))).astype(np.int64)
    r = np.where(r * r > R, r - 1, r)
    return np.where((r + 1) * (r + 1) <= R, r + 1, r)


def _proper_divisors(l: int) -> List[int]:
    return [d for d in range(1, l) if l % d == 0]


def shape_mask(
    xs: np.ndarray,
    a: int,
    b: int,
    c: int,
    conjugate: bool,
    shape: Tuple[int, int]
) -> np.ndarray:
    """True where (a +- b sqrt(x))/c expands with the given (m, l) shape."""
    m, l = shape
    if xs.size == 0:
        return np.zeros(0, dtype=bool)
    P0, Q0 = (-a, -c) if conjugate else (a, c)
    bound = b * b * int(xs.max()) * Q0 * Q0
    big = bound >= INT64_SAFE or abs(P0 * Q0) >= INT64_SAFE
    dtype = object if big else np.int64

    R = xs.astype(dtype) * (b * b)
    need = ((R - P0 * P0) % Q0 != 0).astype(bool)
    P = np.full(xs.shape, P0, dtype=dtype)
    Q = np.full(xs.shape, Q0, dtype=dtype)
    P[need] = P0 * abs(Q0)
    Q[need] = Q0 * abs(Q0)
    R[need] = R[need] * (Q0 * Q0)
    root = _isqrt_array(R)

    states = [(P, Q)]
    for _ in range(m + l):
        positive = (Q > 0).astype(bool)
        num = P + root
        a_i = np.where(positive, num // np.where(positive, Q, 1), -(num // np.where(positive, 1, -Q)) - 1)
        P = a_i * Q - P
        Q = (R - P * P) // Q
        states.append((P, Q))

    def same(i: int, j: int) -> np.ndarray:
        return ((states[i][0] == states[j][0]) & (states[i][1] == states[j][1])).astype(bool)

    ok = same(m + l, m)
    for d in _proper_divisors(l):
        ok &= ~same(m + d, m)
    if m >= 1:
        ok &= ~same(m - 1 + l, m - 1)
    return ok


def _chunks(lo: int, hi: int, size: int) -> List[Tuple[int, int]]:
    return [(s, min(s + size, hi)) for s in range(lo, hi, size)]


def enumerate_window(
    cfg: SearchConfig,
    base: CFExpansion,
    conjugate: bool = False,
    cache: Optional[ExpansionCache] = None,
    diagnostics: Optional[SearchDiagnostics] = None
) -> List[PoolEntry]:
    """All family members with D' = b^2 x <= window_max and the base shape.

    Members come back in ascending x. The scan runs on `cfg.workers`
    threads; chunks are merged in order so the result does not depend on
    the worker count.
    """
    a, b, c = family_constants(cfg)
    g = gcd(gcd(a, b), c)
    a, b, c = a // g, b // g, c // g
    x_max = cfg.window_max // (b * b)
    shape = base.shape
    chunks = _chunks(2, x_max + 1, cfg.chunk_size)

    def scan(bounds: Tuple[int, int]) -> Tuple[int, np.ndarray]:
        xs = square_free_range(*bounds)
        hits = xs[shape_mask(xs, a, b, c, conjugate, shape)]
        logger.debug("scanned x in [%d, %d): %d square-free, %d hits", bounds[0], bounds[1], xs.size, hits.size)
        return xs.size, hits

    if cfg.workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(scan, chunks))
    else:
        results = [scan(chunk) for chunk in chunks]

    out: List[PoolEntry] = []
    square_free = 0
    for count, hits in results:
        square_free += count
        for x in hits.tolist():
            theta = QuadraticIrrational(a=a, b=b, c=c, d=int(x), conjugate=conjugate)
            exp = cache.expand(theta) if cache is not None else expand(theta)
            if exp.shape != shape:
                logger.warning("shape filter disagrees with expansion at x=%d", x)
                continue
            out.append((theta, exp))

    if diagnostics is not None:
        diagnostics.radicands_scanned = max(x_max - 1, 0)
        diagnostics.square_free = square_free
        diagnostics.shape_matches = len(out)
    logger.info("window %d: %d members with shape %s", cfg.window_max, len(out), shape)
    return out
