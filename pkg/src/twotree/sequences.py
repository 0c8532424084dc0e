"""Fibonacci and Lucas numbers over all signed integer indices.

Both sequences are computed independently of each other: fib by its own
recurrence/doubling formulas, lucas by its own.  This keeps the classical
cross-identities (L_m = F_{m+1} + F_{m-1} and friends) meaningful as checks
rather than restatements of the implementation.
"""

from __future__ import annotations

import os
import threading

ENV_CACHE_LIMIT = "TWO_TREE_CACHE_LIMIT"
DEFAULT_INDEX_LIMIT = 2_000_000

# Contiguous sweeps stay inside the bottom-up tables; isolated indices past
# the cutoff go through fast doubling so the tables never balloon.
_FILL_CUTOFF = 25_000

_lock = threading.Lock()
_fib_table = [0, 1]
_lucas_table = [2, 1]
_fib_sparse: dict[int, int] = {}
_lucas_sparse: dict[int, int] = {}


def index_limit() -> int:
    """Largest |index| the sequence cache will serve (env-overridable)."""
    raw = os.environ.get(ENV_CACHE_LIMIT)
    if raw is None:
        return DEFAULT_INDEX_LIMIT
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_CACHE_LIMIT} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{ENV_CACHE_LIMIT} must be positive, got {value}")
    return value


def _check_index(n: int) -> None:
    limit = index_limit()
    if abs(n) > limit:
        raise ValueError(f"sequence index {n} exceeds the cache limit {limit}")


def _fill_fib(r: int) -> None:
    with _lock:
        a, b = _fib_table[-2], _fib_table[-1]
        while len(_fib_table) <= r:
            a, b = b, a + b
            _fib_table.append(b)


def _fill_lucas(r: int) -> None:
    with _lock:
        a, b = _lucas_table[-2], _lucas_table[-1]
        while len(_lucas_table) <= r:
            a, b = b, a + b
            _lucas_table.append(b)


def _fib_pair(r: int) -> tuple[int, int]:
    """(F_r, F_{r+1}) by fast doubling, memoised per visited index."""
    if r <= _FILL_CUTOFF:
        if len(_fib_table) <= r + 1:
            _fill_fib(r + 1)
        return _fib_table[r], _fib_table[r + 1]
    lo, hi = _fib_sparse.get(r), _fib_sparse.get(r + 1)
    if lo is not None and hi is not None:
        return lo, hi
    fh, fh1 = _fib_pair(r >> 1)
    f_even = fh * (2 * fh1 - fh)      # F_{2h}
    f_odd = fh * fh + fh1 * fh1       # F_{2h+1}
    pair = (f_even, f_odd) if r % 2 == 0 else (f_odd, f_even + f_odd)
    with _lock:
        _fib_sparse[r] = pair[0]
        _fib_sparse[r + 1] = pair[1]
    return pair


def _lucas_pair(r: int) -> tuple[int, int]:
    """(L_r, L_{r+1}) by fast doubling on the Lucas sequence itself."""
    if r <= _FILL_CUTOFF:
        if len(_lucas_table) <= r + 1:
            _fill_lucas(r + 1)
        return _lucas_table[r], _lucas_table[r + 1]
    lo, hi = _lucas_sparse.get(r), _lucas_sparse.get(r + 1)
    if lo is not None and hi is not None:
        return lo, hi
    h = r >> 1
    lh, lh1 = _lucas_pair(h)
    sign = -1 if h % 2 else 1
    l_even = lh * lh - 2 * sign       # L_{2h}
    l_odd = lh * lh1 - sign           # L_{2h+1}
    pair = (l_even, l_odd) if r % 2 == 0 else (l_odd, l_even + l_odd)
    with _lock:
        _lucas_sparse[r] = pair[0]
        _lucas_sparse[r + 1] = pair[1]
    return pair


def fib(n: int) -> int:
    """Fibonacci number F_n for any signed integer index.

    F_0 = 0, F_1 = 1, and F_{-r} = (-1)^{r+1} F_r for the negative side.
    """
    _check_index(n)
    r = abs(n)
    if r < len(_fib_table):
        value = _fib_table[r]
    elif r <= _FILL_CUTOFF:
        _fill_fib(r)
        value = _fib_table[r]
    else:
        value = _fib_pair(r)[0]
    if n >= 0 or r % 2 == 1:
        return value
    return -value


def lucas(n: int) -> int:
    """Lucas number L_n for any signed integer index.

    L_0 = 2, L_1 = 1, and L_{-r} = (-1)^r L_r for the negative side.
    """
    _check_index(n)
    r = abs(n)
    if r < len(_lucas_table):
        value = _lucas_table[r]
    elif r <= _FILL_CUTOFF:
        _fill_lucas(r)
        value = _lucas_table[r]
    else:
        value = _lucas_pair(r)[0]
    if n >= 0 or r % 2 == 0:
        return value
    return -value
