"""Fibonacci and Lucas generators over signed indices."""

import pytest

from twotree import fib, lucas
from twotree.sequences import ENV_CACHE_LIMIT, index_limit


def test_fib_examples():
    assert fib(10) == 55
    assert fib(0) == 0
    assert fib(-4) == -3


def test_lucas_examples():
    assert lucas(5) == 11
    assert lucas(1) == 1
    assert lucas(6) == 18
    assert lucas(0) == 2


def test_recurrences_hold():
    for n in range(2, 400):
        assert fib(n) == fib(n - 1) + fib(n - 2)
        assert lucas(n) == lucas(n - 1) + lucas(n - 2)


def test_negative_index_rules():
    for r in range(0, 80):
        assert fib(-r) == (fib(r) if r % 2 == 1 else -fib(r))
        assert lucas(-r) == (lucas(r) if r % 2 == 0 else -lucas(r))
        assert fib(-r) + (-1) ** r * fib(r) == 0


def test_cross_identities():
    for n in range(1, 301):
        assert lucas(n) == fib(n + 1) + fib(n - 1)
        assert fib(2 * n) == lucas(n) * fib(n)


def test_large_index_magnitude():
    # F_500 has 105 digits; exactness at this size is the whole point.
    value = fib(500)
    assert len(str(value)) == 105
    assert value % 10 == 5


def test_million_index_supported():
    big = fib(10**6)
    # log2(phi) * 1e6 = 694241.6... bits
    assert abs(big.bit_length() - 694242) <= 2
    assert big == fib(10**6 - 1) + fib(10**6 - 2)


def test_doubling_and_table_routes_agree():
    # Split a large index across the table/doubling boundary and recombine
    # through the index-addition law, exercising both computation routes.
    m, k = 2_000, 25_000
    assert fib(m + k) == fib(m) * fib(k + 1) + fib(m - 1) * fib(k)
    assert lucas(m + k) * 2 == lucas(m) * lucas(k) + 5 * fib(m) * fib(k)


def test_concurrent_readers_consistent():
    from concurrent.futures import ThreadPoolExecutor

    expected = {n: fib(n) for n in range(0, 50)}

    def worker(seed):
        out = {}
        for n in range(seed, 3000, 7):
            out[n] = fib(n)
        return out

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(worker, range(8)))
    for out in results:
        for n, value in out.items():
            if n in expected:
                assert value == expected[n]
            assert value == fib(n)


def test_cache_limit_env(monkeypatch):
    monkeypatch.setenv(ENV_CACHE_LIMIT, "100")
    assert index_limit() == 100
    assert fib(100) > 0
    with pytest.raises(ValueError):
        fib(101)
    with pytest.raises(ValueError):
        lucas(-101)
    monkeypatch.setenv(ENV_CACHE_LIMIT, "bogus")
    with pytest.raises(ValueError):
        fib(5)
