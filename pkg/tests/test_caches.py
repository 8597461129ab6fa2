# -*- coding: UTF-8 -*-
"""
Test the caches
===============
@ Ext Ring - Tests

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The tests of the memo caches shared by the lifts and the solvers, and of the small
utilities.
"""

import logging
import threading

try:
    from typing import List
except ImportError:
    from builtins import list as List

import pytest

from ext_ring.caches import LRUDict, CacheMemory
from ext_ring.caches.typehints import CachedItemInfo
from ext_ring.utilities import Timer, get_logger, sign


__all__ = ("TestLRUDict", "TestCacheMemory", "TestUtilities")


class TestLRUDict:
    """Test the thread-safe LRU dictionary."""

    def test_eviction(self) -> None:
        """Test that the eldest item is removed when the dict is full."""
        log = logging.getLogger("ext_ring.test")
        data: LRUDict[str, int] = LRUDict(maxsize=3)
        for idx, key in enumerate("abc"):
            data[key] = idx
        assert data.is_full
        assert data.eldest == "a"
        assert data["a"] == 0
        assert data.recent == "a"
        data["d"] = 3
        log.info("Get the dict: {0}".format(data))
        assert "b" not in data
        assert list(data) == ["d", "a", "c"]
        assert len(data) == 3

    def test_mapping(self) -> None:
        """Test the mapping interface."""
        data = LRUDict({"a": 1, "b": 2, "c": 3}, maxsize=2)
        assert dict(data.items()) == {"b": 2, "c": 3}
        copied = data.copy()
        assert list(copied) == list(data)
        del data["b"]
        assert "b" not in data and "b" in copied
        with pytest.raises(KeyError):
            del data["b"]
        data.clear()
        assert len(data) == 0
        with pytest.raises(ValueError):
            LRUDict(maxsize=0)

    def test_get_or_create(self) -> None:
        """Test that the factory only runs on a miss."""
        calls: List[str] = list()
        data: LRUDict[str, str] = LRUDict(maxsize=4)

        def _factory(key: str):
            def _create() -> str:
                calls.append(key)
                return key.upper()

            return _create

        assert data.get_or_create("x", _factory("x")) == "X"
        assert data.get_or_create("x", _factory("x")) == "X"
        assert data.get_or_create("y", _factory("y")) == "Y"
        assert calls == ["x", "y"]
        assert data.stats == (1, 2)

    def test_threads(self) -> None:
        """Test the dict under concurrent writers."""
        data: LRUDict[int, int] = LRUDict(maxsize=16)

        def _work(offset: int) -> None:
            for idx in range(200):
                data.get_or_create((offset + idx) % 32, lambda: idx)

        workers = [threading.Thread(target=_work, args=(val,)) for val in range(4)]
        for worker in workers:
            worker.start()
        for worker in workers:
            worker.join()
        assert len(data) == 16
        hits, misses = data.stats
        assert hits + misses == 800


class TestCacheMemory:
    """Test the in-memory cache of derived data."""

    def test_fetch(self) -> None:
        """Test that `fetch()` computes once and stores the metadata."""
        cache: CacheMemory[CachedItemInfo, int] = CacheMemory(2)
        info = CachedItemInfo(kind="lift", degree=2, size=4)
        calls: List[int] = list()

        def _factory() -> int:
            calls.append(1)
            return 42

        assert cache.fetch("a", info, _factory) == 42
        assert cache.fetch("a", info, _factory) == 42
        assert len(calls) == 1
        assert cache.stats == (1, 1)
        assert len(cache) == 1
        assert "a" in cache
        assert cache.load_info("a") == info
        assert cache.load_data("a") == 42

    def test_eviction(self) -> None:
        """Test the eviction and the removal of items."""
        cache: CacheMemory[CachedItemInfo, str] = CacheMemory(2)
        for key in ("a", "b", "c"):
            cache.dump(key, CachedItemInfo(kind="solver", degree=0, size=1), key)
        assert "a" not in cache
        info = cache.remove("b")
        assert info["kind"] == "solver"
        assert "b" not in cache
        with pytest.raises(KeyError):
            cache.load("b")
        with pytest.raises(ValueError):
            CacheMemory(0)


class TestUtilities:
    """Test the sign, the timer and the loggers."""

    def test_sign(self) -> None:
        """Test the signs of the powers of `-1`."""
        assert [sign(val) for val in range(-3, 4)] == [-1, 1, -1, 1, -1, 1, -1]

    def test_timer(self) -> None:
        """Test that the timer reports each run to the callback."""
        records: List[str] = list()
        timer = Timer("stage", lambda name, elapsed: records.append(name))
        with timer:
            pass
        with timer:
            pass
        assert records == ["stage", "stage"]
        assert timer.elapsed >= 0.0
        assert timer.name == "stage"

    def test_logger(self) -> None:
        """Test the names of the package loggers."""
        assert get_logger().name == "ext_ring"
        assert get_logger("cli").name == "ext_ring.cli"
