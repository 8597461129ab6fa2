# -*- coding: UTF-8 -*-
"""
Memory
======
@ Ext Ring: caches

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The in-memory cache. The stored values are immutable computation results, so they
can be handed out to every thread of the same process without copying.
"""

from typing import Any, TypeVar

try:
    from typing import Mapping
    from typing import Tuple
except ImportError:
    from collections.abc import Mapping
    from builtins import tuple as Tuple

from ..utilities import get_logger
from . import typehints as th
from .lrudict import LRUDict
from .abstract import CacheAbstract


Info = TypeVar("Info", bound=Mapping[str, Any])
Data = TypeVar("Data")

__all__ = ("CacheMemory",)

logger = get_logger("caches")


class CacheMemory(CacheAbstract[Info, Data]):
    """Memo cache kept in an `LRUDict`. It is thread-safe."""

    def __init__(self, cache_size: int) -> None:
        """Initialization.

        Arguments
        ---------
        cache_size: `int`
            The number of memoized items. The least recently used item is dropped
            when a new one arrives at a full cache.
        """
        super().__init__()
        if cache_size < 1:
            raise ValueError('cache: The argument "cache_size" needs to be >=1.')
        self.__cache: LRUDict[str, Tuple[Info, Data]] = LRUDict(maxsize=cache_size)

    def __repr__(self) -> str:
        hits, misses = self.__cache.stats
        return "<{0} size={1}/{2} hits={3} misses={4}>".format(
            self.__class__.__name__,
            len(self.__cache),
            self.__cache.maxsize,
            hits,
            misses,
        )

    def __len__(self) -> int:
        return len(self.__cache)

    @property
    def cache(self) -> LRUDict[str, Tuple[Info, Data]]:
        """Property: The underlying `LRUDict`."""
        return self.__cache

    @property
    def stats(self) -> Tuple[int, int]:
        """Property: The `(hits, misses)` of `fetch()`."""
        return self.__cache.stats

    def is_in(self, key: str) -> bool:
        return key in self.__cache

    def remove(self, key: str) -> Info:
        info = self.load_info(key)
        del self.__cache[key]
        return info

    def dump(self, key: str, info: Info, data: Data) -> None:
        self.__cache[key] = (info, data)

    def load(self, key: str) -> Tuple[Info, th.Deferred[Data]]:
        info, value = self.__cache[key]
        return info, lambda: value

    def fetch(self, key: str, info: Info, factory: th.Deferred[Data]) -> Data:
        """The data of `key`, computed by `factory()` and memoized on a miss.

        The hits and the misses are counted in `stats`.
        """

        def _create() -> Tuple[Info, Data]:
            logger.debug(
                "Compute the %s item of degree %s.",
                info.get("kind"),
                info.get("degree"),
            )
            return info, factory()

        return self.__cache.get_or_create(key, _create)[1]
