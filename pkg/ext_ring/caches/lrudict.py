# -*- coding: UTF-8 -*-
"""
LRUDict
=======
@ Ext Ring: caches

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Implementation of the LRU dictionary used for memoizing derived data (lifts, tensor
complexes, factorized matrices).
"""

import collections
import collections.abc
import threading

from typing import Any, Optional, TypeVar

try:
    from typing import Mapping, Hashable, Iterator
    from typing import Tuple, Dict
except ImportError:
    from collections.abc import Mapping, Hashable, Iterator
    from builtins import tuple as Tuple, dict as Dict

try:
    from typing import Callable
except ImportError:
    from collections.abc import Callable

from typing_extensions import Self


__all__ = ("LRUDict",)

K = TypeVar("K", bound=Hashable)
T = TypeVar("T")


class LRUDict(collections.abc.MutableMapping, Mapping[K, T]):
    """The dictionary powered by the least recently used policy.

    The size is limited. When the dictionary is full, inserting a new key evicts the
    least recently looked-up key.

    All methods are protected by a re-entrant lock, so one `LRUDict` can be shared
    by the threads computing independent cells of a product table.
    """

    def __init__(
        self, data: Optional[Mapping[K, T]] = None, *, maxsize: int = 10
    ) -> None:
        """Initialization.

        Arguments
        ---------
        data: `{K: T} | None`
            The initial items. If there are more items than `maxsize`, only the last
            `maxsize` items are kept.

        maxsize: `int`
            The size of the cache.
        """
        super().__init__()
        if maxsize <= 0:
            raise ValueError(
                'lrudict: The argument "maxsize" need to be a postive integer.'
            )
        self.__maxsize = int(maxsize)
        self.__lock = threading.RLock()
        # The most recent key is at the left end.
        self.__curkeys: "collections.deque[K]" = collections.deque()
        self.__storage: Dict[K, T] = dict()
        self.__hits = 0
        self.__misses = 0
        if data is not None:
            for key, val in data.items():
                self[key] = val

    @property
    def maxsize(self) -> int:
        """Property: The maximal size of the LRU dictionary cache."""
        return self.__maxsize

    @property
    def is_full(self) -> bool:
        """Property: Whether the dict is full."""
        with self.__lock:
            return len(self.__curkeys) >= self.__maxsize

    @property
    def stats(self) -> Tuple[int, int]:
        """Property: The `(hits, misses)` counted by `get_or_create()`."""
        with self.__lock:
            return self.__hits, self.__misses

    def move_to_recent(self, key: K) -> None:
        """Move a specific key to the most recent place of the `LRUDict`."""
        with self.__lock:
            if self.__curkeys and self.__curkeys[0] == key:
                return
            self.__curkeys.remove(key)
            self.__curkeys.appendleft(key)

    def __repr__(self) -> str:
        with self.__lock:
            return "<{0} maxsize={1} keys=[{2}]>".format(
                self.__class__.__name__,
                self.__maxsize,
                ", ".join(str(key) for key in self.__curkeys),
            )

    def __len__(self) -> int:
        with self.__lock:
            return len(self.__curkeys)

    def __contains__(self, key: Any) -> bool:
        with self.__lock:
            return key in self.__storage

    def __iter__(self) -> Iterator[K]:
        with self.__lock:
            keys = tuple(self.__curkeys)
        return iter(keys)

    def __getitem__(self, key: K) -> T:
        with self.__lock:
            value = self.__storage[key]
            self.move_to_recent(key)
        return value

    def __setitem__(self, key: K, value: T) -> None:
        with self.__lock:
            if key in self.__storage:
                self.move_to_recent(key)
            elif len(self.__curkeys) >= self.__maxsize:
                old_key = self.__curkeys.pop()
                del self.__storage[old_key]
                self.__curkeys.appendleft(key)
            else:
                self.__curkeys.appendleft(key)
            self.__storage[key] = value

    def __delitem__(self, key: K) -> None:
        with self.__lock:
            if key not in self.__storage:
                raise KeyError(
                    "lrudict: The key {0} does not exist in the LRUDict.".format(key)
                )
            self.__curkeys.remove(key)
            del self.__storage[key]

    def get_or_create(self, key: K, factory: Callable[[], T]) -> T:
        """Return the value of `key`, creating it by `factory()` on a miss.

        The factory runs outside of the lock. Two threads missing the same key at
        the same time will both compute the value, and the later one wins.
        """
        with self.__lock:
            if key in self.__storage:
                self.__hits += 1
                return self[key]
            self.__misses += 1
        value = factory()
        self[key] = value
        return value

    def clear(self) -> None:
        """Make this `LRUDict` empty."""
        with self.__lock:
            self.__curkeys.clear()
            self.__storage.clear()

    def copy(self) -> Self:
        """Make a shallow copy of this `LRUDict`, keeping the priority order."""
        with self.__lock:
            res = self.__class__(maxsize=self.__maxsize)
            for key in reversed(self.__curkeys):
                res[key] = self.__storage[key]
        return res

    @property
    def recent(self) -> K:
        """Get the keyword of the recent item."""
        with self.__lock:
            return self.__curkeys[0]

    @property
    def eldest(self) -> K:
        """Get the keyword of the eldest item, i.e. the item to be removed if the
        dict is full and the new value arrives."""
        with self.__lock:
            return self.__curkeys[-1]
