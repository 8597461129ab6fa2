# -*- coding: UTF-8 -*-
"""
Abstract
========
@ Ext Ring: caches

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The interface of the memo caches. An item is stored under a content fingerprint,
together with a small metadata record describing what was derived.
"""

import abc

from typing import Any, Generic, TypeVar

try:
    from typing import Mapping
    from typing import Tuple
except ImportError:
    from collections.abc import Mapping
    from builtins import tuple as Tuple

from typing_extensions import final

from . import typehints as th


Info = TypeVar("Info", bound=Mapping[str, Any])
Data = TypeVar("Data")

__all__ = ("CacheAbstract",)


class CacheAbstract(abc.ABC, Generic[Info, Data]):
    """Base class of the memo caches of derived data."""

    def __contains__(self, key: str) -> bool:
        return self.is_in(key)

    @abc.abstractmethod
    def is_in(self, key: str) -> bool:
        """Whether an item is memoized under `key`."""
        raise NotImplementedError

    @abc.abstractmethod
    def remove(self, key: str) -> Info:
        """Forget the item of `key` and return its metadata."""
        raise NotImplementedError

    @abc.abstractmethod
    def dump(self, key: str, info: Info, data: Data) -> None:
        """Memoize `data` under `key`, replacing a previous item of the same key."""
        raise NotImplementedError

    @abc.abstractmethod
    def load(self, key: str) -> Tuple[Info, th.Deferred[Data]]:
        """The metadata of `key` and a loader of its data.

        Raises `KeyError` if nothing is memoized under `key`.
        """
        raise NotImplementedError

    @final
    def load_info(self, key: str) -> Info:
        """The metadata memoized under `key`."""
        return self.load(key)[0]

    @final
    def load_data(self, key: str) -> Data:
        """The data memoized under `key`."""
        return self.load(key)[1]()

    def fetch(self, key: str, info: Info, factory: th.Deferred[Data]) -> Data:
        """The data of `key`, computed by `factory()` and memoized on a miss.

        Arguments
        ---------
        key: `str`
            The fingerprint of the inputs the data is derived from.

        info: `{str: Any}`
            The metadata stored with a freshly computed item.

        factory: `() -> Any`
            Computes the data. It is not called on a hit.
        """
        if self.is_in(key):
            return self.load_data(key)
        data = factory()
        self.dump(key, info, data)
        return data
