"""
Typehints
=========
@ Ext Ring: caches

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Extra typehints used by the caches.
"""

from typing import TypeVar

try:
    from typing import Callable
except ImportError:
    from collections.abc import Callable

from typing_extensions import Literal, TypedDict


T = TypeVar("T")

Deferred = Callable[[], T]
"""A deferred value. This value is lazy-loaded by a function. Only when this function
gets called, the value will be produced."""


__all__ = ("Deferred", "CachedItemInfo")


class CachedItemInfo(TypedDict):
    """The metadata of one memoized item."""

    kind: Literal["lift", "tensor", "solver", "classes"]
    """What kind of derived data is stored."""

    degree: int
    """The degree the item belongs to. Items without a natural degree use `0`."""

    size: int
    """A rough size of the stored data, i.e. the number of stored field entries."""
