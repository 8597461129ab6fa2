"""
Utilities
=========
@ Ext Ring

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Shared utilities used by the computations and the command line interface.
"""

import time
import types
import logging
import contextlib

from typing import Optional, TypeVar

try:
    from typing import Callable
    from typing import Type
except ImportError:
    from collections.abc import Callable
    from builtins import type as Type


__all__ = ("sign", "get_logger", "Timer")

_BaseException = TypeVar("_BaseException", bound=BaseException)


def sign(power: int) -> int:
    """Return `(-1)**power`. Negative powers are allowed."""
    return -1 if power % 2 else 1


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Get the logger of this package.

    Arguments
    ---------
    name: `str | None`
        The name of the child logger, e.g. `"resolutions"`. If not specified, return
        the root logger of the package.
    """
    if not name:
        return logging.getLogger("ext_ring")
    return logging.getLogger("ext_ring.{0}".format(name))


class Timer(contextlib.ContextDecorator):
    """Wall-clock timer of a computation.

    The timer can be used as a context or as a decorator. When exiting the context,
    the elapsed time is accumulated and the optional callback is called with the
    elapsed seconds of this run.
    """

    def __init__(
        self,
        name: str = "",
        callback_on_exit: Optional[Callable[[str, float], None]] = None,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        name: `str`
            The name of the timed stage. It is passed to the callback.

        callback_on_exit: `((str, float) -> None) | None`
            The callback function that will be called when exiting from the context.
        """
        self.__name = str(name)
        self.__callback_on_exit = (
            callback_on_exit if callable(callback_on_exit) else None
        )
        self.__start: Optional[float] = None
        self.__elapsed = 0.0

    @property
    def name(self) -> str:
        """Property: The name of the timed stage."""
        return self.__name

    @property
    def elapsed(self) -> float:
        """Property: The accumulated elapsed time in seconds."""
        return self.__elapsed

    def __enter__(self) -> "Timer":
        self.__start = time.perf_counter()
        return self

    def __exit__(
        self,
        exc_type: Optional[Type[_BaseException]],
        exc_value: Optional[_BaseException],
        exc_traceback: Optional[types.TracebackType],
    ) -> None:
        if self.__start is None:
            return
        run_time = time.perf_counter() - self.__start
        self.__start = None
        self.__elapsed += run_time
        if self.__callback_on_exit is not None:
            self.__callback_on_exit(self.__name, run_time)
