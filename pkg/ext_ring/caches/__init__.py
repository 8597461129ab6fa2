# -*- coding: UTF-8 -*-
"""
Caches
======
@ Ext Ring

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The memo caches. Comparison-theorem lifts, tensor complexes and factorized matrices
are expensive to build and are requested many times while a product table is being
filled, so they are kept in size-limited caches.
"""

from pkgutil import extend_path

# Import sub-modules.
from . import typehints
from . import abstract
from . import lrudict
from . import memory

from .lrudict import LRUDict
from .memory import CacheMemory

__all__ = (
    "typehints",
    "abstract",
    "lrudict",
    "memory",
    "LRUDict",
    "CacheMemory",
)

# Set this local module as the prefered one
__path__ = extend_path(__path__, __name__)

# Delete private sub-modules and objects
del extend_path
