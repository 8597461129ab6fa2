# -*- coding: UTF-8 -*-
"""
Errors
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
The exceptions raised by this project. Each of them is a subclass of `ValueError`,
so callers that only care about "bad input" can keep catching the builtin.

The message of every exception starts with the tag of the module raising it, for
example `"linalg: ..."`.
"""

__all__ = (
    "FieldMismatchError",
    "ShapeError",
    "ImageNotInKernelError",
    "ComplexError",
    "ChainMapError",
    "NotACocycleError",
    "DegreeOverflowError",
    "ContextMismatchError",
    "StructureError",
    "InputError",
)


class FieldMismatchError(ValueError):
    """Values or matrices over two different fields are combined."""


class ShapeError(ValueError):
    """The shapes of matrices or vectors are not compatible."""


class ImageNotInKernelError(ValueError):
    """A subquotient is requested while the image is not in the kernel."""


class ComplexError(ValueError):
    """A complex violates `d o d = 0`, or its windows and shapes do not match."""


class ChainMapError(ValueError):
    """A chain map violates the sign-commutation rule, or two maps cannot be
    composed because their ends differ."""


class NotACocycleError(ValueError):
    """A cochain used as a cohomology class is not a cocycle."""


class DegreeOverflowError(ValueError):
    """A product would land above the computed degree window. The message always
    suggests increasing `N`."""


class ContextMismatchError(ValueError):
    """Elements from different rings, resolutions or instances are combined."""


class StructureError(ValueError):
    """A multiplication table or structure constants do not define a group or an
    algebra. The message names the failing triple."""


class InputError(ValueError):
    """An input document is malformed."""
