# -*- coding: UTF-8 -*-
"""
Groups
======
@ Ext Ring: resolutions

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Finite groups given by multiplication tables, and the named families used by the
command line and the tests. Elements are the indices `0 .. n - 1`.
"""

import itertools

from typing import Any, Optional

try:
    from typing import Sequence
    from typing import List, Tuple
except ImportError:
    from collections.abc import Sequence
    from builtins import list as List, tuple as Tuple

import numpy as np

from ..errors import StructureError, InputError


__all__ = (
    "GroupTable",
    "cyclic_group",
    "klein_group",
    "symmetric3_group",
    "quaternion8_group",
    "dihedral_group",
    "named_group",
    "GROUP_NAMES",
)


class GroupTable:
    """A finite group given by its multiplication table.

    The group axioms are checked exhaustively on construction.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        identity: Optional[int] = None,
        name: Optional[str] = None,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        table: `[[int]]`
            The `n x n` table, `table[a][b]` is the index of `a * b`.

        identity: `int | None`
            The index of the identity. If not given, it is searched in the table.

        name: `str | None`
            The name used in reports.
        """
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise StructureError(
                "resolutions: not a group, the table needs the shape (n, n), get "
                "{0}.".format(arr.shape)
            )
        order = int(arr.shape[0])
        if np.any(arr < 0) or np.any(arr >= order):
            raise StructureError(
                "resolutions: not a group, the table has entries out of "
                "[0, {0}).".format(order)
            )
        # (ab)c = a(bc)
        left = arr[arr, :]
        right = arr[:, arr]
        bad = np.argwhere(left != right)
        if bad.size > 0:
            idx_a, idx_b, idx_c = (int(val) for val in bad[0])
            raise StructureError(
                "resolutions: not a group, associativity fails at ({0}, {1}, "
                "{2}).".format(idx_a, idx_b, idx_c)
            )
        units = [
            idx
            for idx in range(order)
            if np.array_equal(arr[idx], np.arange(order))
            and np.array_equal(arr[:, idx], np.arange(order))
        ]
        if identity is None:
            if not units:
                raise StructureError("resolutions: not a group, no identity found.")
            identity = units[0]
        elif int(identity) not in units:
            raise StructureError(
                "resolutions: not a group, {0} is not the identity.".format(identity)
            )
        identity = int(identity)
        inverses = np.argmax(arr == identity, axis=1)
        for idx in range(order):
            inv = int(inverses[idx])
            if arr[idx, inv] != identity or arr[inv, idx] != identity:
                raise StructureError(
                    "resolutions: not a group, {0} has no inverse.".format(idx)
                )
        arr.flags.writeable = False
        inverses.flags.writeable = False
        self.__table = arr
        self.__identity = identity
        self.__inverses = inverses
        self.__name = str(name) if name else "group:{0}".format(order)

    @property
    def order(self) -> int:
        """Property: The number of elements."""
        return int(self.__table.shape[0])

    @property
    def identity(self) -> int:
        """Property: The index of the identity."""
        return self.__identity

    @property
    def table(self) -> np.ndarray:
        """Property: The read-only multiplication table."""
        return self.__table

    @property
    def name(self) -> str:
        """Property: The name used in reports."""
        return self.__name

    def mul(self, idx_a: int, idx_b: int) -> int:
        """The index of `a * b`."""
        return int(self.__table[idx_a, idx_b])

    def inv(self, idx: int) -> int:
        """The index of `a^-1`."""
        return int(self.__inverses[idx])

    def is_abelian(self) -> bool:
        """Check whether the group is commutative."""
        return bool(np.array_equal(self.__table, self.__table.T))

    def to_json(self) -> Any:
        """The document accepted by the `group-table` input kind."""
        return {
            "table": self.__table.tolist(),
            "identity": self.__identity,
            "name": self.__name,
        }

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, GroupTable):
            return NotImplemented
        return self.__identity == other.identity and np.array_equal(
            self.__table, other.table
        )

    def __hash__(self) -> int:
        return hash((self.__identity, self.__table.tobytes()))

    def __repr__(self) -> str:
        return "<GroupTable {0} order={1}>".format(self.__name, self.order)


def _from_elements(elements: Sequence[Any], mul: Any, name: str) -> GroupTable:
    """Build the table of a group given by a list of hashable elements.

    The first element needs to be the identity.
    """
    lookup = {elem: idx for idx, elem in enumerate(elements)}
    table = [
        [lookup[mul(elem_a, elem_b)] for elem_b in elements] for elem_a in elements
    ]
    return GroupTable(table, identity=0, name=name)


def cyclic_group(order: int) -> GroupTable:
    """The cyclic group `Z/n`, the index `k` is the power `g^k` of a generator."""
    order = int(order)
    if order < 1:
        raise ValueError(
            'resolutions: The argument "order" needs to be >=1, get {0}.'.format(order)
        )
    idx = np.arange(order)
    return GroupTable(
        (idx[:, None] + idx[None, :]) % order,
        identity=0,
        name="cyclic:{0}".format(order),
    )


def klein_group() -> GroupTable:
    """The Klein four group `Z/2 x Z/2`, indices are the bit pairs."""
    idx = np.arange(4)
    return GroupTable(idx[:, None] ^ idx[None, :], identity=0, name="klein")


def symmetric3_group() -> GroupTable:
    """The symmetric group on three letters, elements in lexicographic order."""
    perms: List[Tuple[int, ...]] = list(itertools.permutations(range(3)))
    return _from_elements(
        perms,
        lambda perm_a, perm_b: tuple(perm_a[perm_b[idx]] for idx in range(3)),
        "symmetric3",
    )


# (sign, unit) with units 1, i, j, k.
_QUATERNION_UNITS = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)


def quaternion8_group() -> GroupTable:
    """The quaternion group `{+-1, +-i, +-j, +-k}`."""
    elements = [(sgn, unit) for sgn in (1, -1) for unit in range(4)]

    def _mul(elem_a: Tuple[int, int], elem_b: Tuple[int, int]) -> Tuple[int, int]:
        sgn, unit = _QUATERNION_UNITS[elem_a[1]][elem_b[1]]
        return (sgn * elem_a[0] * elem_b[0], unit)

    return _from_elements(elements, _mul, "quaternion8")


def dihedral_group(size: int) -> GroupTable:
    """The dihedral group of order `2n`, elements `r^a s^e` as pairs `(a, e)`."""
    size = int(size)
    if size < 1:
        raise ValueError(
            'resolutions: The argument "size" needs to be >=1, get {0}.'.format(size)
        )
    elements = [(rot, flip) for flip in (0, 1) for rot in range(size)]

    def _mul(elem_a: Tuple[int, int], elem_b: Tuple[int, int]) -> Tuple[int, int]:
        rot = elem_a[0] + (-elem_b[0] if elem_a[1] else elem_b[0])
        return (rot % size, elem_a[1] ^ elem_b[1])

    return _from_elements(elements, _mul, "dihedral:{0}".format(size))


GROUP_NAMES = (
    "cyclic:<n>",
    "klein",
    "symmetric3",
    "S3",
    "quaternion8",
    "Q8",
    "dihedral:<n>",
)
"""The names accepted by `named_group()`."""


def named_group(name: str) -> GroupTable:
    """Build a group from its name.

    Arguments
    ---------
    name: `str`
        One of `cyclic:<n>`, `klein`, `symmetric3` (`S3`), `quaternion8` (`Q8`),
        `dihedral:<n>`.
    """
    key, _, arg = str(name).strip().partition(":")
    key = key.lower()
    try:
        if key == "cyclic":
            return cyclic_group(int(arg))
        if key == "dihedral":
            return dihedral_group(int(arg))
    except ValueError as err:
        raise InputError(
            "resolutions: Invalid group name {0}: {1}".format(name, err)
        ) from err
    if arg:
        raise InputError("resolutions: Unknown group name {0}.".format(name))
    if key == "klein":
        return klein_group()
    if key in ("symmetric3", "s3"):
        return symmetric3_group()
    if key in ("quaternion8", "q8"):
        return quaternion8_group()
    raise InputError(
        "resolutions: Unknown group name {0}, use one of {1}.".format(
            name, ", ".join(GROUP_NAMES)
        )
    )
