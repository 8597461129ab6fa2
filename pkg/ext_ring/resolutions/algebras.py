# -*- coding: UTF-8 -*-
"""
Algebras
========
@ Ext Ring: resolutions

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Finite-dimensional algebras given by structure constants, and their modules.

An algebra of dimension `d` has the basis `b_0, ..., b_{d-1}` and the constants
`c[i, j, k]` with `b_i b_j = sum_k c[i, j, k] b_k`. Optional Hopf data are the
counit `eps[i] = eps(b_i)` and the coproduct
`Delta(b_i) = sum_{j, k} delta[i, j, k] b_j (x) b_k`.

All axioms are checked exhaustively on construction. The first failing triple of
basis indices is reported.
"""

import math

from typing import Any, Optional

try:
    from typing import Sequence
    from typing import List, Tuple
except ImportError:
    from collections.abc import Sequence
    from builtins import list as List, tuple as Tuple

import numpy as np

from ..errors import StructureError, InputError
from ..linalg import Field, PrimeField, Matrix
from .groups import GroupTable, named_group


__all__ = (
    "AlgebraPresentation",
    "ModuleRep",
    "group_algebra",
    "enveloping_algebra",
    "trivial_module",
    "regular_module",
    "regular_bimodule",
    "field_algebra",
    "truncated_polynomial_algebra",
    "dual_numbers",
    "upper_triangular_algebra",
    "restricted_algebra",
    "named_algebra",
    "ALGEBRA_NAMES",
)


def _first_mismatch(field: Field, left: np.ndarray, right: np.ndarray) -> Any:
    """The index of the first entry where two arrays differ, or `None`."""
    diff = field.reduce(np.atleast_1d(np.asarray(left) - np.asarray(right)))
    bad = np.argwhere(diff != 0)
    if bad.size == 0:
        return None
    return tuple(int(val) for val in bad[0])


def _triples(field: Field, arr: np.ndarray) -> List[List[Any]]:
    """The nonzero entries of a `(d, d, d)` array as `[i, j, k, value]`."""
    return [
        [int(idx[0]), int(idx[1]), int(idx[2]), field.format(arr[idx])]
        for idx in zip(*np.nonzero(arr != 0))
    ]


class AlgebraPresentation:
    """A finite-dimensional associative unital algebra over a field."""

    def __init__(
        self,
        field: Field,
        constants: Any,
        unit: Any,
        labels: Optional[Sequence[str]] = None,
        counit: Any = None,
        coproduct: Any = None,
        name: Optional[str] = None,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        field: `Field`
            The base field.

        constants: `array-like`
            The structure constants of the shape `(d, d, d)`.

        unit: `array-like`
            The coordinates of the unit element.

        labels: `[str] | None`
            The labels of the basis elements. Defaults to `b0, b1, ...`.

        counit: `array-like | None`
            The counit values of the basis elements.

        coproduct: `array-like | None`
            The coproduct constants of the shape `(d, d, d)`. It needs to be given
            together with `counit`.

        name: `str | None`
            The name used in reports.
        """
        consts = field.array(constants)
        if consts.ndim != 3 or len(set(consts.shape)) != 1 or consts.shape[0] == 0:
            raise StructureError(
                "resolutions: not an algebra, the constants need the shape "
                "(d, d, d), get {0}.".format(consts.shape)
            )
        dim = int(consts.shape[0])
        unit_vec = field.array(unit)
        if unit_vec.shape != (dim,):
            raise StructureError(
                "resolutions: not an algebra, the unit needs {0} coordinates.".format(
                    dim
                )
            )
        self.__field = field
        self.__dim = dim
        consts.flags.writeable = False
        unit_vec.flags.writeable = False
        self.__constants = consts
        self.__unit = unit_vec
        if labels is None:
            labels = tuple("b{0}".format(idx) for idx in range(dim))
        if len(labels) != dim:
            raise StructureError(
                "resolutions: not an algebra, {0} labels for {1} basis "
                "elements.".format(len(labels), dim)
            )
        self.__labels = tuple(str(val) for val in labels)
        self.__name = str(name) if name else "algebra:{0}".format(dim)
        self.__check_algebra()

        if counit is None and coproduct is not None:
            raise StructureError(
                "resolutions: not a bialgebra, the coproduct needs a counit."
            )
        self.__counit: Optional[np.ndarray] = None
        self.__coproduct: Optional[np.ndarray] = None
        if counit is not None:
            eps = field.array(counit)
            if eps.shape != (dim,):
                raise StructureError(
                    "resolutions: The counit needs {0} values.".format(dim)
                )
            eps.flags.writeable = False
            self.__counit = eps
            self.__check_counit()
        if coproduct is not None:
            delta = field.array(coproduct)
            if delta.shape != (dim, dim, dim):
                raise StructureError(
                    "resolutions: The coproduct needs the shape (d, d, d), get "
                    "{0}.".format(delta.shape)
                )
            delta.flags.writeable = False
            self.__coproduct = delta
            self.__check_coproduct()

    def __check_algebra(self) -> None:
        field, consts, unit = self.__field, self.__constants, self.__unit
        # (b_i b_j) b_l = b_i (b_j b_l), indexed (i, j, l, m)
        left = np.tensordot(consts, consts, axes=([2], [0]))
        right = np.tensordot(consts, consts, axes=([1], [2])).transpose(0, 2, 3, 1)
        bad = _first_mismatch(field, left, right)
        if bad is not None:
            raise StructureError(
                "resolutions: not an algebra, associativity fails at "
                "({0}, {1}, {2}).".format(*bad[:3])
            )
        eye = field.eye(self.__dim)
        bad = _first_mismatch(field, np.tensordot(unit, consts, axes=([0], [0])), eye)
        if bad is None:
            bad = _first_mismatch(
                field, np.tensordot(consts, unit, axes=([1], [0])), eye
            )
        if bad is not None:
            raise StructureError(
                "resolutions: not an algebra, the unit does not act as the identity "
                "on b{0}.".format(bad[0])
            )

    def __check_counit(self) -> None:
        field, consts = self.__field, self.__constants
        eps = self.__counit
        assert eps is not None
        # eps(b_i b_j) = eps(b_i) eps(b_j)
        bad = _first_mismatch(
            field, np.tensordot(consts, eps, axes=([2], [0])), np.outer(eps, eps)
        )
        if bad is not None:
            raise StructureError(
                "resolutions: The counit is not multiplicative at ({0}, {1}).".format(
                    *bad
                )
            )
        if _first_mismatch(
            field, np.tensordot(self.__unit, eps, axes=1), field.convert(1)
        ):
            raise StructureError("resolutions: The counit does not send 1 to 1.")

    def __check_coproduct(self) -> None:
        field, consts, unit = self.__field, self.__constants, self.__unit
        eps, delta = self.__counit, self.__coproduct
        assert eps is not None and delta is not None
        dim = self.__dim
        eye = field.eye(dim)
        # Coassociativity, indexed (i, a, b, k).
        left = np.tensordot(delta, delta, axes=([1], [0])).transpose(0, 2, 3, 1)
        right = np.tensordot(delta, delta, axes=([2], [0]))
        bad = _first_mismatch(field, left, right)
        if bad is not None:
            raise StructureError(
                "resolutions: The coproduct is not coassociative at b{0}.".format(
                    bad[0]
                )
            )
        # Counitality.
        bad = _first_mismatch(field, np.tensordot(delta, eps, axes=([1], [0])), eye)
        if bad is None:
            bad = _first_mismatch(
                field, np.tensordot(delta, eps, axes=([2], [0])), eye
            )
        if bad is not None:
            raise StructureError(
                "resolutions: The counit is not a counit for the coproduct at "
                "b{0}.".format(bad[0])
            )
        # Delta(b_i b_j) = Delta(b_i) Delta(b_j), indexed (i, j, p, q).
        left = np.tensordot(consts, delta, axes=([2], [0]))
        # delta[i, a, b] delta[j, a', b'] c[a, a', p] c[b, b', q]
        step = np.tensordot(delta, consts, axes=([1], [0]))  # (i, b, a', p)
        step = np.tensordot(step, delta, axes=([2], [1]))  # (i, b, p, j, b')
        step = np.tensordot(step, consts, axes=([1, 4], [0, 1]))  # (i, p, j, q)
        right = step.transpose(0, 2, 1, 3)
        bad = _first_mismatch(field, left, right)
        if bad is not None:
            raise StructureError(
                "resolutions: The coproduct is not multiplicative at ({0}, "
                "{1}).".format(*bad[:2])
            )
        bad = _first_mismatch(
            field, np.tensordot(unit, delta, axes=1), np.outer(unit, unit)
        )
        if bad is not None:
            raise StructureError(
                "resolutions: The coproduct does not send 1 to 1 (x) 1."
            )

    @property
    def field(self) -> Field:
        """Property: The base field."""
        return self.__field

    @property
    def dim(self) -> int:
        """Property: The dimension `d`."""
        return self.__dim

    @property
    def constants(self) -> np.ndarray:
        """Property: The read-only structure constants."""
        return self.__constants

    @property
    def unit(self) -> np.ndarray:
        """Property: The read-only coordinates of the unit."""
        return self.__unit

    @property
    def unit_pivot(self) -> int:
        """Property: The first basis index where the unit has a nonzero coordinate."""
        return int(np.flatnonzero(self.__unit != 0)[0])

    @property
    def labels(self) -> Tuple[str, ...]:
        """Property: The labels of the basis elements."""
        return self.__labels

    @property
    def name(self) -> str:
        """Property: The name used in reports."""
        return self.__name

    @property
    def counit(self) -> Optional[np.ndarray]:
        """Property: The counit values, or `None`."""
        return self.__counit

    @property
    def coproduct(self) -> Optional[np.ndarray]:
        """Property: The coproduct constants, or `None`."""
        return self.__coproduct

    @property
    def is_augmented(self) -> bool:
        """Property: Whether a counit is available."""
        return self.__counit is not None

    @property
    def is_bialgebra(self) -> bool:
        """Property: Whether the counit and the coproduct are available."""
        return self.__counit is not None and self.__coproduct is not None

    def left_mult(self, idx: int) -> Matrix:
        """The matrix of `x -> b_idx x`."""
        return Matrix(self.__field, self.__constants[idx].T)

    def right_mult(self, idx: int) -> Matrix:
        """The matrix of `x -> x b_idx`."""
        return Matrix(self.__field, self.__constants[:, idx, :].T)

    def multiply(self, left: Any, right: Any) -> np.ndarray:
        """The product of two elements given by their coordinates."""
        field = self.__field
        step = np.tensordot(field.array(left), self.__constants, axes=([0], [0]))
        return field.reduce(np.tensordot(field.array(right), step, axes=([0], [0])))

    def to_json(self) -> Any:
        """The document accepted by the `algebra` input kind."""
        field = self.__field
        triples = _triples(field, self.__constants)
        data = {
            "dim": self.__dim,
            "labels": list(self.__labels),
            "unit": [field.format(val) for val in self.__unit],
            "constants": triples,
            "name": self.__name,
        }
        if self.__counit is not None:
            data["counit"] = [field.format(val) for val in self.__counit]
        if self.__coproduct is not None:
            data["coproduct"] = _triples(field, self.__coproduct)
        return data

    def __repr__(self) -> str:
        return "<AlgebraPresentation {0} {1} dim={2}>".format(
            self.__name, self.__field.tag, self.__dim
        )


class ModuleRep:
    """A finite-dimensional left module over an `AlgebraPresentation`."""

    def __init__(
        self,
        algebra: AlgebraPresentation,
        actions: Sequence[Any],
        name: Optional[str] = None,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        algebra: `AlgebraPresentation`
            The acting algebra.

        actions: `[Matrix | array-like]`
            The action matrix of each basis element of the algebra.

        name: `str | None`
            The name used in reports.
        """
        field = algebra.field
        if len(actions) != algebra.dim:
            raise StructureError(
                "resolutions: not a module, need {0} action matrices, get {1}.".format(
                    algebra.dim, len(actions)
                )
            )
        mats = [
            mat if isinstance(mat, Matrix) else Matrix(field, mat) for mat in actions
        ]
        dim = mats[0].rows
        for mat in mats:
            field.check_same(mat.field)
            if mat.shape != (dim, dim):
                raise StructureError(
                    "resolutions: not a module, the action matrices need the shape "
                    "({0}, {0}).".format(dim)
                )
        self.__algebra = algebra
        self.__dim = dim
        self.__actions = tuple(mats)
        self.__name = str(name) if name else "module:{0}".format(dim)
        self.__check()

    def __check(self) -> None:
        algebra = self.__algebra
        field = algebra.field
        if self.__dim == 0:
            return
        stacked = np.stack([mat.data for mat in self.__actions], axis=0)
        # rho(b_i) rho(b_j) = sum_k c[i, j, k] rho(b_k)
        left = np.matmul(stacked[:, None], stacked[None, :])
        right = np.tensordot(algebra.constants, stacked, axes=([2], [0]))
        bad = _first_mismatch(field, left, right)
        if bad is not None:
            raise StructureError(
                "resolutions: not a module, the action fails at ({0}, {1}).".format(
                    *bad[:2]
                )
            )
        bad = _first_mismatch(
            field,
            np.tensordot(algebra.unit, stacked, axes=([0], [0])),
            field.eye(self.__dim),
        )
        if bad is not None:
            raise StructureError("resolutions: not a module, 1 does not act as 1.")

    @property
    def algebra(self) -> AlgebraPresentation:
        """Property: The acting algebra."""
        return self.__algebra

    @property
    def field(self) -> Field:
        """Property: The base field."""
        return self.__algebra.field

    @property
    def dim(self) -> int:
        """Property: The dimension of the module."""
        return self.__dim

    @property
    def name(self) -> str:
        """Property: The name used in reports."""
        return self.__name

    @property
    def actions(self) -> Tuple[Matrix, ...]:
        """Property: The action matrices of the basis elements."""
        return self.__actions

    def act(self, idx: int) -> Matrix:
        """The action matrix of `b_idx`."""
        return self.__actions[idx]

    def stacked(self) -> np.ndarray:
        """The action matrices stacked into an array of the shape `(d, m, m)`."""
        if not self.__actions:
            return self.field.zeros((0, self.__dim, self.__dim))
        return np.stack([mat.data for mat in self.__actions], axis=0)

    def __repr__(self) -> str:
        return "<ModuleRep {0} over {1} dim={2}>".format(
            self.__name, self.__algebra.name, self.__dim
        )


def group_algebra(group: GroupTable, field: Field) -> AlgebraPresentation:
    """The group algebra `kG` with its Hopf structure.

    The basis is the group, `Delta(g) = g (x) g` and `eps(g) = 1`.
    """
    order = group.order
    one = field.convert(1)
    consts = field.zeros((order, order, order))
    idx_a, idx_b = np.indices((order, order))
    consts[idx_a, idx_b, group.table] = one
    unit = field.zeros(order)
    unit[group.identity] = one
    counit = field.zeros(order)
    counit[:] = one
    coproduct = field.zeros((order, order, order))
    diag = np.arange(order)
    coproduct[diag, diag, diag] = one
    return AlgebraPresentation(
        field,
        consts,
        unit,
        labels=["g{0}".format(idx) for idx in range(order)],
        counit=counit,
        coproduct=coproduct,
        name="group:{0}".format(group.name),
    )


def enveloping_algebra(algebra: AlgebraPresentation) -> AlgebraPresentation:
    """The enveloping algebra `A^e = A (x) A^op`.

    The basis element `b_i (x) b_j` has the index `i * d + j`, and
    `(a (x) b)(a' (x) b') = a a' (x) b' b`. An `A^e`-module is an `A`-bimodule
    with `(b_i (x) b_j) . x = b_i x b_j`.
    """
    field, dim = algebra.field, algebra.dim
    consts = algebra.constants
    swapped = consts.transpose(1, 0, 2)
    # c[i, k, m] c[l, j, n] at (i, j, k, l, m, n)
    prod = consts[:, None, :, None, :, None] * swapped[None, :, None, :, None, :]
    size = dim * dim
    unit = np.outer(algebra.unit, algebra.unit).reshape(size)
    labels = [
        "{0}|{1}".format(lab_a, lab_b)
        for lab_a in algebra.labels
        for lab_b in algebra.labels
    ]
    return AlgebraPresentation(
        field,
        field.reduce(prod.reshape(size, size, size)),
        field.reduce(unit),
        labels=labels,
        name="enveloping:{0}".format(algebra.name),
    )


def trivial_module(algebra: AlgebraPresentation) -> ModuleRep:
    """The base field as a module through the counit."""
    if algebra.counit is None:
        raise StructureError(
            "resolutions: The algebra {0} has no counit.".format(algebra.name)
        )
    field = algebra.field
    return ModuleRep(
        algebra,
        [Matrix(field, [[val]]) for val in algebra.counit],
        name="trivial",
    )


def regular_module(algebra: AlgebraPresentation) -> ModuleRep:
    """The algebra as a left module over itself."""
    return ModuleRep(
        algebra,
        [algebra.left_mult(idx) for idx in range(algebra.dim)],
        name="regular",
    )


def regular_bimodule(
    algebra: AlgebraPresentation, envelope: Optional[AlgebraPresentation] = None
) -> ModuleRep:
    """The algebra as a module over its enveloping algebra.

    Arguments
    ---------
    algebra: `AlgebraPresentation`
        The algebra `A`.

    envelope: `AlgebraPresentation | None`
        The enveloping algebra, if it is already built.
    """
    if envelope is None:
        envelope = enveloping_algebra(algebra)
    dim = algebra.dim
    lefts = [algebra.left_mult(idx) for idx in range(dim)]
    rights = [algebra.right_mult(idx) for idx in range(dim)]
    return ModuleRep(
        envelope,
        [lefts[idx_i] @ rights[idx_j] for idx_i in range(dim) for idx_j in range(dim)],
        name="bimodule",
    )


def field_algebra(field: Field) -> AlgebraPresentation:
    """The base field as a one-dimensional Hopf algebra."""
    one = field.convert(1)
    consts = field.zeros((1, 1, 1))
    consts[0, 0, 0] = one
    unit = field.zeros(1)
    unit[0] = one
    return AlgebraPresentation(
        field,
        consts,
        unit,
        labels=["1"],
        counit=unit.copy(),
        coproduct=consts.copy(),
        name="field",
    )


def _power_constants(field: Field, size: int) -> np.ndarray:
    """Structure constants of `k[x]/(x^n)` in the basis `1, x, ..., x^(n-1)`."""
    consts = field.zeros((size, size, size))
    one = field.convert(1)
    for idx_i in range(size):
        for idx_j in range(size - idx_i):
            consts[idx_i, idx_j, idx_i + idx_j] = one
    return consts


def _power_labels(size: int) -> List[str]:
    return ["1"] + ["x" if idx == 1 else "x^{0}".format(idx) for idx in range(1, size)]


def truncated_polynomial_algebra(field: Field, size: int) -> AlgebraPresentation:
    """The truncated polynomial algebra `k[x]/(x^n)`, augmented by `x -> 0`."""
    size = int(size)
    if size < 1:
        raise ValueError(
            'resolutions: The argument "size" needs to be >=1, get {0}.'.format(size)
        )
    unit = field.zeros(size)
    unit[0] = field.convert(1)
    return AlgebraPresentation(
        field,
        _power_constants(field, size),
        unit,
        labels=_power_labels(size),
        counit=unit.copy(),
        name="truncated:{0}".format(size),
    )


def dual_numbers(field: Field) -> AlgebraPresentation:
    """The dual numbers `k[x]/(x^2)`."""
    res = truncated_polynomial_algebra(field, 2)
    return AlgebraPresentation(
        field,
        res.constants,
        res.unit,
        labels=res.labels,
        counit=res.counit,
        name="dualnumbers",
    )


def restricted_algebra(field: Field) -> AlgebraPresentation:
    """The restricted enveloping algebra `k[x]/(x^p)` of a one-dimensional Lie
    algebra over `GF(p)`, with `x` primitive.

    `Delta(x^k) = sum_i binom(k, i) x^i (x) x^(k-i)`, which is well defined because
    `(x (x) 1 + 1 (x) x)^p = 0` in characteristic `p`.
    """
    if not isinstance(field, PrimeField):
        raise InputError("resolutions: The restricted algebra needs a prime field.")
    size = field.p
    unit = field.zeros(size)
    unit[0] = field.convert(1)
    coproduct = field.zeros((size, size, size))
    for power in range(size):
        for idx in range(power + 1):
            coproduct[power, idx, power - idx] = field.convert(math.comb(power, idx))
    return AlgebraPresentation(
        field,
        _power_constants(field, size),
        unit,
        labels=_power_labels(size),
        counit=unit.copy(),
        coproduct=coproduct,
        name="restricted",
    )


def upper_triangular_algebra(field: Field) -> AlgebraPresentation:
    """The algebra of `2 x 2` upper-triangular matrices, basis `e11, e12, e22`."""
    one = field.convert(1)
    consts = field.zeros((3, 3, 3))
    # e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
    for idx_i, idx_j, idx_k in ((0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)):
        consts[idx_i, idx_j, idx_k] = one
    unit = field.zeros(3)
    unit[0] = unit[2] = one
    return AlgebraPresentation(
        field, consts, unit, labels=["e11", "e12", "e22"], name="uppertriangular"
    )


ALGEBRA_NAMES = (
    "field",
    "dualnumbers",
    "truncated:<n>",
    "uppertriangular",
    "group:<group name>",
    "restricted",
)
"""The names accepted by `named_algebra()`."""


def named_algebra(name: str, field: Field) -> AlgebraPresentation:
    """Build an algebra from its name.

    Arguments
    ---------
    name: `str`
        One of `field`, `dualnumbers`, `truncated:<n>`, `uppertriangular`,
        `group:<group name>` and `restricted`.

    field: `Field`
        The base field.
    """
    key, _, arg = str(name).strip().partition(":")
    key = key.lower()
    if key == "group":
        return group_algebra(named_group(arg), field)
    if key == "truncated":
        try:
            return truncated_polynomial_algebra(field, int(arg))
        except ValueError as err:
            raise InputError(
                "resolutions: Invalid algebra name {0}: {1}".format(name, err)
            ) from err
    if arg:
        raise InputError("resolutions: Unknown algebra name {0}.".format(name))
    if key == "field":
        return field_algebra(field)
    if key == "dualnumbers":
        return dual_numbers(field)
    if key == "uppertriangular":
        return upper_triangular_algebra(field)
    if key == "restricted":
        return restricted_algebra(field)
    raise InputError(
        "resolutions: Unknown algebra name {0}, use one of {1}.".format(
            name, ", ".join(ALGEBRA_NAMES)
        )
    )
