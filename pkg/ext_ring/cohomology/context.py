# -*- coding: UTF-8 -*-
"""
Context
=======
@ Ext Ring: cohomology

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The cohomology context owns one free resolution `F -> M` and computes the groups
`Ext^n_A(M, M) = H^n Hom_A(F, M)` for `0 <= n <= N`. The resolution needs the
length `N + 1` at least, so that the cocycles of degree `N` are decided.

A class is stored as one of its cocycles. The canonical basis of each degree is
the echelon-derived set of cocycles chosen by `subquotient_representatives()`, so
the coordinates of a class are reproducible.
"""

import hashlib
import functools

from typing import Any, Optional

try:
    from typing import List, Tuple
except ImportError:
    from builtins import list as List, tuple as Tuple

import numpy as np

from ..errors import ContextMismatchError, NotACocycleError
from ..utilities import get_logger
from ..typehints import ContextKind
from ..caches import CacheMemory
from ..caches.typehints import CachedItemInfo
from ..linalg import Field, Matrix, Solver, kernel_matrix, subquotient_representatives
from ..complexes import ChainMap
from ..resolutions import (
    AlgebraPresentation,
    ModuleRep,
    FreeResolution,
    GroupTable,
    group_algebra,
    trivial_module,
    bar_resolution,
    two_sided_bar_resolution,
    lift_cocycle,
)
from ..resolutions.lifting import cached_solver


__all__ = (
    "CohomologyContext",
    "CohomologyClass",
    "classes_equal",
    "group_context",
    "hochschild_context",
    "ext_context",
    "ext_dims",
)

logger = get_logger("cohomology")


class CohomologyContext:
    """Cohomology of one resolution, truncated at the degree `N`."""

    def __init__(
        self,
        resolution: FreeResolution,
        max_degree: int,
        kind: ContextKind = "ext",
        base: Optional[AlgebraPresentation] = None,
        cache_size: int = 64,
        name: Optional[str] = None,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        resolution: `FreeResolution`
            The resolution `F -> M`. Its length needs to be >= `max_degree + 1`.

        max_degree: `int`
            The highest degree `N`.

        kind: `str`
            `"group"` for the bar resolution of the trivial module, `"hochschild"`
            for the two-sided bar resolution, `"ext"` for any other resolution.
            The cup products are only available for the first two kinds.

        base: `AlgebraPresentation | None`
            The algebra `A` of a `"hochschild"` context. The resolution is over
            `A^e` in this case.

        cache_size: `int`
            The number of memoized lifts and factorized matrices.

        name: `str | None`
            The name used in reports.
        """
        max_degree = int(max_degree)
        if max_degree < 0:
            raise ValueError(
                'cohomology: The argument "max_degree" needs to be >=0, get '
                "{0}.".format(max_degree)
            )
        if resolution.length < max_degree + 1:
            raise ValueError(
                "cohomology: The resolution has the length {0}, need {1} for "
                "N = {2}.".format(resolution.length, max_degree + 1, max_degree)
            )
        if kind == "hochschild" and base is None:
            raise ValueError('cohomology: A "hochschild" context needs the algebra.')
        if kind == "group" and resolution.module.dim != 1:
            raise ValueError('cohomology: A "group" context needs a trivial module.')
        if cache_size < 1:
            raise ValueError('cohomology: The argument "cache_size" needs to be >=1.')
        self.__resolution = resolution
        self.__max_degree = max_degree
        self.__kind: ContextKind = kind
        self.__base = base
        self.__name = str(name) if name else resolution.algebra.name
        self.__lifts: CacheMemory[CachedItemInfo, ChainMap] = CacheMemory(cache_size)
        self.__solvers: CacheMemory[CachedItemInfo, Solver] = CacheMemory(cache_size)

    @property
    def resolution(self) -> FreeResolution:
        """Property: The resolution `F -> M`."""
        return self.__resolution

    @property
    def field(self) -> Field:
        """Property: The base field."""
        return self.__resolution.field

    @property
    def max_degree(self) -> int:
        """Property: The highest degree `N`."""
        return self.__max_degree

    @property
    def kind(self) -> ContextKind:
        """Property: The kind of the context."""
        return self.__kind

    @property
    def base(self) -> Optional[AlgebraPresentation]:
        """Property: The algebra `A` of a Hochschild context."""
        return self.__base

    @property
    def name(self) -> str:
        """Property: The name used in reports."""
        return self.__name

    @property
    def solver_cache(self) -> CacheMemory[CachedItemInfo, Solver]:
        """Property: The cache of factorized matrices shared by all lifts."""
        return self.__solvers

    def check_degree(self, deg: int) -> None:
        """Raise `ValueError` if `deg` is out of `[0, N]`."""
        if not 0 <= deg <= self.__max_degree:
            raise ValueError(
                "cohomology: The degree {0} is out of [0, {1}].".format(
                    deg, self.__max_degree
                )
            )

    def cochain_dim(self, deg: int) -> int:
        """The dimension of the cochains of degree `deg`."""
        return self.__resolution.cochain_dim(deg)

    def coboundary(self, deg: int) -> Matrix:
        """The coboundary map into the cochains of degree `deg`."""
        return self.__resolution.cochain_differential(deg)

    def is_cocycle(self, deg: int, vec: Any) -> bool:
        """Check whether a cochain is a cocycle."""
        image = self.coboundary(deg + 1).apply(vec)
        return self.field.is_zero(image)

    @functools.lru_cache(maxsize=None)
    def basis(self, deg: int) -> Tuple[np.ndarray, ...]:
        """The canonical cocycles representing a basis of degree `deg`."""
        self.check_degree(deg)
        kernel = kernel_matrix(self.coboundary(deg + 1))
        reps = subquotient_representatives(kernel, self.coboundary(deg))
        logger.debug("H^%d of %s has the dimension %d.", deg, self.__name, len(reps))
        for vec in reps:
            vec.flags.writeable = False
        return tuple(reps)

    def dim(self, deg: int) -> int:
        """The dimension of degree `deg`."""
        return len(self.basis(deg))

    @property
    def dims(self) -> Tuple[int, ...]:
        """Property: The dimensions of the degrees `0 .. N`."""
        return tuple(self.dim(deg) for deg in range(self.__max_degree + 1))

    @functools.lru_cache(maxsize=None)
    def __coordinate_solver(self, deg: int) -> Solver:
        dim = self.cochain_dim(deg)
        reps = Matrix.from_columns(self.field, self.basis(deg), rows=dim)
        return Solver(Matrix.hstack(self.field, (reps, self.coboundary(deg)), dim))

    def coordinates(self, deg: int, vec: Any) -> np.ndarray:
        """The coordinates of the class of a cocycle in the canonical basis.

        Raises `NotACocycleError` if `vec` is not a cocycle.
        """
        self.check_degree(deg)
        vec = self.field.array(vec)
        if not self.is_cocycle(deg, vec):
            raise NotACocycleError(
                "cohomology: not a cocycle in degree {0}.".format(deg)
            )
        res = self.__coordinate_solver(deg).solve(vec)
        if res is None:
            raise NotACocycleError(
                "cohomology: not a cocycle in degree {0}.".format(deg)
            )
        return res[: self.dim(deg)]

    def is_coboundary(self, deg: int, vec: Any) -> bool:
        """Check whether a cochain is a coboundary."""
        return cached_solver(self.coboundary(deg), self.__solvers, deg).contains(vec)

    def cocycle(self, deg: int, coords: Any) -> np.ndarray:
        """The cocycle `sum_i coords[i] basis[i]`."""
        coords = self.field.array(coords)
        if coords.shape != (self.dim(deg),):
            raise ValueError(
                "cohomology: Degree {0} needs {1} coordinates, get {2}.".format(
                    deg, self.dim(deg), coords.shape
                )
            )
        res = self.field.zeros(self.cochain_dim(deg))
        for coeff, vec in zip(coords, self.basis(deg)):
            res = res + coeff * vec
        return self.field.reduce(res)

    def element(self, deg: int, vec: Any, check: bool = True) -> "CohomologyClass":
        """The class of a cocycle."""
        return CohomologyClass(self, deg, vec, check=check)

    def basis_class(self, deg: int, idx: int) -> "CohomologyClass":
        """The `idx`-th class of the canonical basis of degree `deg`."""
        return CohomologyClass(self, deg, self.basis(deg)[idx], check=False)

    def basis_classes(self, deg: int) -> Tuple["CohomologyClass", ...]:
        """All classes of the canonical basis of degree `deg`."""
        return tuple(self.basis_class(deg, idx) for idx in range(self.dim(deg)))

    def zero(self, deg: int) -> "CohomologyClass":
        """The zero class of degree `deg`."""
        return CohomologyClass(
            self, deg, self.field.zeros(self.cochain_dim(deg)), check=False
        )

    def one(self) -> "CohomologyClass":
        """The unit class, represented by the augmentation."""
        res = self.__resolution
        return CohomologyClass(
            self, 0, res.cochain_vector(res.augmentation), check=False
        )

    def random_cochain(self, deg: int, rng: np.random.Generator) -> np.ndarray:
        """A random cochain of degree `deg`."""
        return self.field.random(rng, (self.cochain_dim(deg),))

    def random_class(self, deg: int, rng: np.random.Generator) -> "CohomologyClass":
        """A random class, represented by a random cocycle of its coset."""
        coords = self.field.random(rng, (self.dim(deg),))
        vec = self.cocycle(deg, coords)
        if deg > 0:
            noise = self.coboundary(deg).apply(self.random_cochain(deg - 1, rng))
            vec = self.field.reduce(vec + noise)
        return CohomologyClass(self, deg, vec, check=False)

    def lift(self, cls: "CohomologyClass") -> ChainMap:
        """The chain map `F -> T^q F` lifting the cocycle of a class.

        The lift is computed up to the source degree `N` and memoized.
        """
        self.check_same(cls.context)
        key = "lift:{0}:{1}".format(cls.degree, _vector_key(self.field, cls.cocycle))
        return self.__lifts.fetch(
            key,
            CachedItemInfo(kind="lift", degree=cls.degree, size=cls.cocycle.size),
            lambda: lift_cocycle(
                self.__resolution,
                cls.cocycle,
                cls.degree,
                stop=self.__max_degree,
                cache=self.__solvers,
                check=False,
            ),
        )

    def check_same(self, other: "CohomologyContext") -> None:
        """Raise `ContextMismatchError` if `other` is another context."""
        if other is not self:
            raise ContextMismatchError(
                "cohomology: The classes belong to different contexts, {0} and "
                "{1}.".format(self.__name, other.name)
            )

    def __repr__(self) -> str:
        return "<CohomologyContext {0} of {1} N={2}>".format(
            self.__kind, self.__name, self.__max_degree
        )


def _vector_key(field: Field, vec: np.ndarray) -> str:
    hasher = hashlib.sha256()
    hasher.update(",".join(field.format(val) for val in vec).encode())
    return hasher.hexdigest()


class CohomologyClass:
    """A cohomology class given by one of its cocycles."""

    def __init__(
        self,
        context: CohomologyContext,
        degree: int,
        cocycle: Any,
        check: bool = True,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        context: `CohomologyContext`
            The context of the class.

        degree: `int`
            The degree, in `[0, N]`.

        cocycle: `array-like`
            The representative cocycle.

        check: `bool`
            If set, check that `cocycle` is a cocycle.
        """
        degree = int(degree)
        context.check_degree(degree)
        vec = context.field.array(cocycle)
        if vec.shape != (context.cochain_dim(degree),):
            raise ValueError(
                "cohomology: A cochain of degree {0} needs {1} entries, get "
                "{2}.".format(degree, context.cochain_dim(degree), vec.shape)
            )
        if check and not context.is_cocycle(degree, vec):
            raise NotACocycleError(
                "cohomology: not a cocycle in degree {0}.".format(degree)
            )
        vec.flags.writeable = False
        self.__context = context
        self.__degree = degree
        self.__cocycle = vec

    @property
    def context(self) -> CohomologyContext:
        """Property: The context of the class."""
        return self.__context

    @property
    def degree(self) -> int:
        """Property: The degree."""
        return self.__degree

    @property
    def cocycle(self) -> np.ndarray:
        """Property: The read-only representative cocycle."""
        return self.__cocycle

    @property
    def coordinates(self) -> np.ndarray:
        """Property: The coordinates in the canonical basis."""
        return self.__context.coordinates(self.__degree, self.__cocycle)

    def is_zero(self) -> bool:
        """Check whether the class vanishes."""
        return self.__context.field.is_zero(self.coordinates)

    def __combine(self, other: "CohomologyClass", coeff: int) -> "CohomologyClass":
        self.__context.check_same(other.context)
        if other.degree != self.__degree:
            raise ValueError(
                "cohomology: Cannot add the degrees {0} and {1}.".format(
                    self.__degree, other.degree
                )
            )
        return CohomologyClass(
            self.__context,
            self.__degree,
            self.__context.field.reduce(self.__cocycle + coeff * other.cocycle),
            check=False,
        )

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self.__combine(other, 1)

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self.__combine(other, -1)

    def __neg__(self) -> "CohomologyClass":
        return self.scale(-1)

    def scale(self, coeff: Any) -> "CohomologyClass":
        """Multiply the class by a scalar."""
        field = self.__context.field
        return CohomologyClass(
            self.__context,
            self.__degree,
            field.reduce(self.__cocycle * field.convert(coeff)),
            check=False,
        )

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return classes_equal(self, other)

    def __hash__(self) -> int:
        field = self.__context.field
        return hash(
            (self.__degree, tuple(field.format(val) for val in self.coordinates))
        )

    def __repr__(self) -> str:
        field = self.__context.field
        return "<CohomologyClass degree={0} coordinates=({1})>".format(
            self.__degree, ", ".join(field.format(val) for val in self.coordinates)
        )


def classes_equal(first: CohomologyClass, second: CohomologyClass) -> bool:
    """Check whether two cocycles differ by a coboundary."""
    context = first.context
    context.check_same(second.context)
    if first.degree != second.degree:
        return False
    diff = context.field.reduce(first.cocycle - second.cocycle)
    return context.is_coboundary(first.degree, diff)


def group_context(
    group: Any,
    field: Optional[Field] = None,
    max_degree: int = 6,
    cache_size: int = 64,
    verify: bool = False,
) -> CohomologyContext:
    """The cohomology `H^*(G; k) = Ext_{kG}(k, k)` through the bar resolution.

    Arguments
    ---------
    group: `GroupTable | AlgebraPresentation`
        The group, or an augmented algebra. The trivial module is given by the
        counit.

    field: `Field | None`
        The base field. Only needed when `group` is a `GroupTable`.

    max_degree: `int`
        The highest degree `N`.

    cache_size: `int`
        The size of the memo caches.

    verify: `bool`
        If set, check the exactness of the resolution.
    """
    if isinstance(group, GroupTable):
        if field is None:
            raise ValueError("cohomology: A group needs a field.")
        algebra = group_algebra(group, field)
    else:
        algebra = group
    res = bar_resolution(algebra, trivial_module(algebra), max_degree + 1, verify)
    return CohomologyContext(
        res, max_degree, kind="group", cache_size=cache_size, name=algebra.name
    )


def hochschild_context(
    algebra: AlgebraPresentation,
    max_degree: int = 6,
    cache_size: int = 64,
    verify: bool = False,
) -> CohomologyContext:
    """The Hochschild cohomology `HH^*(A) = Ext_{A^e}(A, A)`.

    The two-sided bar resolution is used, so the cochains are the normalized
    Hochschild cochains.
    """
    res = two_sided_bar_resolution(algebra, max_degree + 1, verify=verify)
    return CohomologyContext(
        res,
        max_degree,
        kind="hochschild",
        base=algebra,
        cache_size=cache_size,
        name=algebra.name,
    )


def ext_context(
    resolution: FreeResolution, max_degree: int, cache_size: int = 64
) -> CohomologyContext:
    """`Ext_A(M, M)` through any free resolution of `M`."""
    return CohomologyContext(resolution, max_degree, kind="ext", cache_size=cache_size)


def ext_dims(
    algebra: AlgebraPresentation, module: ModuleRep, max_degree: int
) -> List[int]:
    """The dimensions of `Ext^n_A(M, M)` for `0 <= n <= N`, by the bar resolution."""
    res = bar_resolution(algebra, module, max_degree + 1)
    return list(ext_context(res, max_degree).dims)
