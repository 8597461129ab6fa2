# -*- coding: UTF-8 -*-
"""
Free resolutions
================
@ Ext Ring: resolutions

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Free resolutions `... -> F_1 -> F_0 -> M -> 0` of a module over a finite-dimensional
algebra `A`, stored on generators.

The free module `F_n` of rank `r_n` has the field basis `b_i e_x` with the index
`x * d + i`, where `e_x` is the `x`-th generator and `b_i` the `i`-th basis element
of `A`. A module map out of `F_n` is determined by the images of the generators,
so the differentials are stored as matrices of the shape `(d * r_{n-1}, r_n)` and
the augmentation as a matrix of the shape `(dim M, r_0)`. The field matrices are
expanded on demand.

`Hom_A(F_n, M)` is identified with `M^{r_n}`. A cochain `f` is the vector with
`vec[x * dim M + m]` the `m`-th coordinate of `f(e_x)`.
"""

import functools

from typing import Any

try:
    from typing import Mapping, Sequence
    from typing import Dict, Tuple
except ImportError:
    from collections.abc import Mapping, Sequence
    from builtins import dict as Dict, tuple as Tuple

from typing_extensions import Literal

import numpy as np

from ..errors import ComplexError, ShapeError
from ..utilities import get_logger
from ..linalg import Field, Matrix, rank
from ..complexes import Complex, ChainMap, concentrated
from .algebras import AlgebraPresentation, ModuleRep


__all__ = (
    "ResolutionKind",
    "expand_generator_images",
    "stacked_actions",
    "FreeResolution",
)

ResolutionKind = Literal["bar", "two-sided-bar", "periodic", "custom"]

logger = get_logger("resolutions")


def expand_generator_images(
    field: Field, actions: np.ndarray, images: np.ndarray
) -> np.ndarray:
    """Expand a module map out of a free module from its generator images.

    Arguments
    ---------
    field: `Field`
        The base field.

    actions: `np.ndarray`
        The action matrices on the target, stacked into the shape `(d, t, t)`.

    images: `np.ndarray`
        The images of the generators as columns, of the shape `(t, r)`.

    Returns
    -------
    #1: `np.ndarray`
        The field matrix of the shape `(t, r * d)`. The column `x * d + i` is the
        image `b_i . images[:, x]`.
    """
    n_acts, dim_t = actions.shape[0], actions.shape[1]
    n_gens = images.shape[1]
    if images.shape[0] != dim_t:
        raise ShapeError(
            "resolutions: The generator images need {0} rows, get {1}.".format(
                dim_t, images.shape[0]
            )
        )
    if dim_t == 0 or n_gens == 0 or n_acts == 0:
        return field.zeros((dim_t, n_gens * n_acts))
    res = np.tensordot(actions, images, axes=([2], [0]))  # (i, t, x)
    return field.reduce(res.transpose(1, 2, 0).reshape(dim_t, n_gens * n_acts))


def stacked_actions(cpx: Complex, deg: int) -> np.ndarray:
    """The actions on one degree of a complex, stacked into `(d, t, t)`."""
    acts = cpx.actions(deg)
    dim = cpx.dim(deg)
    if not acts:
        return cpx.field.zeros((0, dim, dim))
    return np.stack(
        [mat.data if mat.rows == dim else cpx.field.zeros((dim, dim)) for mat in acts],
        axis=0,
    )


class FreeResolution:
    """A free resolution of a module, truncated at a finite length."""

    def __init__(
        self,
        algebra: AlgebraPresentation,
        module: ModuleRep,
        ranks: Sequence[int],
        images: Mapping[int, Any],
        augmentation: Any,
        kind: ResolutionKind = "custom",
        check: bool = True,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        algebra: `AlgebraPresentation`
            The algebra `A`.

        module: `ModuleRep`
            The resolved module `M`.

        ranks: `[int]`
            The ranks `r_0, ..., r_L`. The length of the resolution is `L`.

        images: `{int: Matrix | array-like}`
            For `1 <= n <= L`, the images of the generators of `F_n` in `F_{n-1}`,
            of the shape `(d * r_{n-1}, r_n)`.

        augmentation: `Matrix | array-like`
            The images of the generators of `F_0` in `M`, of the shape
            `(dim M, r_0)`.

        kind: `str`
            The construction used, only for reports.

        check: `bool`
            If set, check `d o d = 0` and `eps o d_1 = 0`.
        """
        field = algebra.field
        if module.algebra.dim != algebra.dim:
            raise ComplexError(
                "resolutions: The module is not a module over the algebra."
            )
        if not ranks:
            raise ComplexError("resolutions: A resolution needs at least F_0.")
        self.__algebra = algebra
        self.__module = module
        self.__ranks = tuple(int(val) for val in ranks)
        self.__kind = kind
        dim = algebra.dim
        self.__images: Dict[int, Matrix] = dict()
        for deg in range(1, len(self.__ranks)):
            mat = images.get(deg)
            shape = (dim * self.__ranks[deg - 1], self.__ranks[deg])
            if mat is None:
                mat = Matrix.zeros(field, *shape)
            elif not isinstance(mat, Matrix):
                mat = Matrix(field, mat)
            if mat.shape != shape:
                raise ComplexError(
                    "resolutions: The images of degree {0} need the shape {1}, get "
                    "{2}.".format(deg, shape, mat.shape)
                )
            self.__images[deg] = mat
        aug = augmentation
        if not isinstance(aug, Matrix):
            aug = Matrix(field, aug)
        if aug.shape != (module.dim, self.__ranks[0]):
            raise ComplexError(
                "resolutions: The augmentation needs the shape {0}, get {1}.".format(
                    (module.dim, self.__ranks[0]), aug.shape
                )
            )
        self.__augmentation = aug
        # (d, m, k) with [i, m, k] = c[i, k, m]
        self.__left_stack = algebra.constants.transpose(0, 2, 1)
        if check:
            self.__check()

    def __check(self) -> None:
        if self.length >= 1:
            if not (self.full_augmentation @ self.__images[1]).is_zero():
                raise ComplexError("resolutions: eps o d_1 is not zero.")
        for deg in range(2, self.length + 1):
            if not (self.differential(deg - 1) @ self.__images[deg]).is_zero():
                raise ComplexError(
                    "resolutions: d_{0} o d_{1} is not zero.".format(deg - 1, deg)
                )

    @property
    def algebra(self) -> AlgebraPresentation:
        """Property: The algebra `A`."""
        return self.__algebra

    @property
    def module(self) -> ModuleRep:
        """Property: The resolved module `M`."""
        return self.__module

    @property
    def field(self) -> Field:
        """Property: The base field."""
        return self.__algebra.field

    @property
    def kind(self) -> ResolutionKind:
        """Property: The construction used."""
        return self.__kind

    @property
    def length(self) -> int:
        """Property: The highest degree `L`."""
        return len(self.__ranks) - 1

    @property
    def ranks(self) -> Tuple[int, ...]:
        """Property: The ranks `r_0, ..., r_L`."""
        return self.__ranks

    def rank(self, deg: int) -> int:
        """The rank of `F_deg`, `0` out of `[0, L]`."""
        if 0 <= deg <= self.length:
            return self.__ranks[deg]
        return 0

    def dim(self, deg: int) -> int:
        """The dimension of `F_deg` over the field."""
        return self.__algebra.dim * self.rank(deg)

    def generator_images(self, deg: int) -> Matrix:
        """The images of the generators of `F_deg` in `F_{deg-1}`."""
        mat = self.__images.get(deg)
        if mat is None:
            return Matrix.zeros(self.field, self.dim(deg - 1), self.rank(deg))
        return mat

    @property
    def augmentation(self) -> Matrix:
        """Property: The images of the generators of `F_0` in `M`."""
        return self.__augmentation

    def free_actions(self, deg: int) -> Tuple[Matrix, ...]:
        """The action matrices `I_r (x) L(b_i)` on `F_deg`."""
        field = self.field
        eye = Matrix.identity(field, self.rank(deg))
        return tuple(
            eye.kron(Matrix(field, self.__left_stack[idx]))
            for idx in range(self.__algebra.dim)
        )

    @functools.lru_cache(maxsize=None)
    def differential(self, deg: int) -> Matrix:
        """The field matrix of `d_deg : F_deg -> F_{deg-1}`."""
        field = self.field
        dim = self.__algebra.dim
        r_prev, r_cur = self.rank(deg - 1), self.rank(deg)
        if r_prev == 0 or r_cur == 0:
            return Matrix.zeros(field, dim * r_prev, dim * r_cur)
        coeff = self.generator_images(deg).data.reshape(r_prev, dim, r_cur)
        # (j, k, x) with (i, m, k) -> (j, x, i, m)
        res = np.tensordot(coeff, self.__left_stack, axes=([1], [2]))
        res = res.transpose(0, 3, 1, 2).reshape(r_prev * dim, r_cur * dim)
        return Matrix(field, res)

    @functools.cached_property
    def full_augmentation(self) -> Matrix:
        """Property: The field matrix of `eps : F_0 -> M`."""
        return Matrix(
            self.field,
            expand_generator_images(
                self.field, self.__module.stacked(), self.__augmentation.data
            ),
        )

    def generator_vector(self, deg: int, idx: int) -> np.ndarray:
        """The field vector of the generator `e_idx` of `F_deg`."""
        dim = self.__algebra.dim
        vec = self.field.zeros(self.dim(deg))
        vec[idx * dim : (idx + 1) * dim] = self.__algebra.unit
        return vec

    @functools.cached_property
    def complex(self) -> Complex:
        """Property: The resolution as a complex of modules, in degrees `[0, L]`."""
        degrees = range(self.length + 1)
        return Complex(
            self.field,
            {deg: self.dim(deg) for deg in degrees},
            {deg: self.differential(deg) for deg in range(1, self.length + 1)},
            {deg: self.free_actions(deg) for deg in degrees},
            action_dim=self.__algebra.dim,
            check=False,
        )

    @functools.cached_property
    def target(self) -> Complex:
        """Property: The module `M` as a complex concentrated in degree `0`."""
        return concentrated(
            self.field, self.__module.dim, 0, actions=self.__module.actions
        )

    @functools.cached_property
    def augmentation_map(self) -> ChainMap:
        """Property: The augmentation as a chain map to `target`."""
        return ChainMap(
            self.complex, self.target, {0: self.full_augmentation}, check=False
        )

    def cochain_dim(self, deg: int) -> int:
        """The dimension of `Hom_A(F_deg, M)`."""
        return self.rank(deg) * self.__module.dim

    @functools.lru_cache(maxsize=None)
    def cochain_differential(self, deg: int) -> Matrix:
        """The coboundary `Hom_A(F_{deg-1}, M) -> Hom_A(F_deg, M)`, `f -> f o d`."""
        field = self.field
        dim, dim_m = self.__algebra.dim, self.__module.dim
        r_prev, r_cur = self.rank(deg - 1), self.rank(deg)
        if r_prev * r_cur * dim_m == 0:
            return Matrix.zeros(field, r_cur * dim_m, r_prev * dim_m)
        coeff = self.generator_images(deg).data.reshape(r_prev, dim, r_cur)
        res = np.tensordot(coeff, self.__module.stacked(), axes=([1], [0]))
        # (j, x, m', m) -> (x, m', j, m)
        res = res.transpose(1, 2, 0, 3).reshape(r_cur * dim_m, r_prev * dim_m)
        return Matrix(field, res)

    @functools.cached_property
    def hom_complex(self) -> Complex:
        """Property: The cochain complex `Hom_A(F, M)`.

        It is stored as a chain complex, with `Hom_A(F_n, M)` in degree `-n`.
        """
        degrees = range(self.length + 1)
        return Complex(
            self.field,
            {-deg: self.cochain_dim(deg) for deg in degrees},
            {
                1 - deg: self.cochain_differential(deg)
                for deg in range(1, self.length + 1)
            },
            check=False,
        )

    def cochain_matrix(self, deg: int, vec: Any) -> Matrix:
        """The generator images `(dim M, r_deg)` of the cochain `vec`."""
        field = self.field
        vec = field.array(vec)
        if vec.shape != (self.cochain_dim(deg),):
            raise ShapeError(
                "resolutions: A cochain of degree {0} needs {1} entries, get "
                "{2}.".format(deg, self.cochain_dim(deg), vec.shape)
            )
        return Matrix(field, vec.reshape(self.rank(deg), self.__module.dim).T)

    def cochain_vector(self, mat: Matrix) -> np.ndarray:
        """The inverse of `cochain_matrix()`."""
        return self.field.reduce(mat.data.T.reshape(-1))

    def full_cochain(self, deg: int, vec: Any) -> Matrix:
        """The field matrix of the module map `F_deg -> M` given by a cochain."""
        return Matrix(
            self.field,
            expand_generator_images(
                self.field, self.__module.stacked(), self.cochain_matrix(deg, vec).data
            ),
        )

    def generator_values(self, deg: int, full: Matrix) -> Matrix:
        """The values `(t, r_deg)` of a field map `F_deg -> V` on the generators."""
        dim, gens = self.__algebra.dim, self.rank(deg)
        if full.cols != dim * gens:
            raise ShapeError(
                "resolutions: A map out of F_{0} needs {1} columns, get {2}.".format(
                    deg, dim * gens, full.cols
                )
            )
        if full.rows == 0 or gens == 0:
            return Matrix.zeros(self.field, full.rows, gens)
        res = full.data.reshape(full.rows, gens, dim) @ self.__algebra.unit
        return Matrix(self.field, res)

    def is_exact(self) -> bool:
        """Check the exactness by counting ranks.

        `F_{L-1} -> ... -> F_0 -> M -> 0` needs to be exact, i.e.
        `rank eps = dim M`, `rank eps + rank d_1 = dim F_0` and
        `rank d_n + rank d_{n+1} = dim F_n` for `0 < n < L`.
        """
        ranks = [rank(self.full_augmentation)] + [
            rank(self.differential(deg)) for deg in range(1, self.length + 1)
        ]
        if ranks[0] != self.__module.dim:
            logger.debug("The augmentation is not surjective.")
            return False
        for deg in range(self.length):
            if ranks[deg] + ranks[deg + 1] != self.dim(deg):
                logger.debug("The resolution is not exact at degree %d.", deg)
                return False
        return True

    def __repr__(self) -> str:
        return "<FreeResolution {0} of {1} over {2} ranks={3}>".format(
            self.__kind, self.__module.name, self.__algebra.name, self.__ranks
        )
