# -*- coding: UTF-8 -*-
"""
Instance
========
@ Ext Ring: monoidal

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The suspended monoidal categories. An instance bundles the tensor product, the
suspension, the one-step isomorphisms `lambda` and `rho`, the unitors and the
associator of one category of complexes:

- `ComplexInstance`: complexes of vector spaces, unit `k`.
- `HopfInstance`: complexes of modules over a Hopf algebra, with the diagonal
  action through the coproduct, unit the trivial module.
- `BimoduleInstance`: complexes of bimodules over an algebra `A`, tensored over
  `A`, unit `A`.

The iterated isomorphisms `lambda_p` and `rho_p` are derived from the one-step
maps in the same way for all instances.
"""

import abc

from typing import Optional

try:
    from typing import Sequence
    from typing import Dict, List, Tuple
except ImportError:
    from collections.abc import Sequence
    from builtins import dict as Dict, list as List, tuple as Tuple

import numpy as np

from ..errors import StructureError
from ..caches import CacheMemory
from ..caches.typehints import CachedItemInfo
from ..linalg import Field, Matrix, quotient_maps
from ..complexes import (
    Complex,
    ChainMap,
    TensorComplex,
    shift,
    concentrated,
    unit_complex,
    random_complex,
    compose,
    identity_map,
    shift_map,
    random_chain_map,
    iterate_suspension,
)
from ..complexes import koszul
from ..resolutions import (
    AlgebraPresentation,
    enveloping_algebra,
    regular_module,
    regular_bimodule,
    trivial_module,
)


__all__ = (
    "SuspendedMonoidal",
    "ComplexInstance",
    "HopfInstance",
    "BimoduleTensor",
    "BimoduleInstance",
    "free_extension",
)


def free_extension(cpx: Complex, actions: Sequence[Matrix]) -> Complex:
    """The complex `C (x) R` of free modules, acting on the right factor `R`.

    Arguments
    ---------
    cpx: `Complex`
        A complex of vector spaces.

    actions: `[Matrix]`
        The action on the regular module `R`.

    Returns
    -------
    #1: `Complex`
        Degree `n` is `C_n (x) R` with the basis index `c * dim R + r`.
    """
    field = cpx.field
    size = actions[0].rows
    eye = Matrix.identity(field, size)
    return Complex(
        field,
        {deg: val * size for deg, val in cpx.dims.items()},
        {deg: mat.kron(eye) for deg, mat in cpx.diffs().items()},
        {
            deg: tuple(Matrix.identity(field, val).kron(act) for act in actions)
            for deg, val in cpx.dims.items()
        },
        action_dim=len(actions),
        check=False,
    )


class SuspendedMonoidal(abc.ABC):
    """The abstract suspended monoidal category.

    A subclass provides the tensor product of objects and morphisms, the one-step
    isomorphisms, the unitors and the associator. Tensor products of objects are
    memoized by the fingerprints of the factors.
    """

    def __init__(self, field: Field, cache_size: int = 64) -> None:
        """Initialization.

        Arguments
        ---------
        field: `Field`
            The base field.

        cache_size: `int`
            The number of memoized tensor products.
        """
        self.__field = field
        self.__tensors: CacheMemory[CachedItemInfo, Complex] = CacheMemory(
            cache_size
        )

    @property
    def field(self) -> Field:
        """Property: The base field."""
        return self.__field

    @property
    @abc.abstractmethod
    def name(self) -> str:
        """Property: The name of the category."""
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def unit(self) -> Complex:
        """Property: The unit object `e`."""
        raise NotImplementedError

    @property
    def action_dim(self) -> Optional[int]:
        """Property: The number of acting basis elements of the objects, if any."""
        return None

    @abc.abstractmethod
    def _tensor(self, left: Complex, right: Complex) -> Complex:
        """Build the tensor product of two objects."""
        raise NotImplementedError

    def tensor(self, left: Complex, right: Complex) -> Complex:
        """The tensor product `x (x) y`."""
        return self.__tensors.fetch(
            "tensor:{0}:{1}".format(left.fingerprint, right.fingerprint),
            CachedItemInfo(
                kind="tensor", degree=0, size=left.total_dim * right.total_dim
            ),
            lambda: self._tensor(left, right),
        )

    @abc.abstractmethod
    def tensor_map(self, fmap: ChainMap, gmap: ChainMap) -> ChainMap:
        """The tensor product `f (x) g` of two morphisms."""
        raise NotImplementedError

    def shift(self, cpx: Complex, power: int) -> Complex:
        """The suspension `T^p x`."""
        return shift(cpx, power)

    def shift_map(self, fmap: ChainMap, power: int) -> ChainMap:
        """The suspension `T^p f`."""
        return shift_map(fmap, power)

    @abc.abstractmethod
    def lambda_step(self, left: Complex, right: Complex) -> ChainMap:
        """`lambda : x (x) Ty -> T(x (x) y)`."""
        raise NotImplementedError

    @abc.abstractmethod
    def rho_step(self, left: Complex, right: Complex) -> ChainMap:
        """`rho : Tx (x) y -> T(x (x) y)`."""
        raise NotImplementedError

    def lambda_iso(self, left: Complex, right: Complex, power: int) -> ChainMap:
        """`lambda_p : x (x) T^p y -> T^p(x (x) y)` for any integer `p`."""
        return iterate_suspension(
            self.lambda_step, self.tensor, left, right, power, "left"
        )

    def rho_iso(self, left: Complex, right: Complex, power: int) -> ChainMap:
        """`rho_p : T^p x (x) y -> T^p(x (x) y)` for any integer `p`."""
        return iterate_suspension(
            self.rho_step, self.tensor, left, right, power, "right"
        )

    @abc.abstractmethod
    def unitor_left(self, cpx: Complex) -> ChainMap:
        """`l : e (x) x -> x`."""
        raise NotImplementedError

    @abc.abstractmethod
    def unitor_right(self, cpx: Complex) -> ChainMap:
        """`r : x (x) e -> x`."""
        raise NotImplementedError

    @abc.abstractmethod
    def associator(self, first: Complex, second: Complex, third: Complex) -> ChainMap:
        """`a : (x (x) y) (x) z -> x (x) (y (x) z)`."""
        raise NotImplementedError

    @abc.abstractmethod
    def random_object(self, rng: np.random.Generator) -> Complex:
        """Draw a random object."""
        raise NotImplementedError

    def random_map(
        self, source: Complex, target: Complex, rng: np.random.Generator
    ) -> ChainMap:
        """Draw a random degree-0 morphism."""
        return random_chain_map(source, target, rng)

    def __repr__(self) -> str:
        return "<{0} {1}>".format(self.__class__.__name__, self.name)


class ComplexInstance(SuspendedMonoidal):
    """Complexes of vector spaces with the Koszul sign rule."""

    def __init__(
        self,
        field: Field,
        koszul_sign: bool = True,
        max_dim: int = 3,
        window: int = 3,
        cache_size: int = 64,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        field: `Field`
            The base field.

        koszul_sign: `bool`
            If not set, `lambda` drops its sign. The result is not a suspended
            monoidal category, and is only used as a negative control.

        max_dim, window: `int`
            The size of the random objects, see `random_complex()`.

        cache_size: `int`
            The number of memoized tensor products.
        """
        super().__init__(field, cache_size)
        self.__koszul_sign = bool(koszul_sign)
        self.__max_dim = int(max_dim)
        self.__window = int(window)
        self.__unit = unit_complex(field)

    @property
    def name(self) -> str:
        """Property: The name of the category."""
        return "complexes" if self.__koszul_sign else "complexes:no-koszul-sign"

    @property
    def koszul_sign(self) -> bool:
        """Property: Whether `lambda` carries the Koszul sign."""
        return self.__koszul_sign

    @property
    def unit(self) -> Complex:
        """Property: The base field in degree `0`."""
        return self.__unit

    def _tensor(self, left: Complex, right: Complex) -> Complex:
        return koszul.tensor(left, right)

    def tensor_map(self, fmap: ChainMap, gmap: ChainMap) -> ChainMap:
        return koszul.tensor_map(fmap, gmap)

    def lambda_step(self, left: Complex, right: Complex) -> ChainMap:
        return koszul.lambda_step(left, right, self.__koszul_sign)

    def rho_step(self, left: Complex, right: Complex) -> ChainMap:
        return koszul.rho_step(left, right)

    def unitor_left(self, cpx: Complex) -> ChainMap:
        return koszul.unitor_left(cpx, self.__unit)

    def unitor_right(self, cpx: Complex) -> ChainMap:
        return koszul.unitor_right(cpx, self.__unit)

    def associator(self, first: Complex, second: Complex, third: Complex) -> ChainMap:
        return koszul.associator(first, second, third)

    def random_object(self, rng: np.random.Generator) -> Complex:
        return random_complex(self.field, rng, self.__max_dim, self.__window)


class HopfInstance(SuspendedMonoidal):
    """Complexes of modules over a Hopf algebra.

    `H` acts on `X (x) Y` through the coproduct, `b_i` acting by
    `sum_{j,k} Delta[i, j, k] b_j (x) b_k`. The unit is the base field with the
    action of the counit. All structure maps are the ones of the underlying
    complexes of vector spaces, which are module maps.
    """

    def __init__(
        self,
        algebra: AlgebraPresentation,
        koszul_sign: bool = True,
        max_dim: int = 1,
        window: int = 3,
        cache_size: int = 64,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        algebra: `AlgebraPresentation`
            The Hopf algebra. It needs the counit and the coproduct.

        koszul_sign: `bool`
            If not set, `lambda` drops its sign. Only used as a negative control.

        max_dim, window: `int`
            The size of the random objects. A random object is a random complex
            tensored with the regular module.

        cache_size: `int`
            The number of memoized tensor products.
        """
        if not algebra.is_bialgebra:
            raise StructureError(
                "monoidal: The algebra {0} has no coproduct and counit.".format(
                    algebra.name
                )
            )
        super().__init__(algebra.field, cache_size)
        self.__algebra = algebra
        self.__koszul_sign = bool(koszul_sign)
        self.__max_dim = int(max_dim)
        self.__window = int(window)
        self.__unit = concentrated(
            algebra.field, 1, 0, actions=trivial_module(algebra).actions
        )
        self.__regular = regular_module(algebra).actions

    @property
    def name(self) -> str:
        """Property: The name of the category."""
        res = "hopf:{0}".format(self.__algebra.name)
        return res if self.__koszul_sign else res + ":no-koszul-sign"

    @property
    def koszul_sign(self) -> bool:
        """Property: Whether `lambda` carries the Koszul sign."""
        return self.__koszul_sign

    @property
    def algebra(self) -> AlgebraPresentation:
        """Property: The Hopf algebra."""
        return self.__algebra

    @property
    def unit(self) -> Complex:
        """Property: The trivial module in degree `0`."""
        return self.__unit

    @property
    def action_dim(self) -> Optional[int]:
        """Property: The dimension of the Hopf algebra."""
        return self.__algebra.dim

    def action_rule(
        self, left: Sequence[Matrix], right: Sequence[Matrix]
    ) -> Tuple[Matrix, ...]:
        """The diagonal action on a block `X (x) Y`."""
        field = self.field
        coproduct = self.__algebra.coproduct
        assert coproduct is not None
        xs = np.stack([mat.data for mat in left])
        ys = np.stack([mat.data for mat in right])
        dim = xs.shape[0]
        size = xs.shape[1] * ys.shape[1]
        # kron(X_j, Y_k) at (j, k)
        pairs = xs[:, None, :, None, :, None] * ys[None, :, None, :, None, :]
        pairs = pairs.reshape(dim, dim, size, size)
        res = field.reduce(np.tensordot(coproduct, pairs, axes=([1, 2], [0, 1])))
        return tuple(Matrix(field, res[idx]) for idx in range(dim))

    def _tensor(self, left: Complex, right: Complex) -> Complex:
        return koszul.tensor(left, right, self.action_rule, self.action_dim)

    def tensor_map(self, fmap: ChainMap, gmap: ChainMap) -> ChainMap:
        return koszul.tensor_map(fmap, gmap, self.action_rule, self.action_dim)

    def lambda_step(self, left: Complex, right: Complex) -> ChainMap:
        return koszul.lambda_step(
            left, right, self.__koszul_sign, self.action_rule, self.action_dim
        )

    def rho_step(self, left: Complex, right: Complex) -> ChainMap:
        return koszul.rho_step(left, right, self.action_rule, self.action_dim)

    def unitor_left(self, cpx: Complex) -> ChainMap:
        return koszul.unitor_left(
            cpx, self.__unit, self.action_rule, self.action_dim
        )

    def unitor_right(self, cpx: Complex) -> ChainMap:
        return koszul.unitor_right(
            cpx, self.__unit, self.action_rule, self.action_dim
        )

    def associator(self, first: Complex, second: Complex, third: Complex) -> ChainMap:
        return koszul.associator(
            first, second, third, self.action_rule, self.action_dim
        )

    def random_object(self, rng: np.random.Generator) -> Complex:
        return free_extension(
            random_complex(self.field, rng, self.__max_dim, self.__window),
            self.__regular,
        )


def _bimodule_sides(
    cpx: Complex, deg: int, algebra: AlgebraPresentation
) -> Tuple[np.ndarray, np.ndarray]:
    """The left and the right actions of `A` on one degree of a bimodule complex.

    Returns
    -------
    #1: `np.ndarray`
        The stacked left actions, shape `(d, n, n)`.

    #2: `np.ndarray`
        The stacked right actions, shape `(d, n, n)`.
    """
    field = algebra.field
    dim, size = algebra.dim, cpx.dim(deg)
    acts = np.stack([mat.data for mat in cpx.actions(deg)]).reshape(
        dim, dim, size, size
    )
    unit = algebra.unit
    lefts = field.reduce(np.tensordot(unit, acts, axes=([0], [1])))
    rights = field.reduce(np.tensordot(unit, acts, axes=([0], [0])))
    return lefts, rights


class BimoduleTensor(Complex):
    """The tensor product `C (x)_A D` of two complexes of `A`-bimodules.

    Each block `C_a (x)_A D_b` is the quotient of `C_a (x) D_b` by the relations
    `x b (x) y - x (x) b y`. The quotient keeps the projection from and the
    section to the tensor product over the field.
    """

    def __init__(
        self, left: Complex, right: Complex, algebra: AlgebraPresentation
    ) -> None:
        """Initialization.

        Arguments
        ---------
        left, right: `Complex`
            Complexes with the action of the enveloping algebra, `b_i (x) b_j`
            having the index `i * d + j`.

        algebra: `AlgebraPresentation`
            The algebra `A`.
        """
        field = algebra.field
        dim = algebra.dim
        inner = koszul.tensor(left, right)
        projections: Dict[int, Matrix] = dict()
        sections: Dict[int, Matrix] = dict()
        actions: Dict[int, Tuple[Matrix, ...]] = dict()
        for deg in inner.degrees:
            projs: List[Matrix] = list()
            secs: List[Matrix] = list()
            acts: List[List[Matrix]] = list()
            for a_deg, b_deg, _ in inner.blocks(deg):
                left_c, right_c = _bimodule_sides(left, a_deg, algebra)
                left_d, right_d = _bimodule_sides(right, b_deg, algebra)
                n_c, n_d = left.dim(a_deg), right.dim(b_deg)
                eye_c = Matrix.identity(field, n_c)
                eye_d = Matrix.identity(field, n_d)
                relations = Matrix.hstack(
                    field,
                    [
                        Matrix(field, right_c[idx]).kron(eye_d)
                        - eye_c.kron(Matrix(field, left_d[idx]))
                        for idx in range(dim)
                    ],
                    rows=n_c * n_d,
                )
                proj, sec = quotient_maps(relations)
                projs.append(proj)
                secs.append(sec)
                acts.append(
                    [
                        proj
                        @ Matrix(field, left_c[idx_i]).kron(
                            Matrix(field, right_d[idx_j])
                        )
                        @ sec
                        for idx_i in range(dim)
                        for idx_j in range(dim)
                    ]
                )
            projections[deg] = Matrix.block_diag(field, projs)
            sections[deg] = Matrix.block_diag(field, secs)
            actions[deg] = tuple(
                Matrix.block_diag(field, [blk[idx] for blk in acts])
                for idx in range(dim * dim)
            )
        diffs = {
            deg: projections[deg - 1] @ inner.d(deg) @ sections[deg]
            for deg in inner.degrees
            if deg - 1 in projections
        }
        super().__init__(
            field,
            {deg: mat.rows for deg, mat in projections.items()},
            diffs,
            actions,
            action_dim=dim * dim,
            check=False,
        )
        self.__inner = inner
        self.__projection = ChainMap(inner, self, projections, check=False)
        self.__section = ChainMap(self, inner, sections, check=False)

    @property
    def inner(self) -> TensorComplex:
        """Property: The tensor product over the field."""
        return self.__inner

    @property
    def projection(self) -> ChainMap:
        """Property: The quotient map `C (x) D -> C (x)_A D`."""
        return self.__projection

    @property
    def section(self) -> ChainMap:
        """Property: The chosen section `C (x)_A D -> C (x) D`, not a chain map."""
        return self.__section


class BimoduleInstance(SuspendedMonoidal):
    """Complexes of `A`-bimodules with the tensor product over `A`.

    Every structure map is the map of the complexes over the field, induced on
    the quotients: `pi o f o sigma` where `pi` is the projection of the target
    and `sigma` the section of the source.
    """

    def __init__(
        self,
        algebra: AlgebraPresentation,
        envelope: Optional[AlgebraPresentation] = None,
        koszul_sign: bool = True,
        max_dim: int = 1,
        window: int = 2,
        cache_size: int = 64,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        algebra: `AlgebraPresentation`
            The algebra `A`.

        envelope: `AlgebraPresentation | None`
            The enveloping algebra, if it is already built.

        koszul_sign: `bool`
            If not set, `lambda` drops its sign. Only used as a negative control.

        max_dim, window: `int`
            The size of the random objects. A random object is a random complex
            tensored with the enveloping algebra.

        cache_size: `int`
            The number of memoized tensor products.
        """
        super().__init__(algebra.field, cache_size)
        if envelope is None:
            envelope = enveloping_algebra(algebra)
        self.__algebra = algebra
        self.__envelope = envelope
        self.__koszul_sign = bool(koszul_sign)
        self.__max_dim = int(max_dim)
        self.__window = int(window)
        self.__unit = concentrated(
            algebra.field,
            algebra.dim,
            0,
            actions=regular_bimodule(algebra, envelope).actions,
        )
        self.__free = regular_module(envelope).actions

    @property
    def name(self) -> str:
        """Property: The name of the category."""
        res = "bimodule:{0}".format(self.__algebra.name)
        return res if self.__koszul_sign else res + ":no-koszul-sign"

    @property
    def koszul_sign(self) -> bool:
        """Property: Whether `lambda` carries the Koszul sign."""
        return self.__koszul_sign

    @property
    def algebra(self) -> AlgebraPresentation:
        """Property: The algebra `A`."""
        return self.__algebra

    @property
    def envelope(self) -> AlgebraPresentation:
        """Property: The enveloping algebra `A^e`."""
        return self.__envelope

    @property
    def unit(self) -> Complex:
        """Property: The regular bimodule `A` in degree `0`."""
        return self.__unit

    @property
    def action_dim(self) -> Optional[int]:
        """Property: The dimension of `A^e`."""
        return self.__envelope.dim

    def _tensor(self, left: Complex, right: Complex) -> Complex:
        return BimoduleTensor(left, right, self.__algebra)

    def tensor(self, left: Complex, right: Complex) -> BimoduleTensor:
        res = super().tensor(left, right)
        assert isinstance(res, BimoduleTensor)
        return res

    def __induced(
        self, source: BimoduleTensor, field_map: ChainMap, target: Complex
    ) -> ChainMap:
        """`pi o f o sigma`, where `target` is the quotient or its suspension."""
        res = compose(field_map, source.section)
        if isinstance(target, BimoduleTensor):
            return compose(target.projection, res)
        return res

    def tensor_map(self, fmap: ChainMap, gmap: ChainMap) -> ChainMap:
        source = self.tensor(fmap.source, gmap.source)
        target = self.tensor(fmap.target, gmap.target)
        return self.__induced(source, koszul.tensor_map(fmap, gmap), target)

    def lambda_step(self, left: Complex, right: Complex) -> ChainMap:
        source = self.tensor(left, shift(right, 1))
        target = self.tensor(left, right)
        res = compose(
            koszul.lambda_step(left, right, self.__koszul_sign), source.section
        )
        return compose(shift_map(target.projection, 1), res)

    def rho_step(self, left: Complex, right: Complex) -> ChainMap:
        source = self.tensor(shift(left, 1), right)
        target = self.tensor(left, right)
        res = compose(koszul.rho_step(left, right), source.section)
        return compose(shift_map(target.projection, 1), res)

    def unitor_left(self, cpx: Complex) -> ChainMap:
        """`l : A (x)_A C -> C`, `b (x) x -> b x`."""
        field = self.field
        source = self.tensor(self.__unit, cpx)
        comps = dict()
        for deg in cpx.degrees:
            lefts, _ = _bimodule_sides(cpx, deg, self.__algebra)
            comps[deg] = Matrix.hstack(
                field,
                [Matrix(field, mat) for mat in lefts],
                rows=cpx.dim(deg),
            )
        field_map = ChainMap(source.inner, cpx, comps, check=False)
        return self.__induced(source, field_map, cpx)

    def unitor_right(self, cpx: Complex) -> ChainMap:
        """`r : C (x)_A A -> C`, `x (x) b -> x b`."""
        field = self.field
        dim = self.__algebra.dim
        source = self.tensor(cpx, self.__unit)
        comps = dict()
        for deg in cpx.degrees:
            _, rights = _bimodule_sides(cpx, deg, self.__algebra)
            size = cpx.dim(deg)
            # column c * d + i holds the column c of R_i
            comps[deg] = Matrix(
                field, rights.transpose(1, 2, 0).reshape(size, size * dim)
            )
        field_map = ChainMap(source.inner, cpx, comps, check=False)
        return self.__induced(source, field_map, cpx)

    def associator(self, first: Complex, second: Complex, third: Complex) -> ChainMap:
        left_in = self.tensor(first, second)
        right_in = self.tensor(second, third)
        source = self.tensor(left_in, third)
        target = self.tensor(first, right_in)
        expand = koszul.tensor_map(left_in.section, identity_map(third))
        rebracket = koszul.associator(first, second, third)
        collapse = koszul.tensor_map(identity_map(first), right_in.projection)
        res = compose(rebracket, compose(expand, source.section))
        return compose(target.projection, compose(collapse, res))

    def random_object(self, rng: np.random.Generator) -> Complex:
        return free_extension(
            random_complex(self.field, rng, self.__max_dim, self.__window),
            self.__free,
        )
