# -*- coding: UTF-8 -*-
"""
Ring
====
@ Ext Ring: monoidal

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The graded endomorphism ring of the unit of a suspended monoidal category.

The unit `e` is replaced by a projective resolution `P -> e`, truncated at the
degree `N`. A homogeneous element of degree `p` is a chain map `f : P -> T^p P`
up to homotopy. There are two products:

- the composition `f . g = T^q f o g`,
- the star product, built from the monoidal structure,

      f * g = T^{p+q} l_P o T^p lambda_q o rho_p o (f (x) g) o r_P^{-1},

  where `l_P = l o (eps (x) 1)` and `r_P = r o (1 (x) eps)`.

Read along the other side of the anticommuting square, the same product is

      f * g = (-1)^{pq} T^{p+q} r_P o T^q rho_p o lambda_q o (f (x) g) o r_P^{-1}.

The first form agrees with `g . f` and the second one with `(-1)^{pq} f . g`. Both
identities are checked on the class basis by `GradedEndRing.check_identities()`.
Only the second form meets the Koszul sign of `lambda`, since `l_P` sees the
degree 0 of its left factor only.
"""

from typing import Any, Optional

try:
    from typing import List
except ImportError:
    from builtins import list as List

from typing_extensions import Literal

from ..errors import (
    ChainMapError,
    ContextMismatchError,
    DegreeOverflowError,
    StructureError,
)
from ..utilities import sign, get_logger
from ..typehints import CheckResult, ProductMethod, ProductEntry
from ..complexes import (
    Complex,
    ChainMap,
    shift,
    truncate,
    compose,
    identity_map,
    inverse_map,
    shift_map,
    restrict_map,
    chain_homotopic,
    hom_classes,
)
from ..resolutions import extend_chain_map
from ..resolutions.lifting import cached_solver
from ..cohomology import CohomologyContext, CohomologyClass, product_table
from .instance import SuspendedMonoidal, ComplexInstance, HopfInstance
from .instance import BimoduleInstance


__all__ = (
    "EqualityBackend",
    "ResolvedUnit",
    "GradedEndElement",
    "GradedEndRing",
    "instance_for",
    "graded_end_ring",
)

EqualityBackend = Literal["cocycle", "chain"]
"""How two elements are compared: by the classes of their cocycles, or by
searching a chain homotopy."""

logger = get_logger("monoidal")


class ResolvedUnit:
    """The unit of a category together with its truncated projective resolution."""

    def __init__(
        self,
        instance: SuspendedMonoidal,
        context: Optional[CohomologyContext] = None,
    ) -> None:
        """Initialization.

        Arguments
        ---------
        instance: `SuspendedMonoidal`
            The category.

        context: `CohomologyContext | None`
            The context holding the resolution `P -> e`. The resolution needs to
            resolve the unit of `instance`. If not given, the unit is taken as its
            own resolution, which is only valid for complexes of vector spaces.
        """
        self.__instance = instance
        self.__context = context
        unit = instance.unit
        if context is None:
            if instance.action_dim is not None:
                raise StructureError(
                    "monoidal: The unit of {0} needs a resolution.".format(
                        instance.name
                    )
                )
            cpx = unit
            self.__max_degree = 0
            aug = identity_map(cpx)
        else:
            res = context.resolution
            if res.target != unit:
                raise ContextMismatchError(
                    "monoidal: The resolution of {0} does not resolve the unit of "
                    "{1}.".format(context.name, instance.name)
                )
            self.__max_degree = context.max_degree
            cpx = truncate(res.complex, hi=self.__max_degree)
            aug = ChainMap(cpx, unit, {0: res.full_augmentation}, check=False)
        self.__complex = cpx
        self.__augmentation = aug
        self.__tensor = instance.tensor(cpx, cpx)
        self.__left = compose(
            instance.unitor_left(cpx), instance.tensor_map(aug, identity_map(cpx))
        )
        self.__right = compose(
            instance.unitor_right(cpx), instance.tensor_map(identity_map(cpx), aug)
        )
        if context is None:
            self.__section = inverse_map(self.__right)
        else:
            self.__section = self.__build_section(context)

    def __build_section(self, context: CohomologyContext) -> ChainMap:
        """A chain map `s : P -> P (x) P` with `r_P o s` homotopic to `1`.

        `s` lifts the identity of the resolved module along the augmentation
        `eps o r_P` of `P (x) P`.
        """
        res = context.resolution
        cache = context.solver_cache
        mat = res.full_augmentation @ self.__right.component(0)
        start = cached_solver(mat, cache, 0).solve_many(res.augmentation)
        if start is None:
            raise ChainMapError(
                "monoidal: The augmentation of P (x) P is not surjective."
            )
        comps = extend_chain_map(
            res, self.__tensor, 0, start, self.__max_degree, cache=cache
        )
        logger.debug(
            "Built the section of r_P up to the degree %d.", self.__max_degree
        )
        return ChainMap(self.__complex, self.__tensor, comps, check=False)

    @property
    def instance(self) -> SuspendedMonoidal:
        """Property: The category."""
        return self.__instance

    @property
    def context(self) -> Optional[CohomologyContext]:
        """Property: The context of the resolution, if any."""
        return self.__context

    @property
    def complex(self) -> Complex:
        """Property: The truncated resolution `P`."""
        return self.__complex

    @property
    def max_degree(self) -> int:
        """Property: The truncation degree `N`."""
        return self.__max_degree

    @property
    def augmentation(self) -> ChainMap:
        """Property: `eps : P -> e`."""
        return self.__augmentation

    @property
    def left(self) -> ChainMap:
        """Property: `l_P : P (x) P -> P`."""
        return self.__left

    @property
    def right(self) -> ChainMap:
        """Property: `r_P : P (x) P -> P`."""
        return self.__right

    @property
    def section(self) -> ChainMap:
        """Property: The homotopy inverse `r_P^{-1} : P -> P (x) P`."""
        return self.__section


class GradedEndElement:
    """A homogeneous element: a chain map `P -> T^p P` of the degree `p`."""

    def __init__(self, unit: ResolvedUnit, degree: int, rep: ChainMap) -> None:
        """Initialization.

        Arguments
        ---------
        unit: `ResolvedUnit`
            The resolved unit.

        degree: `int`
            The degree `p`.

        rep: `ChainMap`
            A degree-0 chain map `P -> T^p P`.
        """
        degree = int(degree)
        target = shift(unit.complex, degree)
        if rep.source != unit.complex or rep.target != target or rep.degree != 0:
            raise ChainMapError(
                "monoidal: The representative needs to be a map P -> T^{0} P.".format(
                    degree
                )
            )
        self.__unit = unit
        self.__degree = degree
        self.__rep = rep

    @property
    def unit(self) -> ResolvedUnit:
        """Property: The resolved unit."""
        return self.__unit

    @property
    def degree(self) -> int:
        """Property: The degree `p`."""
        return self.__degree

    @property
    def rep(self) -> ChainMap:
        """Property: The representing chain map."""
        return self.__rep

    def __repr__(self) -> str:
        return "<GradedEndElement degree={0} of {1}>".format(
            self.__degree, self.__unit.instance.name
        )


class GradedEndRing:
    """The graded endomorphism ring of the resolved unit, up to the degree `N`."""

    def __init__(
        self, unit: ResolvedUnit, backend: EqualityBackend = "cocycle"
    ) -> None:
        """Initialization.

        Arguments
        ---------
        unit: `ResolvedUnit`
            The resolved unit.

        backend: `"cocycle" | "chain"`
            How elements are compared. `"cocycle"` compares the cohomology classes
            and needs a context. `"chain"` searches a homotopy.
        """
        if backend not in ("cocycle", "chain"):
            raise ValueError(
                "monoidal: Unknown backend {0}, use 'cocycle' or 'chain'.".format(
                    backend
                )
            )
        if backend == "cocycle" and unit.context is None:
            backend = "chain"
        self.__unit = unit
        self.__backend: EqualityBackend = backend

    @property
    def unit(self) -> ResolvedUnit:
        """Property: The resolved unit."""
        return self.__unit

    @property
    def backend(self) -> EqualityBackend:
        """Property: The way elements are compared."""
        return self.__backend

    @property
    def max_degree(self) -> int:
        """Property: The truncation degree `N`."""
        return self.__unit.max_degree

    def __context(self) -> CohomologyContext:
        context = self.__unit.context
        if context is None:
            raise StructureError("monoidal: The ring has no cohomology context.")
        return context

    def one(self) -> GradedEndElement:
        """The identity of `P`."""
        return GradedEndElement(self.__unit, 0, identity_map(self.__unit.complex))

    def element(self, cls: CohomologyClass) -> GradedEndElement:
        """The element lifting a cohomology class."""
        context = self.__context()
        context.check_same(cls.context)
        cpx = self.__unit.complex
        lift = context.lift(cls)
        comps = {deg: lift.component(deg) for deg in cpx.degrees}
        return GradedEndElement(
            self.__unit,
            cls.degree,
            ChainMap(cpx, shift(cpx, cls.degree), comps, check=False),
        )

    def to_class(self, elem: GradedEndElement) -> CohomologyClass:
        """The cohomology class `eps o f_p` of an element."""
        context = self.__context()
        res = context.resolution
        deg = elem.degree
        full = res.full_augmentation @ elem.rep.component(deg)
        vec = res.cochain_vector(res.generator_values(deg, full))
        return context.element(deg, vec, check=False)

    def __check_degree(self, total: int) -> None:
        if total > self.max_degree:
            raise DegreeOverflowError(
                "monoidal: The product lands in degree {0} above N = {1}, "
                "increase N.".format(total, self.max_degree)
            )

    def dot(
        self, first: GradedEndElement, second: GradedEndElement
    ) -> GradedEndElement:
        """The composition `T^q f o g`."""
        deg_p, deg_q = first.degree, second.degree
        self.__check_degree(deg_p + deg_q)
        return GradedEndElement(
            self.__unit,
            deg_p + deg_q,
            compose(shift_map(first.rep, deg_q), second.rep),
        )

    def star(
        self, first: GradedEndElement, second: GradedEndElement
    ) -> GradedEndElement:
        """The star product built from the monoidal structure."""
        unit = self.__unit
        instance = unit.instance
        cpx = unit.complex
        deg_p, deg_q = first.degree, second.degree
        total = deg_p + deg_q
        self.__check_degree(total)
        both = instance.tensor_map(first.rep, second.rep)
        rho = instance.rho_iso(cpx, shift(cpx, deg_q), deg_p)
        lam = instance.shift_map(instance.lambda_iso(cpx, cpx, deg_q), deg_p)
        res = compose(both, unit.section)
        res = compose(lam, compose(rho, res))
        res = compose(instance.shift_map(unit.left, total), res)
        return GradedEndElement(unit, total, res)

    def star_right(
        self, first: GradedEndElement, second: GradedEndElement
    ) -> GradedEndElement:
        """The star product through `lambda_q` first and `r_P`.

        `lambda_q` acts on `T^p P (x) T^q P` here, so its sign is visible. The result
        is homotopic to `star()` when the square of `lambda` and `rho`
        anticommutes.
        """
        unit = self.__unit
        instance = unit.instance
        cpx = unit.complex
        deg_p, deg_q = first.degree, second.degree
        total = deg_p + deg_q
        self.__check_degree(total)
        both = instance.tensor_map(first.rep, second.rep)
        lam = instance.lambda_iso(shift(cpx, deg_p), cpx, deg_q)
        rho = instance.shift_map(instance.rho_iso(cpx, cpx, deg_p), deg_q)
        res = compose(both, unit.section)
        res = compose(rho, compose(lam, res))
        res = compose(instance.shift_map(unit.right, total), res)
        return GradedEndElement(unit, total, res.scale(sign(deg_p * deg_q)))

    def equal(self, first: GradedEndElement, second: GradedEndElement) -> bool:
        """Whether two elements are equal up to homotopy."""
        if first.degree != second.degree:
            return False
        if self.__backend == "cocycle":
            return self.to_class(first) == self.to_class(second)
        unit = self.__unit
        if first.degree > 0 or unit.context is None:
            return chain_homotopic(first.rep, second.rep)
        # A homotopy of maps P -> P ends with P_N -> P_{N+1}, cut by the truncation.
        if unit.max_degree == 0:
            return self.to_class(first) == self.to_class(second)
        top = unit.max_degree - 1
        return chain_homotopic(
            restrict_map(first.rep, top), restrict_map(second.rep, top)
        )

    def scale(self, elem: GradedEndElement, coeff: Any) -> GradedEndElement:
        """Multiply an element by a scalar."""
        return GradedEndElement(self.__unit, elem.degree, elem.rep.scale(coeff))

    def star_class(
        self, first: CohomologyClass, second: CohomologyClass
    ) -> CohomologyClass:
        """The star product of two cohomology classes."""
        return self.to_class(self.star(self.element(first), self.element(second)))

    def dot_class(
        self, first: CohomologyClass, second: CohomologyClass
    ) -> CohomologyClass:
        """The composition of two cohomology classes, on lifted representatives."""
        return self.to_class(self.dot(self.element(first), self.element(second)))

    def dims(self) -> List[int]:
        """The dimensions of the degrees `0 .. N`."""
        context = self.__unit.context
        if context is None:
            cpx = self.__unit.complex
            return [hom_classes(cpx, cpx).dim]
        return list(context.dims)

    def product_table(self, method: ProductMethod = "star") -> List[ProductEntry]:
        """The multiplication table of the class basis, see `product_table()`.

        The star and the composition products are evaluated on the chain level.
        The other methods use the cochain formulas of the context.
        """
        context = self.__context()
        if method == "star":
            return product_table(context, method, self.star_class)
        if method == "composition":
            return product_table(context, method, self.dot_class)
        return product_table(context, method)

    def check_identities(self) -> List[CheckResult]:
        """Compare the star product with the composition on the class basis.

        For basis elements `f` of degree `p` and `g` of degree `q`, `p + q <= N`:

        - `star-dot`: `f * g = g . f`,
        - `star-dot-sign`: `f * g = (-1)^{pq} f . g`, with `f * g` from
          `star_right()`,
        - `dot-commutativity`: `f . g = (-1)^{pq} g . f`.
        """
        context = self.__context()
        top = self.max_degree
        res: List[CheckResult] = list()
        for deg_p in range(top + 1):
            for deg_q in range(top - deg_p + 1):
                for idx_i, left_cls in enumerate(context.basis_classes(deg_p)):
                    for idx_j, right_cls in enumerate(context.basis_classes(deg_q)):
                        left = self.element(left_cls)
                        right = self.element(right_cls)
                        star = self.star(left, right)
                        star_right = self.star_right(left, right)
                        forward = self.dot(left, right)
                        backward = self.dot(right, left)
                        coeff = sign(deg_p * deg_q)
                        witness = "p={0} i={1} q={2} j={3}".format(
                            deg_p, idx_i, deg_q, idx_j
                        )
                        for name, passed in (
                            ("star-dot", self.equal(star, backward)),
                            (
                                "star-dot-sign",
                                self.equal(star_right, self.scale(forward, coeff)),
                            ),
                            (
                                "dot-commutativity",
                                self.equal(forward, self.scale(backward, coeff)),
                            ),
                        ):
                            if not passed:
                                logger.warning(
                                    "The identity %s fails at %s.", name, witness
                                )
                            res.append(
                                CheckResult(
                                    name=name,
                                    passed=passed,
                                    sample=len(res),
                                    p=deg_p,
                                    q=deg_q,
                                    witness=None if passed else witness,
                                )
                            )
        return res

    def __repr__(self) -> str:
        return "<GradedEndRing of {0} N={1} backend={2}>".format(
            self.__unit.instance.name, self.max_degree, self.__backend
        )


def instance_for(context: CohomologyContext) -> SuspendedMonoidal:
    """The category whose unit is resolved by the context."""
    res = context.resolution
    if context.kind == "hochschild":
        assert context.base is not None
        return BimoduleInstance(context.base, envelope=res.algebra)
    if res.algebra.is_bialgebra and res.module.dim == 1:
        return HopfInstance(res.algebra)
    raise StructureError(
        "monoidal: The context {0} does not resolve the unit of a known "
        "category.".format(context.name)
    )


def graded_end_ring(
    context: Optional[CohomologyContext] = None,
    instance: Optional[SuspendedMonoidal] = None,
    backend: EqualityBackend = "cocycle",
) -> GradedEndRing:
    """Build the graded endomorphism ring.

    Arguments
    ---------
    context: `CohomologyContext | None`
        The context resolving the unit. Without a context, the instance needs to be
        a category of complexes of vector spaces.

    instance: `SuspendedMonoidal | None`
        The category. If not given, it is derived from the context.

    backend: `"cocycle" | "chain"`
        How elements are compared.
    """
    if instance is None:
        if context is None:
            raise ValueError("monoidal: Need a context or an instance.")
        instance = instance_for(context)
    if context is None and not isinstance(instance, ComplexInstance):
        raise StructureError(
            "monoidal: The unit of {0} needs a context.".format(instance.name)
        )
    return GradedEndRing(ResolvedUnit(instance, context), backend)
