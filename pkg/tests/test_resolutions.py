# -*- coding: UTF-8 -*-
"""
Test the resolutions
====================
@ Ext Ring - Tests

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The tests of the groups, the algebras and their modules, the bar and the periodic
resolutions, and the lifts of cocycles.
"""

import logging

import pytest

import numpy as np

from ext_ring.errors import InputError, StructureError, NotACocycleError
from ext_ring.linalg import PrimeField, RationalField, Matrix
from ext_ring.complexes import shift
from ext_ring.resolutions import (
    GroupTable,
    AlgebraPresentation,
    ModuleRep,
    cyclic_group,
    named_group,
    group_algebra,
    enveloping_algebra,
    trivial_module,
    regular_module,
    regular_bimodule,
    named_algebra,
    bar_resolution,
    two_sided_bar_resolution,
    periodic_resolution_cyclic,
    lift_cocycle,
)
from ext_ring.cohomology import ext_context, group_context


__all__ = ("TestGroups", "TestAlgebras", "TestResolutions")


class TestGroups:
    """Test the multiplication tables of groups."""

    @pytest.mark.parametrize(
        "name, order, abelian",
        (
            ("cyclic:1", 1, True),
            ("cyclic:4", 4, True),
            ("klein", 4, True),
            ("S3", 6, False),
            ("symmetric3", 6, False),
            ("Q8", 8, False),
            ("dihedral:4", 8, False),
        ),
    )
    def test_named_groups(self, name: str, order: int, abelian: bool) -> None:
        """Test the named groups."""
        group = named_group(name)
        assert group.order == order
        assert group.is_abelian() == abelian
        for idx in range(order):
            assert group.mul(idx, group.inv(idx)) == group.identity

    @pytest.mark.parametrize("name", ("cyclic:x", "cyclic:0", "klein:2", "A5", ""))
    def test_named_invalid(self, name: str) -> None:
        """Test that unknown names are refused."""
        with pytest.raises(InputError):
            named_group(name)

    @pytest.mark.parametrize(
        "table",
        (
            [[0, 1], [1, 1]],
            [[0, 1, 2], [1, 0, 2], [2, 2, 0]],
            [[0, 1], [1, 2]],
            [[0, 1, 2]],
            [],
        ),
    )
    def test_invalid_tables(self, table) -> None:
        """Test that the group axioms are checked."""
        with pytest.raises(StructureError):
            GroupTable(table)

    def test_identity(self) -> None:
        """Test the search and the check of the identity."""
        group = GroupTable([[1, 0], [0, 1]])
        assert group.identity == 1
        with pytest.raises(StructureError):
            GroupTable([[1, 0], [0, 1]], identity=0)
        assert GroupTable(cyclic_group(3).table) == cyclic_group(3)


class TestAlgebras:
    """Test the algebras and the modules."""

    def test_group_algebra(self) -> None:
        """Test that a group algebra is a bialgebra with the trivial module."""
        field = PrimeField(3)
        algebra = group_algebra(named_group("S3"), field)
        assert algebra.dim == 6
        assert algebra.is_bialgebra and algebra.is_augmented
        assert trivial_module(algebra).dim == 1
        assert regular_module(algebra).dim == 6

    def test_not_associative(self) -> None:
        """Test that a non-associative multiplication or a wrong unit is refused."""
        field = RationalField()
        consts = np.zeros((3, 3, 3), dtype=np.int64)
        for idx in range(3):
            consts[0, idx, idx] = consts[idx, 0, idx] = 1
        # x y = x and y y = x, so (x y) y = x but x (y y) = x x = 0.
        consts[1, 2, 1] = consts[2, 2, 1] = 1
        with pytest.raises(StructureError):
            AlgebraPresentation(field, consts, [1, 0, 0])
        consts[1, 2, 1] = consts[2, 2, 1] = 0
        AlgebraPresentation(field, consts, [1, 0, 0])
        with pytest.raises(StructureError):
            AlgebraPresentation(field, consts, [0, 1, 0])
        with pytest.raises(StructureError):
            AlgebraPresentation(field, np.zeros((2, 2)), [1, 0])

    def test_bad_counit(self) -> None:
        """Test that a counit which is not multiplicative is refused."""
        field = PrimeField(2)
        algebra = named_algebra("dualnumbers", field)
        with pytest.raises(StructureError):
            AlgebraPresentation(
                field, algebra.constants, algebra.unit, counit=[1, 1]
            )
        with pytest.raises(StructureError):
            AlgebraPresentation(
                field, algebra.constants, algebra.unit, coproduct=algebra.constants
            )

    def test_bad_module(self) -> None:
        """Test that a representation breaking the multiplication is refused."""
        field = PrimeField(2)
        algebra = named_algebra("dualnumbers", field)
        with pytest.raises(StructureError):
            ModuleRep(algebra, [[[1]], [[1]]])
        with pytest.raises(StructureError):
            ModuleRep(algebra, [[[1]]])
        ModuleRep(algebra, [[[1]], [[0]]])

    def test_enveloping(self) -> None:
        """Test the enveloping algebra and the regular bimodule."""
        field = PrimeField(3)
        algebra = named_algebra("uppertriangular", field)
        envelope = enveloping_algebra(algebra)
        assert envelope.dim == 9
        bimodule = regular_bimodule(algebra, envelope)
        assert bimodule.dim == 3
        # (b_i (x) b_j) . x = b_i x b_j
        vec = field.array([1, 2, 1])
        for idx_i in range(3):
            for idx_j in range(3):
                lhs = bimodule.act(idx_i * 3 + idx_j).apply(vec)
                basis_i = field.zeros(3)
                basis_i[idx_i] = 1
                basis_j = field.zeros(3)
                basis_j[idx_j] = 1
                rhs = algebra.multiply(algebra.multiply(basis_i, vec), basis_j)
                assert np.array_equal(lhs, rhs)

    @pytest.mark.parametrize(
        "name, dim",
        (
            ("field", 1),
            ("dualnumbers", 2),
            ("truncated:3", 3),
            ("uppertriangular", 3),
            ("group:klein", 4),
        ),
    )
    def test_named_algebras(self, name: str, dim: int) -> None:
        """Test the named algebras."""
        assert named_algebra(name, PrimeField(2)).dim == dim
        assert named_algebra("restricted", PrimeField(5)).dim == 5
        with pytest.raises(InputError):
            named_algebra("restricted", RationalField())
        with pytest.raises(InputError):
            named_algebra("truncated:x", PrimeField(2))


class TestResolutions:
    """Test the exactness of the resolutions and the lifts."""

    @pytest.mark.parametrize(
        "name, field",
        (
            ("cyclic:2", PrimeField(2)),
            ("cyclic:3", PrimeField(3)),
            ("cyclic:3", RationalField()),
            ("klein", PrimeField(2)),
        ),
    )
    def test_bar_exact(self, name: str, field) -> None:
        """Test that the bar resolution is exact and has the expected ranks."""
        log = logging.getLogger("ext_ring.test")
        algebra = group_algebra(named_group(name), field)
        res = bar_resolution(algebra, trivial_module(algebra), 3, verify=True)
        assert res.is_exact()
        assert res.ranks == tuple((algebra.dim - 1) ** deg for deg in range(4))
        log.info("Bar resolution: {0}".format(res))

    @pytest.mark.parametrize(
        "name, field",
        (
            ("dualnumbers", PrimeField(3)),
            ("uppertriangular", PrimeField(2)),
            ("truncated:3", RationalField()),
        ),
    )
    def test_two_sided_bar_exact(self, name: str, field) -> None:
        """Test that the two-sided bar resolution is exact."""
        algebra = named_algebra(name, field)
        res = two_sided_bar_resolution(algebra, 3, verify=True)
        assert res.is_exact()
        assert res.algebra.dim == algebra.dim**2

    @pytest.mark.parametrize("order", (2, 3, 4, 5))
    @pytest.mark.parametrize("field", (PrimeField(2), PrimeField(3)))
    def test_periodic(self, order: int, field) -> None:
        """Test that the periodic resolution gives the cohomology of the bar one."""
        algebra = group_algebra(cyclic_group(order), field)
        periodic = periodic_resolution_cyclic(order, field, 7, algebra=algebra)
        assert periodic.is_exact()
        assert periodic.ranks == (1,) * 8
        dims = ext_context(periodic, 6).dims
        expected = (1,) * 7 if order % field.p == 0 else (1,) + (0,) * 6
        assert dims == expected
        if order <= 4:
            assert group_context(algebra, max_degree=6).dims == dims

    def test_periodic_invalid(self) -> None:
        """Test the arguments of the periodic resolution."""
        with pytest.raises(ValueError):
            periodic_resolution_cyclic(1, PrimeField(2), 3)
        algebra = group_algebra(cyclic_group(3), PrimeField(2))
        with pytest.raises(ValueError):
            periodic_resolution_cyclic(2, PrimeField(2), 3, algebra=algebra)

    @pytest.mark.parametrize(
        "name, field", (("cyclic:3", PrimeField(3)), ("cyclic:2", PrimeField(2)))
    )
    def test_lift(self, name: str, field) -> None:
        """Test that a lift commutes with the differentials up to the stop."""
        algebra = group_algebra(named_group(name), field)
        res = bar_resolution(algebra, trivial_module(algebra), 4)
        context = ext_context(res, 3)
        for deg in range(1, 3):
            for vec in context.basis(deg):
                lift = lift_cocycle(res, vec, deg, stop=3)
                assert lift.target == shift(res.complex, deg)
                assert res.full_augmentation @ lift.component(deg) == (
                    res.full_cochain(deg, vec)
                )
                for idx in range(deg + 1, 4):
                    assert lift.component(idx - 1) @ res.complex.d(idx) == (
                        lift.target.d(idx) @ lift.component(idx)
                    )
                    for act in range(algebra.dim):
                        assert lift.component(idx) @ res.complex.act(idx, act) == (
                            lift.target.act(idx, act) @ lift.component(idx)
                        )

    def test_lift_not_cocycle(self) -> None:
        """Test that a cochain which is not a cocycle cannot be lifted."""
        field = PrimeField(3)
        algebra = group_algebra(cyclic_group(3), field)
        res = bar_resolution(algebra, trivial_module(algebra), 3)
        bad = None
        for idx in range(res.cochain_dim(1)):
            vec = field.zeros(res.cochain_dim(1))
            vec[idx] = 1
            if not field.is_zero(res.cochain_differential(2).apply(vec)):
                bad = vec
                break
        assert bad is not None
        with pytest.raises(NotACocycleError):
            lift_cocycle(res, bad, 1)
