# -*- coding: UTF-8 -*-
"""
Test the cohomology rings
=========================
@ Ext Ring - Tests

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The tests of the cohomology contexts, the Yoneda, composition and cup products,
and the identities checked on the multiplication tables.
"""

import logging

try:
    from typing import Generator
except ImportError:
    from collections.abc import Generator

import pytest

import numpy as np

import hypothesis
import hypothesis.strategies as strat

from ext_ring.errors import (
    ContextMismatchError,
    DegreeOverflowError,
    NotACocycleError,
)
from ext_ring.linalg import PrimeField, RationalField
from ext_ring.resolutions import (
    named_group,
    named_algebra,
    group_algebra,
    trivial_module,
    periodic_resolution_cyclic,
)
from ext_ring.cohomology import (
    CohomologyContext,
    classes_equal,
    group_context,
    hochschild_context,
    ext_context,
    ext_dims,
    composition_product,
    yoneda_product,
    cup_product,
    product,
    product_table,
    check_products,
    check_well_defined,
    check_cup_yoneda,
    check_graded_commutativity,
)

from .utils import rngs


__all__ = (
    "TestGroupCohomology",
    "TestHochschild",
    "TestProducts",
    "TestMatrix",
    "TestFullMatrix",
)


def _all_passed(checks) -> bool:
    log = logging.getLogger("ext_ring.test")
    for item in checks:
        if not item["passed"]:
            log.error("Failed check: {0}".format(item))
    return all(item["passed"] for item in checks)


class TestGroupCohomology:
    """Test the cohomology rings of small groups."""

    @pytest.fixture(scope="class")
    def z2_f2(self) -> Generator[CohomologyContext, None, None]:
        log = logging.getLogger("ext_ring.test")
        log.info("Initialize the context of Z/2 over GF(2).")
        context = group_context(named_group("cyclic:2"), PrimeField(2), max_degree=6)
        yield context
        del context

    @pytest.fixture(scope="class")
    def z3_f3(self) -> Generator[CohomologyContext, None, None]:
        log = logging.getLogger("ext_ring.test")
        log.info("Initialize the context of Z/3 over GF(3).")
        context = group_context(named_group("cyclic:3"), PrimeField(3), max_degree=6)
        yield context
        del context

    def test_dims(self, z2_f2: CohomologyContext, z3_f3: CohomologyContext) -> None:
        """Test the dimensions of the cohomology of cyclic groups."""
        assert z2_f2.dims == (1,) * 7
        assert z3_f3.dims == (1,) * 7
        coprime = group_context(named_group("cyclic:2"), PrimeField(3), max_degree=3)
        assert coprime.dims == (1, 0, 0, 0)

    def test_z2_polynomial(self, z2_f2: CohomologyContext) -> None:
        """Test that the powers of the degree-1 class span all degrees."""
        gen = z2_f2.basis_class(1, 0)
        power = gen
        for deg in range(2, 7):
            power = yoneda_product(power, gen)
            assert power.degree == deg
            assert not power.is_zero()
            assert classes_equal(power, z2_f2.basis_class(deg, 0))
            assert classes_equal(power, cup_product(z2_f2.basis_class(deg - 1, 0), gen))

    def test_z2_pairs(self, z2_f2: CohomologyContext) -> None:
        """Test that `x^i x^j = x^{i+j}` is nonzero for every `i + j <= 6`."""
        for deg_i in range(7):
            for deg_j in range(7 - deg_i):
                res = yoneda_product(
                    z2_f2.basis_class(deg_i, 0), z2_f2.basis_class(deg_j, 0)
                )
                assert not res.is_zero()
                assert classes_equal(res, z2_f2.basis_class(deg_i + deg_j, 0))

    def test_z3_exterior(self, z3_f3: CohomologyContext) -> None:
        """Test that the degree-1 class squares to zero but not the degree-2 one."""
        deg1 = z3_f3.basis_class(1, 0)
        deg2 = z3_f3.basis_class(2, 0)
        assert yoneda_product(deg1, deg1).is_zero()
        assert cup_product(deg1, deg1).is_zero()
        assert not yoneda_product(deg1, deg2).is_zero()
        assert not yoneda_product(deg2, deg2).is_zero()
        assert classes_equal(yoneda_product(deg1, deg2), yoneda_product(deg2, deg1))
        power = deg2
        for deg in (4, 6):
            power = yoneda_product(power, deg2)
            assert power.degree == deg
            assert not power.is_zero()
        assert not yoneda_product(deg1, yoneda_product(deg2, deg2)).is_zero()
        assert yoneda_product(deg1, yoneda_product(deg1, deg2)).is_zero()

    def test_checks(self, z2_f2: CohomologyContext, z3_f3: CohomologyContext) -> None:
        """Test that all product identities hold."""
        rng = np.random.default_rng(0)
        assert _all_passed(check_products(z2_f2, rng, samples=5))
        assert _all_passed(check_products(z3_f3, rng, samples=5))

    def test_well_defined(self, z3_f3: CohomologyContext) -> None:
        """Test that coboundaries added to both factors keep the product class."""
        checks = check_well_defined(z3_f3, np.random.default_rng(11), 100)
        assert len(checks) == 100
        assert _all_passed(checks)

    def test_table(self, z3_f3: CohomologyContext) -> None:
        """Test the layout of a multiplication table."""
        table = product_table(z3_f3, "cup")
        assert len(table) == sum(
            z3_f3.dim(deg_p) * z3_f3.dim(deg_q)
            for deg_p in range(7)
            for deg_q in range(7 - deg_p)
        )
        keys = [(item["p"], item["q"], item["i"], item["j"]) for item in table]
        assert keys == sorted(keys)
        assert all(item["method"] == "cup" for item in table)
        for item in table:
            assert len(item["coefficients"]) == z3_f3.dim(item["p"] + item["q"])
        yoneda = product_table(z3_f3, "yoneda")
        assert [item["coefficients"] for item in yoneda] == [
            item["coefficients"] for item in table
        ]
        relabeled = product_table(z3_f3, "custom", func=cup_product)
        assert all(item["method"] == "custom" for item in relabeled)

    def test_errors(self, z2_f2: CohomologyContext, z3_f3: CohomologyContext) -> None:
        """Test the errors of the products."""
        field = z3_f3.field
        with pytest.raises(DegreeOverflowError):
            yoneda_product(z3_f3.basis_class(3, 0), z3_f3.basis_class(4, 0))
        with pytest.raises(ContextMismatchError):
            yoneda_product(z2_f2.basis_class(1, 0), z3_f3.basis_class(1, 0))
        with pytest.raises(ValueError):
            product(z3_f3.one(), z3_f3.one(), "star")
        bad = field.zeros(z3_f3.cochain_dim(1))
        bad[0] = 1
        with pytest.raises(NotACocycleError):
            z3_f3.element(1, bad)
        with pytest.raises(ValueError):
            z3_f3.basis(7)

    def test_lift_memo(self, z3_f3: CohomologyContext) -> None:
        """Test that the lifts are memoized."""
        cls = z3_f3.basis_class(2, 0)
        assert z3_f3.lift(cls) is z3_f3.lift(cls)
        assert z3_f3.lift(cls).degree == 0

    def test_ext_dims(self) -> None:
        """Test `Ext` of the trivial module through the bar resolution."""
        algebra = group_algebra(named_group("klein"), PrimeField(2))
        assert ext_dims(algebra, trivial_module(algebra), 2) == [1, 2, 3]


class TestHochschild:
    """Test the Hochschild cohomology of small algebras."""

    @pytest.fixture(scope="class")
    def dual_f3(self) -> Generator[CohomologyContext, None, None]:
        log = logging.getLogger("ext_ring.test")
        log.info("Initialize the Hochschild context of the dual numbers.")
        context = hochschild_context(
            named_algebra("dualnumbers", PrimeField(3)), max_degree=4
        )
        yield context
        del context

    def test_dims(self, dual_f3: CohomologyContext) -> None:
        """Test the dimensions of the Hochschild cohomology of the dual numbers."""
        assert dual_f3.dims == (2, 1, 1, 1, 1)
        field = hochschild_context(named_algebra("field", PrimeField(5)), max_degree=2)
        assert field.dims == (1, 0, 0)

    def test_checks(self, dual_f3: CohomologyContext) -> None:
        """Test that all product identities hold."""
        assert _all_passed(check_products(dual_f3, np.random.default_rng(1), 5))

    def test_well_defined(self, dual_f3: CohomologyContext) -> None:
        """Test that coboundaries added to both factors keep the product class."""
        checks = check_well_defined(dual_f3, np.random.default_rng(13), 100)
        assert len(checks) == 100
        assert _all_passed(checks)

    def test_group_algebra(self) -> None:
        """Test the cup product of the group algebra of Z/2 in characteristic 2."""
        context = hochschild_context(
            named_algebra("group:cyclic:2", PrimeField(2)), max_degree=4
        )
        assert context.dims == (2, 2, 2, 2, 2)
        checks = check_cup_yoneda(context)
        assert len(checks) == sum(
            context.dim(deg_p) * context.dim(deg_q)
            for deg_p in range(5)
            for deg_q in range(5 - deg_p)
        )
        assert _all_passed(checks)

    def test_center(self, dual_f3: CohomologyContext) -> None:
        """Test that the degree 0 is the commutative algebra itself."""
        one = dual_f3.one()
        for left in dual_f3.basis_classes(0):
            for right in dual_f3.basis_classes(0):
                assert classes_equal(cup_product(left, right), cup_product(right, left))
            assert classes_equal(yoneda_product(one, left), left)


class TestProducts:
    """Property tests of the products on random representatives."""

    @pytest.fixture(scope="class")
    def context(self) -> Generator[CohomologyContext, None, None]:
        context = group_context(named_group("cyclic:3"), PrimeField(3), max_degree=3)
        yield context
        del context

    @hypothesis.settings(
        max_examples=20,
        deadline=None,
        suppress_health_check=[hypothesis.HealthCheck.function_scoped_fixture],
    )
    @hypothesis.given(strat.data())
    def test_bilinear(
        self, context: CohomologyContext, data: "strat.DataObject"
    ) -> None:
        """Test that the product is bilinear and does not depend on the cocycles."""
        rng = data.draw(rngs())
        deg_p = data.draw(strat.integers(0, 2))
        deg_q = data.draw(strat.integers(0, 3 - deg_p))
        first = context.random_class(deg_p, rng)
        other = context.random_class(deg_p, rng)
        second = context.random_class(deg_q, rng)
        lhs = yoneda_product(first + other, second)
        rhs = yoneda_product(first, second) + yoneda_product(other, second)
        assert classes_equal(lhs, rhs)
        scaled = yoneda_product(first.scale(2), second)
        assert classes_equal(scaled, yoneda_product(first, second).scale(2))

    @hypothesis.settings(
        max_examples=20,
        deadline=None,
        suppress_health_check=[hypothesis.HealthCheck.function_scoped_fixture],
    )
    @hypothesis.given(strat.data())
    def test_yoneda_sign(
        self, context: CohomologyContext, data: "strat.DataObject"
    ) -> None:
        """Test that the Yoneda product is the signed composition product."""
        rng = data.draw(rngs())
        deg_p = data.draw(strat.integers(0, 3))
        deg_q = data.draw(strat.integers(0, 3 - deg_p))
        first = context.random_class(deg_p, rng)
        second = context.random_class(deg_q, rng)
        comp = composition_product(first, second)
        if (deg_p * deg_q) % 2:
            comp = -comp
        assert classes_equal(yoneda_product(first, second), comp)
        assert classes_equal(cup_product(first, second), yoneda_product(first, second))


def _matrix_context(kind: str, name: str, field) -> CohomologyContext:
    """A context of the default test matrix, up to the degree 6."""
    if kind == "group":
        return group_context(named_group(name), field, max_degree=6)
    if kind == "periodic":
        return ext_context(periodic_resolution_cyclic(int(name), field, 7), 6)
    return hochschild_context(named_algebra(name, field), max_degree=6)


class TestMatrix:
    """Test the graded commutativity on the default test matrix."""

    @pytest.mark.parametrize(
        "kind, name, field",
        (
            ("group", "cyclic:2", PrimeField(2)),
            ("group", "cyclic:3", PrimeField(3)),
            ("group", "cyclic:2", PrimeField(5)),
            ("periodic", "4", PrimeField(2)),
            ("periodic", "5", PrimeField(5)),
            ("hochschild", "dualnumbers", PrimeField(3)),
            ("hochschild", "dualnumbers", RationalField()),
            ("hochschild", "group:cyclic:2", PrimeField(2)),
            ("hochschild", "truncated:3", PrimeField(3)),
            ("hochschild", "uppertriangular", PrimeField(2)),
            ("hochschild", "field", PrimeField(5)),
        ),
        ids=str,
    )
    def test_graded_commutativity(self, kind: str, name: str, field) -> None:
        """Test `f g = (-1)^{pq} g f` and cup = Yoneda up to the degree 6."""
        log = logging.getLogger("ext_ring.test")
        context = _matrix_context(kind, name, field)
        log.info(
            "Check {0} {1} with the dimensions {2}.".format(kind, name, context.dims)
        )
        checks = check_graded_commutativity(context)
        assert checks
        assert _all_passed(checks)
        assert _all_passed(check_cup_yoneda(context))
        if kind == "periodic":
            assert context.dims == (1,) * 7


@pytest.mark.full_matrix
class TestFullMatrix:
    """The heavy part of the test matrix, only run with `--full-matrix`."""

    def test_symmetric3(self) -> None:
        """Test the cohomology of S3 at the prime 3."""
        context = group_context(named_group("S3"), PrimeField(3), max_degree=3)
        assert context.dims == (1, 0, 0, 1)
        assert _all_passed(check_products(context, np.random.default_rng(0), 2))

    def test_klein(self) -> None:
        """Test the polynomial ring in two generators."""
        context = group_context(named_group("klein"), PrimeField(2), max_degree=4)
        assert context.dims == (1, 2, 3, 4, 5)
        assert _all_passed(check_products(context, np.random.default_rng(0), 2))

    def test_cyclic4(self) -> None:
        """Test the cohomology of Z/4 at the prime 2."""
        context = group_context(named_group("cyclic:4"), PrimeField(2), max_degree=6)
        assert context.dims == (1,) * 7
        deg1 = context.basis_class(1, 0)
        assert yoneda_product(deg1, deg1).is_zero()
        assert not yoneda_product(deg1, context.basis_class(2, 0)).is_zero()
