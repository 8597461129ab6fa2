# -*- coding: UTF-8 -*-
"""
Test the suspended monoidal categories
======================================
@ Ext Ring - Tests

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The axiom checker on the categories of complexes, of Hopf modules, and of
bimodules, and the graded endomorphism ring of the resolved unit.
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

from ext_ring.errors import DegreeOverflowError, StructureError
from ext_ring.linalg import PrimeField, RationalField
from ext_ring.resolutions import (
    named_group,
    named_algebra,
    periodic_resolution_cyclic,
)
from ext_ring.cohomology import (
    CohomologyContext,
    group_context,
    hochschild_context,
    ext_context,
    yoneda_product,
)
from ext_ring.monoidal import (
    ComplexInstance,
    HopfInstance,
    BimoduleInstance,
    GradedEndRing,
    ResolvedUnit,
    random_samples,
    check_axioms,
    graded_end_ring,
)

from .utils import fields, complexes, rngs


__all__ = ("TestAxioms", "TestGroupRing", "TestHochschildRing", "TestPlainRing")


def _failures(checks):
    return [item for item in checks if not item["passed"]]


class TestAxioms:
    """Test the axioms of the suspended monoidal categories."""

    @pytest.mark.parametrize(
        "field", (PrimeField(2), PrimeField(3), RationalField()), ids=str
    )
    def test_complexes(self, field) -> None:
        """Test the axioms on random complexes of vector spaces."""
        log = logging.getLogger("ext_ring.test")
        rng = np.random.default_rng(7)
        instance = ComplexInstance(field, max_dim=2, window=2)
        samples = random_samples(instance, 3, rng)
        checks = check_axioms(instance, samples, rng)
        log.info("Run {0} checks on {1}.".format(len(checks), instance.name))
        assert checks
        assert not _failures(checks)

    @hypothesis.settings(max_examples=25, deadline=None)
    @hypothesis.given(strat.data())
    def test_complexes_property(self, data: "strat.DataObject") -> None:
        """Test the axioms on the pairs of complexes drawn by `hypothesis`."""
        field = data.draw(fields())
        first = data.draw(complexes(field, max_dim=2, window=2))
        second = data.draw(complexes(field, max_dim=2, window=2))
        rng = data.draw(rngs())
        instance = ComplexInstance(field)
        checks = check_axioms(instance, [(first, second)], rng, (-1, 0, 2))
        assert not _failures(checks)

    def test_empty(self) -> None:
        """Test that no sample gives no check."""
        assert check_axioms(ComplexInstance(PrimeField(2)), []) == []

    def test_hopf(self) -> None:
        """Test the axioms on the modules over a group algebra."""
        rng = np.random.default_rng(3)
        instance = HopfInstance(named_algebra("group:cyclic:2", PrimeField(2)))
        samples = random_samples(instance, 2, rng)
        checks = check_axioms(instance, samples, rng, (-1, 0, 1))
        assert not _failures(checks)

    def test_hopf_needs_coproduct(self) -> None:
        """Test that a Hopf category needs a bialgebra."""
        with pytest.raises(StructureError):
            HopfInstance(named_algebra("dualnumbers", PrimeField(3)))

    def test_bimodule(self) -> None:
        """Test the axioms on the bimodules over the dual numbers."""
        rng = np.random.default_rng(5)
        instance = BimoduleInstance(named_algebra("dualnumbers", PrimeField(3)))
        checks = check_axioms(instance, random_samples(instance, 1, rng), rng, (-1, 1))
        assert not _failures(checks)

    def test_negative_control(self) -> None:
        """Test that dropping the Koszul sign of `lambda` is detected."""
        log = logging.getLogger("ext_ring.test")
        field = PrimeField(3)
        good = ComplexInstance(field)
        bad = ComplexInstance(field, koszul_sign=False)
        samples = [(good.unit, good.unit)]
        assert not _failures(check_axioms(good, samples, powers=(-1, 0, 1)))
        failed = _failures(check_axioms(bad, samples, powers=(-1, 0, 1)))
        log.info("The negative control fails {0} checks.".format(len(failed)))
        names = set(item["name"] for item in failed)
        assert "anticommuting-square" in names
        assert "suspension-relation" in names
        assert all(item["witness"] for item in failed)

    def test_negative_control_star(self) -> None:
        """Test that dropping the Koszul sign of a Hopf category breaks the star."""
        log = logging.getLogger("ext_ring.test")
        field = PrimeField(3)
        context = ext_context(periodic_resolution_cyclic(3, field, 4), 3)
        algebra = context.resolution.algebra
        bad = HopfInstance(algebra, koszul_sign=False)
        assert HopfInstance(algebra).koszul_sign
        assert not bad.koszul_sign
        assert bad.name.endswith(":no-koszul-sign")
        dual = BimoduleInstance(named_algebra("dualnumbers", field), koszul_sign=False)
        assert not dual.koszul_sign
        assert dual.name.endswith(":no-koszul-sign")
        good_ring = graded_end_ring(context, backend="chain")
        assert not _failures(good_ring.check_identities())
        bad_ring = graded_end_ring(context, bad, backend="chain")
        failed = _failures(bad_ring.check_identities())
        log.info("The negative control fails {0} identities.".format(len(failed)))
        assert set(item["name"] for item in failed) == {"star-dot-sign"}
        assert (1, 1) in set((item["p"], item["q"]) for item in failed)


class TestGroupRing:
    """Test the star product on the cohomology of a group."""

    @pytest.fixture(scope="class")
    def context(self) -> Generator[CohomologyContext, None, None]:
        log = logging.getLogger("ext_ring.test")
        log.info("Initialize the context of Z/2 over GF(2).")
        context = group_context(named_group("cyclic:2"), PrimeField(2), max_degree=4)
        yield context
        del context

    @pytest.fixture(scope="class")
    def ring(self, context: CohomologyContext) -> Generator[GradedEndRing, None, None]:
        ring = graded_end_ring(context)
        yield ring
        del ring

    def test_ring(self, context: CohomologyContext, ring: GradedEndRing) -> None:
        """Test the basic data of the ring."""
        assert isinstance(ring.unit.instance, HopfInstance)
        assert ring.backend == "cocycle"
        assert ring.max_degree == 4
        assert ring.dims() == list(context.dims)
        assert ring.to_class(ring.one()) == context.one()

    def test_star(self, context: CohomologyContext, ring: GradedEndRing) -> None:
        """Test that the star and the Yoneda products agree in characteristic 2."""
        gen = context.basis_class(1, 0)
        assert ring.star_class(gen, gen) == yoneda_product(gen, gen)
        assert ring.dot_class(gen, gen) == yoneda_product(gen, gen)
        square = ring.star_class(gen, gen)
        assert not square.is_zero()
        assert ring.star_class(square, gen) == context.basis_class(3, 0)

    def test_identities(self, ring: GradedEndRing) -> None:
        """Test the identities of the star and the composition products."""
        checks = ring.check_identities()
        assert checks
        assert not _failures(checks)
        names = set(item["name"] for item in checks)
        assert names == {"star-dot", "star-dot-sign", "dot-commutativity"}

    def test_chain_backend(self, context: CohomologyContext) -> None:
        """Test the identities with the chain homotopy equality."""
        ring = graded_end_ring(context, backend="chain")
        assert ring.backend == "chain"
        checks = ring.check_identities()
        assert checks
        assert not _failures(checks)

    def test_table(self, context: CohomologyContext, ring: GradedEndRing) -> None:
        """Test that the star table has one entry per pair of basis classes."""
        table = ring.product_table("star")
        assert len(table) == sum(
            context.dim(deg_p) * context.dim(deg_q)
            for deg_p in range(5)
            for deg_q in range(5 - deg_p)
        )
        assert all(item["method"] == "star" for item in table)

    def test_overflow(self, context: CohomologyContext, ring: GradedEndRing) -> None:
        """Test that a product above the degree cap is refused."""
        with pytest.raises(DegreeOverflowError):
            ring.star_class(context.basis_class(2, 0), context.basis_class(3, 0))
        with pytest.raises(DegreeOverflowError):
            ring.dot_class(context.basis_class(4, 0), context.basis_class(1, 0))


class TestHochschildRing:
    """Test the star product on the Hochschild cohomology."""

    @pytest.fixture(scope="class")
    def ring(self) -> Generator[GradedEndRing, None, None]:
        log = logging.getLogger("ext_ring.test")
        log.info("Initialize the ring of the dual numbers.")
        context = hochschild_context(
            named_algebra("dualnumbers", PrimeField(3)), max_degree=4
        )
        ring = graded_end_ring(context)
        yield ring
        del ring

    def test_instance(self, ring: GradedEndRing) -> None:
        """Test that the unit is the diagonal bimodule."""
        assert isinstance(ring.unit.instance, BimoduleInstance)
        assert ring.dims() == [2, 1, 1, 1, 1]

    def test_identities(self, ring: GradedEndRing) -> None:
        """Test that the star product is the opposite composition."""
        assert not _failures(ring.check_identities())

    def test_overflow(self, ring: GradedEndRing) -> None:
        """Test that a product above the degree cap is refused."""
        context = ring.unit.context
        assert context is not None
        with pytest.raises(DegreeOverflowError):
            ring.star_class(context.basis_class(2, 0), context.basis_class(3, 0))


class TestPlainRing:
    """Test the ring of a category whose unit needs no resolution."""

    def test_complexes(self) -> None:
        """Test the ring of the unit complex."""
        ring = graded_end_ring(instance=ComplexInstance(PrimeField(3)))
        assert ring.backend == "chain"
        assert ring.max_degree == 0
        assert ring.dims() == [1]
        one = ring.one()
        assert ring.equal(ring.star(one, one), one)
        assert ring.equal(ring.dot(one, one), one)
        assert not ring.equal(ring.scale(one, 2), one)

    def test_errors(self) -> None:
        """Test the invalid constructions."""
        hopf = HopfInstance(named_algebra("group:cyclic:2", PrimeField(2)))
        with pytest.raises(ValueError):
            graded_end_ring()
        with pytest.raises(StructureError):
            graded_end_ring(instance=hopf)
        with pytest.raises(StructureError):
            ResolvedUnit(hopf)
        unit = ResolvedUnit(ComplexInstance(PrimeField(2)))
        with pytest.raises(ValueError):
            GradedEndRing(unit, backend="matrix")  # type: ignore[arg-type]
        with pytest.raises(StructureError):
            GradedEndRing(unit).product_table("star")
