# -*- coding: UTF-8 -*-
"""
Test the complexes
==================
@ Ext Ring - Tests

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The tests of the bounded complexes, the chain maps, the homotopies, and the Koszul
tensor product with its suspension isomorphisms.
"""

import logging

import pytest

import numpy as np

import hypothesis
import hypothesis.strategies as strat

from ext_ring.errors import ComplexError, ChainMapError
from ext_ring.linalg import PrimeField, RationalField, Matrix
from ext_ring.complexes import (
    Complex,
    ChainMap,
    concentrated,
    unit_complex,
    shift,
    truncate,
    homology_classes,
    compose,
    identity_map,
    zero_map,
    shift_map,
    inverse_map,
    chain_homotopic,
    find_homotopy,
    hom_classes,
    random_chain_map,
    tensor,
    tensor_map,
    lambda_iso,
    rho_iso,
    unitor_left,
    unitor_right,
    associator,
)
from ext_ring.utilities import sign

from .utils import fields, complexes, rngs


__all__ = ("TestComplex", "TestChainMap", "TestTensor")


def homology_dims(cpx: Complex) -> dict:
    """The nonzero homology dimensions of a complex."""
    res = dict()
    for deg in range(cpx.lo - 1, cpx.hi + 2):
        dim = homology_classes(cpx, deg)[0]
        if dim:
            res[deg] = dim
    return res


def assert_chain_map(fmap: ChainMap) -> None:
    """Rebuild a map with all checks, which raises if it is not a chain map."""
    ChainMap(fmap.source, fmap.target, fmap.components(), fmap.degree)


class TestComplex:
    """Test the construction, the suspension and the homology of complexes."""

    def test_validation(self) -> None:
        """Test that `d o d != 0` and wrong shapes are refused."""
        field = PrimeField(2)
        one = Matrix(field, [[1]])
        with pytest.raises(ComplexError):
            Complex(field, {0: 1, 1: 1, 2: 1}, {1: one, 2: one})
        with pytest.raises(ComplexError):
            Complex(field, {0: 1, 1: 2}, {1: one})
        with pytest.raises(ComplexError):
            Complex(field, {0: -1})
        cpx = Complex(field, {-1: 0, 0: 2, 1: 0, 5: 0})
        assert (cpx.lo, cpx.hi) == (0, 0)
        zero = Complex(field, dict())
        assert zero.is_zero and zero.total_dim == 0

    def test_shift(self) -> None:
        """Test the degrees and the sign of the suspension."""
        field = PrimeField(3)
        cpx = Complex(field, {0: 1, 1: 1}, {1: Matrix(field, [[1]])})
        once = shift(cpx, 1)
        assert once.dims == {1: 1, 2: 1}
        assert once.d(2) == -cpx.d(1)
        assert shift(cpx, 0) is cpx
        assert shift(shift(cpx, 2), -3) == shift(cpx, -1)

    @hypothesis.settings(max_examples=30, deadline=None)
    @hypothesis.given(strat.data())
    def test_shift_homology(self, data: "strat.DataObject") -> None:
        """Test `H_n(T^p C) = H_(n-p)(C)` and the additivity of the powers."""
        field = data.draw(fields())
        cpx = data.draw(complexes(field))
        power = data.draw(strat.integers(-3, 3))
        other = data.draw(strat.integers(-3, 3))
        ref = homology_dims(cpx)
        assert homology_dims(shift(cpx, power)) == {
            deg + power: val for deg, val in ref.items()
        }
        assert shift(shift(cpx, power), other) == shift(cpx, power + other)

    def test_truncate(self) -> None:
        """Test the brutal truncation."""
        field = PrimeField(2)
        one = Matrix(field, [[1]])
        cpx = Complex(field, {0: 1, 1: 1, 2: 1}, {1: one, 2: Matrix(field, [[0]])})
        low = truncate(cpx, hi=1)
        assert low.dims == {0: 1, 1: 1}
        high = truncate(cpx, lo=1)
        assert high.dims == {1: 1, 2: 1}
        assert homology_dims(high) == {1: 1, 2: 1}


class TestChainMap:
    """Test the chain maps and the homotopies."""

    def test_chain_map_check(self) -> None:
        """Test that a map not commuting with the differentials is refused."""
        field = PrimeField(2)
        cpx = Complex(field, {0: 1, 1: 1}, {1: Matrix(field, [[1]])})
        with pytest.raises(ChainMapError):
            ChainMap(cpx, cpx, {0: Matrix(field, [[1]])})
        with pytest.raises(ChainMapError):
            ChainMap(cpx, cpx, {0: Matrix(field, [[1, 0]])})
        ChainMap(cpx, cpx, {0: Matrix(field, [[1]]), 1: Matrix(field, [[1]])})

    def test_compose_and_inverse(self) -> None:
        """Test the composition and the inverse of an isomorphism."""
        field = RationalField()
        cpx = Complex(field, {0: 2})
        fmap = ChainMap(cpx, cpx, {0: Matrix(field, [[1, 2], [0, 1]])})
        inv = inverse_map(fmap)
        assert compose(inv, fmap) == identity_map(cpx)
        assert compose(fmap, inv) == identity_map(cpx)
        assert (fmap - fmap) == zero_map(cpx, cpx)
        assert fmap.scale(2) == fmap + fmap
        assert fmap.first_difference(identity_map(cpx)) == 0
        assert identity_map(cpx).first_difference(identity_map(cpx)) is None
        with pytest.raises(ChainMapError):
            compose(fmap, zero_map(cpx, shift(cpx, 1)))

    @hypothesis.settings(max_examples=25, deadline=None)
    @hypothesis.given(strat.data())
    def test_homotopy(self, data: "strat.DataObject") -> None:
        """Test that `f + d s + s d` is homotopic to `f`."""
        field = data.draw(fields())
        source = data.draw(complexes(field))
        target = data.draw(complexes(field))
        rng = data.draw(rngs())
        fmap = random_chain_map(source, target, rng)
        hmt = {
            deg: Matrix(
                field, field.random(rng, (target.dim(deg + 1), source.dim(deg)))
            )
            for deg in range(source.lo - 1, source.hi + 1)
        }

        def _s(deg: int) -> Matrix:
            mat = hmt.get(deg)
            if mat is None:
                return Matrix.zeros(field, target.dim(deg + 1), source.dim(deg))
            return mat

        comps = {
            deg: fmap.component(deg)
            + target.d(deg + 1) @ _s(deg)
            + _s(deg - 1) @ source.d(deg)
            for deg in source.degrees
        }
        gmap = ChainMap(source, target, comps)
        assert chain_homotopic(fmap, gmap)
        hmt_found = find_homotopy(fmap, gmap)
        assert hmt_found is not None

    def test_not_homotopic(self) -> None:
        """Test that only the identity of an acyclic complex is null-homotopic."""
        field = PrimeField(5)
        cpx = Complex(field, {0: 1, 1: 1}, {1: Matrix(field, [[0]])})
        assert not chain_homotopic(identity_map(cpx), zero_map(cpx, cpx))
        acyclic = Complex(field, {0: 1, 1: 1}, {1: Matrix(field, [[1]])})
        assert chain_homotopic(identity_map(acyclic), zero_map(acyclic, acyclic))

    @hypothesis.settings(max_examples=25, deadline=None)
    @hypothesis.given(strat.data())
    def test_hom_classes(self, data: "strat.DataObject") -> None:
        """Test that the homotopy classes match the maps of the homologies."""
        field = data.draw(fields())
        source = data.draw(complexes(field))
        target = data.draw(complexes(field))
        h_src, h_tgt = homology_dims(source), homology_dims(target)
        expected = sum(val * h_tgt.get(deg, 0) for deg, val in h_src.items())
        classes = hom_classes(source, target)
        assert classes.dim == expected
        for idx, rep in enumerate(classes.representatives):
            coords = classes.coordinates(rep)
            ref = np.zeros(classes.dim, dtype=object)
            ref[idx] = 1
            assert np.array_equal(field.array(coords), field.array(ref))


class TestTensor:
    """Test the Koszul tensor product and the suspension isomorphisms."""

    @hypothesis.settings(max_examples=25, deadline=None)
    @hypothesis.given(strat.data())
    def test_kunneth(self, data: "strat.DataObject") -> None:
        """Test the Kunneth formula on the homology dimensions."""
        field = data.draw(fields())
        left = data.draw(complexes(field))
        right = data.draw(complexes(field))
        prod = tensor(left, right)
        h_l, h_r = homology_dims(left), homology_dims(right)
        expected: dict = dict()
        for deg_a, val_a in h_l.items():
            for deg_b, val_b in h_r.items():
                expected[deg_a + deg_b] = expected.get(deg_a + deg_b, 0) + val_a * val_b
        assert homology_dims(prod) == expected
        assert prod.total_dim == left.total_dim * right.total_dim

    @hypothesis.settings(max_examples=20, deadline=None)
    @hypothesis.given(strat.data())
    def test_lambda_signs(self, data: "strat.DataObject") -> None:
        """Test that `lambda_p` multiplies `x (x) y` by `(-1)^(p |x|)`."""
        log = logging.getLogger("ext_ring.test")
        field = data.draw(fields())
        left = data.draw(complexes(field))
        right = data.draw(complexes(field))
        power = data.draw(strat.integers(-3, 3))
        lam = lambda_iso(left, right, power)
        assert_chain_map(lam)
        layout = tensor(left, shift(right, power))
        assert lam.source == layout
        assert lam.target == shift(tensor(left, right), power)
        for deg in layout.degrees:
            diag = field.zeros(layout.dim(deg))
            for a_deg, b_deg, off in layout.blocks(deg):
                size = left.dim(a_deg) * right.dim(b_deg - power)
                diag[off : off + size] = sign(power * a_deg)
            ref = Matrix(field, np.diag(field.reduce(diag)))
            assert lam.component(deg) == ref
        log.info("lambda_{0} checked on {1}.".format(power, layout.dims))

    @hypothesis.settings(max_examples=20, deadline=None)
    @hypothesis.given(strat.data())
    def test_rho_identity(self, data: "strat.DataObject") -> None:
        """Test that `rho_p` is the identity on the components."""
        field = data.draw(fields())
        left = data.draw(complexes(field))
        right = data.draw(complexes(field))
        power = data.draw(strat.integers(-3, 3))
        rho = rho_iso(left, right, power)
        assert_chain_map(rho)
        for deg in rho.source.degrees:
            assert rho.component(deg) == Matrix.identity(field, rho.source.dim(deg))

    @hypothesis.settings(max_examples=20, deadline=None)
    @hypothesis.given(strat.data())
    def test_tensor_map(self, data: "strat.DataObject") -> None:
        """Test the tensor product of chain maps and of suspended maps."""
        field = data.draw(fields())
        left = data.draw(complexes(field))
        right = data.draw(complexes(field))
        rng = data.draw(rngs())
        fmap = random_chain_map(left, left, rng)
        gmap = random_chain_map(right, right, rng)
        assert_chain_map(tensor_map(fmap, gmap))
        power = data.draw(strat.integers(-2, 2))
        suspended = ChainMap(
            right,
            shift(right, power),
            {deg: Matrix.identity(field, right.dim(deg)) for deg in right.degrees},
            power,
            check=False,
        )
        assert_chain_map(suspended)
        assert_chain_map(tensor_map(fmap, suspended))
        assert tensor_map(identity_map(left), identity_map(right)) == identity_map(
            tensor(left, right)
        )

    @hypothesis.settings(max_examples=15, deadline=None)
    @hypothesis.given(strat.data())
    def test_structure_maps(self, data: "strat.DataObject") -> None:
        """Test that the unitors and the associator are chain isomorphisms."""
        field = data.draw(fields())
        first = data.draw(complexes(field, max_dim=2))
        second = data.draw(complexes(field, max_dim=2))
        third = data.draw(complexes(field, max_dim=2))
        unit = unit_complex(field)
        for fmap in (
            unitor_left(first, unit),
            unitor_right(first, unit),
            associator(first, second, third),
        ):
            assert_chain_map(fmap)
            inv = inverse_map(fmap)
            assert compose(inv, fmap) == identity_map(fmap.source)

    def test_shift_map(self) -> None:
        """Test that the suspension of maps is a functor."""
        field = PrimeField(3)
        cpx = Complex(field, {0: 1, 1: 1}, {1: Matrix(field, [[2]])})
        fmap = ChainMap(cpx, cpx, {0: Matrix(field, [[2]]), 1: Matrix(field, [[2]])})
        assert shift_map(compose(fmap, fmap), 2) == compose(
            shift_map(fmap, 2), shift_map(fmap, 2)
        )
        assert shift_map(identity_map(cpx), -1) == identity_map(shift(cpx, -1))
        assert concentrated(field, 2, 3).dims == {3: 2}
