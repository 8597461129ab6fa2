# -*- coding: UTF-8 -*-
"""
Test the exact linear algebra
=============================
@ Ext Ring - Tests

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
The tests of the fields, the matrices and the solvers. The property tests run on
random matrices over `GF(2)`, `GF(3)`, `GF(5)` and `QQ`.
"""

import logging

from fractions import Fraction

import pytest

import numpy as np

import hypothesis
import hypothesis.strategies as strat

from ext_ring.errors import FieldMismatchError, ShapeError
from ext_ring.linalg import (
    Field,
    PrimeField,
    RationalField,
    Scalar,
    parse_field,
    Matrix,
    Solver,
    rank,
    rref,
    kernel_basis,
    kernel_matrix,
    subquotient_representatives,
    quotient_maps,
    inverse,
)

from .utils import fields, matrices


__all__ = ("TestFields", "TestMatrix", "TestSolver")


class TestFields:
    """Test the field specifications and the scalar arithmetic."""

    @pytest.mark.parametrize(
        "spec, tag",
        (
            (2, "GF(2)"),
            ("3", "GF(3)"),
            ("GF(5)", "GF(5)"),
            ({"p": 7}, "GF(7)"),
            ("Q", "QQ"),
            ("QQ", "QQ"),
            (0, "QQ"),
        ),
    )
    def test_parse_field(self, spec, tag: str) -> None:
        """Test the accepted forms of the field specifications."""
        log = logging.getLogger("ext_ring.test")
        field = parse_field(spec)
        log.info("Parse {0} into {1}.".format(spec, field))
        assert isinstance(field, Field)
        assert field.tag == tag

    @pytest.mark.parametrize("spec", (4, "x", {"q": 3}, True, 1, [2]))
    def test_parse_field_invalid(self, spec) -> None:
        """Test the rejection of invalid specifications."""
        with pytest.raises(ValueError):
            parse_field(spec)

    def test_prime_arithmetic(self) -> None:
        """Test the scalars of a prime field."""
        field = PrimeField(5)
        two = Scalar(2, field)
        assert two + 4 == 1
        assert two * 3 == 1
        assert Scalar(1, field) / 3 == two
        assert -two == 3
        assert Scalar(Fraction(1, 2), field) == 3
        assert not Scalar(10, field)
        with pytest.raises(ZeroDivisionError):
            field.convert(Fraction(1, 5))
        with pytest.raises(ZeroDivisionError):
            field.inv(0)

    def test_rational_arithmetic(self) -> None:
        """Test the scalars of the rationals."""
        field = RationalField()
        half = Scalar("1/2", field)
        assert half + half == 1
        assert half * 4 == 2
        assert str(Scalar(Fraction(-2, 6), field)) == "-1/3"
        assert field.format(Fraction(3, 1)) == "3"

    def test_field_mismatch(self) -> None:
        """Test that the fields are never mixed."""
        with pytest.raises(FieldMismatchError):
            Scalar(1, PrimeField(2)) + Scalar(1, PrimeField(3))
        with pytest.raises(FieldMismatchError):
            Matrix.identity(PrimeField(2), 2) @ Matrix.identity(RationalField(), 2)


class TestMatrix:
    """Test the matrix operations."""

    def test_canonical_entries(self) -> None:
        """Test that the entries are reduced on construction."""
        mat = Matrix(PrimeField(3), [[4, -1], [3, 7]])
        assert mat.to_lists() == [["1", "2"], ["0", "1"]]
        assert mat == Matrix(PrimeField(3), [[1, 2], [0, 1]])
        assert mat.fingerprint == Matrix(PrimeField(3), [[1, 2], [0, 1]]).fingerprint

    def test_shapes(self) -> None:
        """Test the shape checks and the empty matrices."""
        field = PrimeField(2)
        with pytest.raises(ShapeError):
            Matrix(field, [1, 0])
        with pytest.raises(ShapeError):
            Matrix.identity(field, 2) @ Matrix.identity(field, 3)
        with pytest.raises(ShapeError):
            Matrix.identity(field, 2) + Matrix.identity(field, 3)
        empty = Matrix.zeros(field, 3, 0) @ Matrix.zeros(field, 0, 2)
        assert empty.shape == (3, 2) and empty.is_zero()
        assert Matrix.block_diag(field, []).shape == (0, 0)
        assert Matrix.hstack(field, [], rows=4).shape == (4, 0)

    def test_kron(self) -> None:
        """Test the index convention of the Kronecker product."""
        field = RationalField()
        left = Matrix(field, [[1, 2], [3, 4]])
        right = Matrix(field, [[0, 1], [1, 0]])
        res = left.kron(right)
        assert res.shape == (4, 4)
        for idx_i in range(2):
            for idx_k in range(2):
                for idx_j in range(2):
                    for idx_l in range(2):
                        assert (
                            res.data[idx_i * 2 + idx_k, idx_j * 2 + idx_l]
                            == left.data[idx_i, idx_j] * right.data[idx_k, idx_l]
                        )

    @hypothesis.settings(max_examples=40, deadline=None)
    @hypothesis.given(strat.data())
    def test_rank_nullity(self, data: "strat.DataObject") -> None:
        """Test `rank + dim ker = cols` and that the kernel vectors vanish."""
        field = data.draw(fields())
        mat = data.draw(matrices(field))
        ker = kernel_basis(mat)
        assert rank(mat) + len(ker) == mat.cols
        for vec in ker:
            assert field.is_zero(mat.apply(vec))
        assert rank(kernel_matrix(mat)) == len(ker)

    @hypothesis.settings(max_examples=40, deadline=None)
    @hypothesis.given(strat.data())
    def test_rref_idempotent(self, data: "strat.DataObject") -> None:
        """Test that the echelon form is stable and keeps the rank."""
        field = data.draw(fields())
        mat = data.draw(matrices(field))
        res, pivots = rref(mat)
        again, pivots_again = rref(res)
        assert again == res
        assert pivots == pivots_again
        assert len(pivots) == rank(mat)
        assert list(pivots) == sorted(pivots)

    @hypothesis.settings(max_examples=30, deadline=None)
    @hypothesis.given(strat.data())
    def test_inverse(self, data: "strat.DataObject") -> None:
        """Test the inverse of random invertible matrices."""
        field = data.draw(fields())
        size = data.draw(strat.integers(1, 4))
        mat = data.draw(matrices(field, rows=size, cols=size))
        hypothesis.assume(rank(mat) == size)
        inv = inverse(mat)
        assert inv @ mat == Matrix.identity(field, size)
        assert mat @ inv == Matrix.identity(field, size)

    def test_inverse_singular(self) -> None:
        """Test that a singular matrix is refused."""
        with pytest.raises(ValueError):
            inverse(Matrix(PrimeField(2), [[1, 1], [1, 1]]))
        with pytest.raises(ShapeError):
            inverse(Matrix.zeros(PrimeField(2), 2, 3))


class TestSolver:
    """Test the solvers and the quotients."""

    @hypothesis.settings(max_examples=40, deadline=None)
    @hypothesis.given(strat.data())
    def test_solve_consistent(self, data: "strat.DataObject") -> None:
        """Test that an image vector is solved, and that the solution is exact."""
        field = data.draw(fields())
        mat = data.draw(matrices(field))
        rng = np.random.default_rng(data.draw(strat.integers(0, 2**16)))
        vec = field.random(rng, (mat.cols,))
        rhs = mat.apply(vec)
        solver = Solver(mat)
        res = solver.solve(rhs)
        assert res is not None
        assert np.array_equal(mat.apply(res), rhs)
        assert solver.rank == rank(mat)

    def test_solve_inconsistent(self) -> None:
        """Test that a vector out of the image gives `None`."""
        field = PrimeField(3)
        mat = Matrix(field, [[1, 0], [0, 0]])
        solver = Solver(mat)
        assert solver.solve([0, 1]) is None
        assert not solver.contains([1, 2])
        many = solver.solve_many(Matrix(field, [[1, 2], [0, 0]]))
        assert many is not None and mat @ many == Matrix(field, [[1, 2], [0, 0]])
        assert solver.solve_many(Matrix(field, [[1], [1]])) is None

    def test_subquotient(self) -> None:
        """Test the representatives of a kernel modulo an image."""
        field = PrimeField(2)
        ker = Matrix.identity(field, 3)
        im = Matrix(field, [[1], [1], [0]])
        reps = subquotient_representatives(ker, im)
        assert len(reps) == 2
        stacked = Matrix.from_columns(field, [im.column(0)] + reps, rows=3)
        assert rank(stacked) == 3

    @hypothesis.settings(max_examples=30, deadline=None)
    @hypothesis.given(strat.data())
    def test_quotient_maps(self, data: "strat.DataObject") -> None:
        """Test that the projection kills the relations and splits the section."""
        field = data.draw(fields())
        relations = data.draw(matrices(field, max_cols=3))
        proj, sect = quotient_maps(relations)
        dim = relations.rows
        assert proj.rows == dim - rank(relations)
        assert (proj @ relations).is_zero()
        assert proj @ sect == Matrix.identity(field, proj.rows)
