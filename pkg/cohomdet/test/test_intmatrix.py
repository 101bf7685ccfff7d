from __future__ import absolute_import

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, eye

from cohomdet.core.polyring import DimensionError
from cohomdet.utils.intmatrix import (NotUnimodularError, as_int_matrix, check_unimodular, identity, int_det,
                                      is_permutation, random_unimodular, to_int, unimodular_inverse)
from cohomdet.test.harness import rng_for

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


class TestIntMatrix(unittest.TestCase):

    def test_int_det(self):
        assert int_det([[2]]) == 2
        assert int_det([[0, 1], [1, 0]]) == -1
        assert int_det([[0, 1, 2], [3, 0, 1], [2, 3, 0]]) == 20
        assert int_det([[1, 2], [2, 4]]) == 0
        assert int_det([]) == 1
        assert isinstance(int_det([[3, 1], [1, 1]]), int)

    def test_int_det_shape(self):
        with self.assertRaises(DimensionError):
            int_det([[1, 2]])

    @given(seeds, st.integers(min_value=1, max_value=6))
    @settings(max_examples=40, deadline=None)
    def test_inverse(self, seed, n):
        """Method to test that random unimodular matrices invert exactly"""
        matrix = random_unimodular(rng_for(seed), n)
        assert int_det(matrix) in (1, -1)
        inverse = unimodular_inverse(matrix)
        assert all(isinstance(x, int) for row in inverse for x in row)
        assert Matrix(matrix) * Matrix(inverse) == eye(n)
        assert Matrix(inverse) * Matrix(matrix) == eye(n)

    def test_inverse_small(self):
        assert unimodular_inverse([[-1]]) == [[-1]]
        assert unimodular_inverse([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]
        assert unimodular_inverse([[0, 1], [1, 0]]) == [[0, 1], [1, 0]]

    def test_not_unimodular(self):
        with self.assertRaises(NotUnimodularError):
            unimodular_inverse([[2, 0], [0, 1]])
        with self.assertRaises(NotUnimodularError):
            check_unimodular([[1, 1], [1, 1]], 2, "basis a")

    def test_check_unimodular(self):
        assert check_unimodular([[0, 1], [1, 0]], 2, "basis a") == -1
        with self.assertRaises(DimensionError):
            check_unimodular(identity(2), 3, "basis b")

    def test_coercion(self):
        with self.assertRaises(TypeError):
            to_int(True)
        with self.assertRaises(TypeError):
            to_int(1.0)
        with self.assertRaises(ValueError):
            as_int_matrix([["1"]])
        with self.assertRaises(DimensionError):
            as_int_matrix([[1, 2]])

    def test_is_permutation(self):
        assert is_permutation([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert not is_permutation([[1, 1], [0, 1]])
        assert not is_permutation([[-1, 0], [0, 1]])
