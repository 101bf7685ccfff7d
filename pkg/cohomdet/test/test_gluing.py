# Copyright 2026 The cohomdet Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
from __future__ import absolute_import

import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

try:
    import mock
except ImportError:
    from unittest import mock

from cohomdet.core.det import DeterminantError, det_boundary
from cohomdet.core.forms import BoundaryForm, ClosedForm, levi_civita_form
from cohomdet.core.gluing import (GluingCase, GluingInstance, GluingInputError, VacuousCaseError, classify_case,
                                  iota_star, verify_gluing, make_case1_instance, make_case2_instance,
                                  make_case3_instance, make_case4_instance, random_case1_instance,
                                  random_case2_instance, random_case3_instance, random_case4_instance)
from cohomdet.core.polyring import IntPoly, DimensionError, NotDivisibleError

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def rank2_boundary(D=1):
    tensor = np.zeros((1, 2, 2), dtype=object)
    tensor[0, 0, 1] = D
    tensor[0, 1, 0] = -D
    return BoundaryForm(tensor, 2)


def case3_n3(k=1, m=1, tors_M=1):
    return make_case3_instance(rank2_boundary(), [[0, 0]], k=k, m=m, tors_M=tors_M)


class TestClassifyCase(unittest.TestCase):

    def test_examples(self):
        assert classify_case(1, False, 3, 3) == GluingCase.ZERO_DETERMINANT
        assert classify_case(1, False, 3, 2) == GluingCase.ZERO_DETERMINANT
        assert classify_case(2, False, 3, 2) == GluingCase.RANK_TWO_IMAGE
        assert classify_case(1, True, 3, 2) == GluingCase.ZERO_IMAGE
        assert classify_case(1, True, 3, 3) == GluingCase.CLOSED_TARGET

    def test_vacuous(self):
        with self.assertRaises(VacuousCaseError):
            classify_case(0, False, 2, 2)

    def test_bad_input(self):
        with self.assertRaises(GluingInputError):
            classify_case(3, True, 3, 3)
        with self.assertRaises(GluingInputError):
            classify_case(1, True, 3, 1)
        with self.assertRaises(GluingInputError):
            classify_case(1, True, 2, 3)

    def test_total(self):
        """Method to test that every legal rank triple lands in exactly one case"""
        for r in (0, 1, 2):
            for only_T in (True, False):
                for b1_Mbar in (2, 3):
                    if r == 0 and not only_T:
                        with self.assertRaises(VacuousCaseError):
                            classify_case(r, only_T, 3, b1_Mbar)
                    else:
                        assert classify_case(r, only_T, 3, b1_Mbar) in tuple(GluingCase)


class TestIotaStar(unittest.TestCase):

    def test_killing_map(self):
        inst = case3_n3()
        a = [IntPoly.variable(3, i) for i in range(3)]
        assert iota_star(a[0] * a[2], inst).is_zero()
        assert iota_star(a[0] + a[1], inst) == IntPoly.parse("a1 + a2", 2)
        assert iota_star(a[1] * a[1], inst) == IntPoly.parse("a2^2", 2)

    def test_wrong_ring(self):
        with self.assertRaises(DimensionError):
            iota_star(IntPoly.variable(2, 0), case3_n3())

    def test_no_iota(self):
        inst = random_case1_instance(0, 3)
        with self.assertRaises(GluingInputError):
            iota_star(IntPoly.variable(3, 0), inst)


class TestRankTwoImage(unittest.TestCase):

    def test_n3(self):
        """Method to test the smallest case-3 pair by hand: d(f_M) = -a2, d(f_Mbar) = 1"""
        inst = case3_n3()
        assert det_boundary(inst.f_M) == IntPoly.parse("-a2", 3)
        report = verify_gluing(inst)
        assert report.passed
        assert report.verdict == "pass"
        assert report.lhs == IntPoly.parse("-a2", 2)
        assert report.rhs == report.lhs

    def test_corner(self):
        inst = case3_n3(k=2, m=3, tors_M=2)
        assert inst.f_M.tensor[1, 1, 2] == 6
        assert inst.tors_Mbar == 6
        assert verify_gluing(inst).passed

    def test_wrong_orientation_fails(self):
        inst = make_case3_instance(rank2_boundary(), [[0, 0]], omega_bar=1)
        report = verify_gluing(inst)
        assert not report.passed
        assert report.checks[0].passed
        assert report.lhs == -report.rhs

    @given(seeds, st.integers(min_value=3, max_value=5))
    @settings(max_examples=200, deadline=None)
    def test_random(self, seed, n):
        report = verify_gluing(random_case3_instance(seed, n))
        assert report.passed, report.detail


class TestClosedTarget(unittest.TestCase):

    def test_levi_civita(self):
        """Method to test the 3-torus with one row dropped: d(f_M) = -a3"""
        report = verify_gluing(make_case4_instance(levi_civita_form()))
        assert report.passed
        assert report.lhs == IntPoly.parse("-a3", 3)
        assert len(report.checks) == 2

    def test_zero_form(self):
        report = verify_gluing(make_case4_instance(ClosedForm(np.zeros((4, 4, 4), dtype=object), 4)))
        assert report.passed
        assert report.lhs.is_zero()

    def test_wrong_sign_fails(self):
        """Method to test that s0 = +1 is rejected for n = 3 and reported from the failing check"""
        report = verify_gluing(make_case4_instance(levi_civita_form(), s0=1))
        assert not report.passed
        assert report.verdict == "fail"
        assert report.lhs == IntPoly.parse("-a3", 3)
        assert report.rhs == IntPoly.parse("a3", 3)
        assert "!=" in report.detail

    @given(seeds, st.integers(min_value=3, max_value=5))
    @settings(max_examples=200, deadline=None)
    def test_random(self, seed, n):
        report = verify_gluing(random_case4_instance(seed, n))
        assert report.passed, report.detail


class TestZeroImage(unittest.TestCase):

    def test_levi_civita_head(self):
        report = verify_gluing(make_case2_instance(levi_civita_form().tensor, np.zeros((3, 3), dtype=object)))
        assert report.passed
        assert report.lhs == IntPoly.zero(3)

    def test_pure_g(self):
        G = [[0, 1, 0], [-1, 0, 2], [0, -2, 0]]
        inst = make_case2_instance(np.zeros((3, 3, 3), dtype=object), G)
        assert inst.n == 4
        assert verify_gluing(inst).passed

    def test_g_not_antisymmetric(self):
        with self.assertRaises(GluingInputError):
            make_case2_instance(levi_civita_form().tensor, [[0, 1, 0], [1, 0, 0], [0, 0, 0]])

    @given(seeds, st.integers(min_value=4, max_value=5))
    @settings(max_examples=200, deadline=None)
    def test_random(self, seed, n):
        report = verify_gluing(random_case2_instance(seed, n))
        assert report.passed, report.detail


class TestZeroDeterminant(unittest.TestCase):

    def test_explicit(self):
        head = np.zeros((1, 3, 3), dtype=object)
        head[0, 0, 1], head[0, 1, 0] = 2, -2
        head[0, 1, 2], head[0, 2, 1] = 1, -1
        report = verify_gluing(make_case1_instance(head))
        assert report.passed
        assert report.lhs.is_zero()

    def test_head_shape(self):
        with self.assertRaises(DimensionError):
            make_case1_instance(np.zeros((2, 3, 3), dtype=object))

    @given(seeds, st.integers(min_value=3, max_value=6))
    @settings(max_examples=200, deadline=None)
    def test_random(self, seed, n):
        assert verify_gluing(random_case1_instance(seed, n)).passed


class TestInstanceValidation(unittest.TestCase):

    def test_unknown_case(self):
        with self.assertRaises(GluingInputError):
            GluingInstance(5, rank2_boundary())

    def test_f_M_kind(self):
        with self.assertRaises(GluingInputError):
            GluingInstance(1, levi_civita_form())

    def test_signs_and_counts(self):
        with self.assertRaises(GluingInputError):
            GluingInstance(1, rank2_boundary(), omega=0)
        with self.assertRaises(GluingInputError):
            GluingInstance(1, rank2_boundary(), k=0)

    def test_corner_mismatch(self):
        """Method to test that the case-3 corner must equal k*m"""
        good = case3_n3()
        with self.assertRaises(GluingInputError):
            GluingInstance(3, good.f_M, f_Mbar=good.f_Mbar, iota=good.iota, k=2, ell_index=2)

    def test_case3_torsion(self):
        good = case3_n3()
        with self.assertRaises(GluingInputError):
            GluingInstance(3, good.f_M, f_Mbar=good.f_Mbar, iota=good.iota, ell_index=2, tors_Mbar=2)

    def test_iota_zero_rows(self):
        good = make_case2_instance(levi_civita_form().tensor, np.zeros((3, 3), dtype=object))
        iota = [[1, 0, 0], [0, 0, 0], [0, 0, 1], [0, 0, 0]]
        with self.assertRaises(GluingInputError):
            GluingInstance(2, good.f_M, iota=iota)
        with self.assertRaises(GluingInputError):
            GluingInstance(2, good.f_M)

    def test_case3_kills_last_variable(self):
        """Method to test that case 3 rejects an iota killing a dual variable other than a_n*"""
        good = case3_n3()
        with self.assertRaises(GluingInputError):
            GluingInstance(3, good.f_M, f_Mbar=good.f_Mbar, iota=[[0, 0], [1, 0], [0, 1]], ell_index=2)

    def test_case3_last_row(self):
        """Method to test that the b_{n-1} row of f_M may only hold the corner pair"""
        good = case3_n3()
        tensor = good.f_M.tensor.copy()
        tensor[1, 0, 2] = 4
        tensor[1, 2, 0] = -4
        with self.assertRaises(GluingInputError):
            GluingInstance(3, BoundaryForm(tensor, 3), f_Mbar=good.f_Mbar, iota=good.iota, ell_index=2)

    def test_case3_ell_index(self):
        good = case3_n3()
        with self.assertRaises(GluingInputError):
            GluingInstance(3, good.f_M, f_Mbar=good.f_Mbar, iota=good.iota, ell_index=1)
        assert GluingInstance(3, good.f_M, f_Mbar=good.f_Mbar, iota=good.iota, ell_index=2).ell_index == 2

    def test_case2_kills_last_variable(self):
        good = make_case2_instance(levi_civita_form().tensor, np.zeros((3, 3), dtype=object))
        iota = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]
        with self.assertRaises(GluingInputError):
            GluingInstance(2, good.f_M, iota=iota)

    def test_case4_iota(self):
        good = make_case4_instance(levi_civita_form())
        with self.assertRaises(GluingInputError):
            GluingInstance(4, good.f_M, f_Mbar=good.f_Mbar, iota=[[1, 1, 0], [0, 1, 0], [0, 0, 1]], ell_index=3)
        with self.assertRaises(GluingInputError):
            GluingInstance(4, good.f_M, f_Mbar=good.f_Mbar, iota=good.iota, ell_index=1)
        with self.assertRaises(GluingInputError):
            GluingInstance(4, good.f_M, f_Mbar=good.f_Mbar, iota=good.iota, ell_index=3, k=2)


class TestVerifyErrors(unittest.TestCase):

    @mock.patch('cohomdet.core.gluing.det_boundary', side_effect=NotDivisibleError("boom"))
    def test_extraction_failure_names_side(self, fake_det):
        """Method to test that a failed extraction is reported against the form it came from"""
        with self.assertRaises(DeterminantError) as ctx:
            verify_gluing(case3_n3())
        assert "f_M" in str(ctx.exception)
        assert fake_det.called
