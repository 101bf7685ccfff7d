# Copyright 2026 The cohomdet Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Extraction of the determinant d(f, a, b) from the minors of theta.

Every minor is computed and divided by its dual-variable factor; the quotients must all agree. A failed
division or a disagreement means the tensor is not a legal form and is raised.
"""
import logging

from .consts import LOGGER_NAME
from .forms import (Form, ClosedForm, BoundaryForm, MasseyForm,
                    build_theta_closed, build_theta_boundary, build_theta_massey)
from .polyring import IntPoly, DimensionError, NotDivisibleError, exact_divide, struck_column_minors
from cohomdet.utils.intmatrix import (NotUnimodularError, as_int_matrix, check_unimodular, identity,
                                      unimodular_inverse)


class DeterminantError(ArithmeticError):
    """Raised when the minors of theta do not determine a polynomial of the expected degree"""
    pass


class InconsistentMinorsError(DeterminantError):
    """Raised when two minors yield different quotients"""
    pass


class BasisPair(object):
    __slots__ = ('_a', '_b', '_det_a', '_det_b')

    def __init__(self, a, b):
        """
        A pair of bases (a, b), each a unimodular integer matrix whose rows are basis vectors in standard
        coordinates

        Args:
            a(list(list(int))): n x n
            b(list(list(int))): (n-1) x (n-1) for boundary and Massey forms, n x n for closed forms
        """
        a = as_int_matrix(a, "basis a")
        b = as_int_matrix(b, "basis b")
        self._det_a = check_unimodular(a, len(a), "basis a")
        self._det_b = check_unimodular(b, len(b), "basis b")
        self._a = tuple(tuple(row) for row in a)
        self._b = tuple(tuple(row) for row in b)

    @classmethod
    def standard(cls, form):
        """The standard bases sized for the given form"""
        return cls(identity(form.n), identity(form.shape[0]))

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def det_a(self):
        return self._det_a

    @property
    def det_b(self):
        return self._det_b

    def orientation_sign(self):
        """Sign of the concatenated basis (a, b) relative to the standard one"""
        return self._det_a * self._det_b

    def dual_a(self):
        """a_i* in the standard dual variables: column i of the inverse of a"""
        return _dual_forms(self._a)

    def dual_b(self):
        return _dual_forms(self._b)

    def check_for(self, form):
        """
        Method to confirm the bases fit the form

        Args:
            form(Form):

        Raises:
            (DimensionError)
        """
        if len(self._a) != form.n or len(self._b) != form.shape[0]:
            raise DimensionError("Bases of sizes {} and {} do not fit a {} form with n={}".format(
                len(self._a), len(self._b), form.kind, form.n))

    def __eq__(self, other):
        if not isinstance(other, BasisPair):
            return NotImplemented
        return (self._a, self._b) == (other._a, other._b)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._a, self._b))

    def __repr__(self):
        return "BasisPair(a={}, b={})".format([list(r) for r in self._a], [list(r) for r in self._b])


class Orientation(object):
    __slots__ = ('_sign',)

    def __init__(self, sign=1):
        """
        A homology orientation, reduced to its sign against the standard concatenated basis

        Args:
            sign(int): +1 or -1
        """
        if isinstance(sign, Orientation):
            sign = sign.sign
        if sign not in (1, -1) or isinstance(sign, bool):
            raise ValueError("Orientation sign must be +1 or -1, got {}".format(sign))
        self._sign = int(sign)

    @property
    def sign(self):
        return self._sign

    def __eq__(self, other):
        if not isinstance(other, Orientation):
            return NotImplemented
        return self._sign == other._sign

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._sign)

    def __repr__(self):
        return "Orientation({:+d})".format(self._sign)


def _dual_forms(basis):
    inverse = unimodular_inverse([list(row) for row in basis])
    size = len(inverse)
    return [IntPoly.linear([inverse[k][i] for k in range(size)]) for i in range(size)]


def _check_degree(d, degree):
    if not d.is_homogeneous_of(degree):
        raise DeterminantError("Extracted determinant {} is not homogeneous of degree {}".format(d, degree))


def extract_struck_column_determinant(theta, duals, degree):
    """
    Method to find the unique d with det theta(i) = (-1)^i a_i* d for every column i (1-based)

    Args:
        theta(PolyMatrix): r x (r+1)
        duals(list(IntPoly)): a_i* for every column
        degree(int): expected degree of d

    Returns:
        (IntPoly)

    Raises:
        (NotDivisibleError): some a_i* does not divide its minor
        (InconsistentMinorsError): two columns yield different quotients
        (DeterminantError): the common quotient has the wrong degree
    """
    if len(duals) != theta.cols:
        raise DimensionError("Need {} dual variables, got {}".format(theta.cols, len(duals)))
    minors = struck_column_minors(theta)
    d = None
    for col, (minor, dual) in enumerate(zip(minors, duals)):
        signed = minor if col % 2 else -minor
        try:
            candidate = exact_divide(signed, dual)
        except NotDivisibleError:
            raise NotDivisibleError("Minor {} with column {} struck is not divisible by {}".format(
                signed, col + 1, dual))
        if d is None:
            d = candidate
        elif candidate != d:
            raise InconsistentMinorsError("Column {} gives {} but column 1 gives {}".format(col + 1, candidate, d))
    _check_degree(d, degree)
    logging.getLogger(LOGGER_NAME).debug("Extracted d = {} from {} minors".format(d, len(minors)))
    return d


def extract_closed_determinant(theta, duals_a, duals_b, degree, struck_rows=None):
    """
    Method to find the unique d with det theta(i;j) = (-1)^(i+j) a_i* b_j* d for every pair (i, j)

    Args:
        theta(PolyMatrix): n x n
        duals_a(list(IntPoly)): a_i*, one per row
        duals_b(list(IntPoly)): b_j*, one per column
        degree(int): expected degree of d
        struck_rows(list(int)): 0-based rows i to check against every column; all rows when omitted

    Returns:
        (IntPoly)
    """
    if len(duals_a) != theta.rows or len(duals_b) != theta.cols:
        raise DimensionError("Dual variable counts do not match a {}x{} theta".format(theta.rows, theta.cols))
    rows = range(theta.rows) if struck_rows is None else list(struck_rows)
    if not rows or any(not 0 <= row < theta.rows for row in rows):
        raise DimensionError("Struck rows {} do not fit a {}x{} theta".format(rows, theta.rows, theta.cols))
    d = None
    for row in rows:
        minors = struck_column_minors(theta.strike_row(row))
        for col, minor in enumerate(minors):
            signed = -minor if (row + col) % 2 else minor
            divisor = duals_a[row] * duals_b[col]
            try:
                candidate = exact_divide(signed, divisor)
            except NotDivisibleError:
                raise NotDivisibleError("Minor {} at ({}, {}) is not divisible by {}".format(
                    signed, row + 1, col + 1, divisor))
            if d is None:
                d = candidate
            elif candidate != d:
                raise InconsistentMinorsError("Minor ({}, {}) gives {} but the first minor gives {}".format(
                    row + 1, col + 1, candidate, d))
    _check_degree(d, degree)
    logging.getLogger(LOGGER_NAME).debug("Extracted d = {} from {} minors".format(d, len(rows) * theta.cols))
    return d


def _resolve_bases(form, bases):
    if bases is None:
        return BasisPair.standard(form)
    bases.check_for(form)
    return bases


def det_closed(form, bases=None, struck_rows=None):
    """
    Method to compute d(f, a, b) of a closed form

    Args:
        form(ClosedForm): n >= 3
        bases(BasisPair): n x n bases a and b; standard when omitted
        struck_rows(list(int)): rows of theta whose minors are divided out; all n rows when omitted

    Returns:
        (IntPoly): homogeneous of degree n-3, or zero
    """
    if not isinstance(form, ClosedForm):
        raise TypeError("det_closed needs a ClosedForm")
    bases = _resolve_bases(form, bases)
    theta = build_theta_closed(form, bases)
    return extract_closed_determinant(theta, bases.dual_a(), bases.dual_b(), form.expected_degree, struck_rows)


def det_closed_Z(form, basis=None, struck_rows=None):
    """Det(f): d(f, a, a), the same for every unimodular a (standard when omitted)"""
    bases = None if basis is None else BasisPair(basis, basis)
    return det_closed(form, bases, struck_rows)


def det_boundary(form, bases=None):
    """
    Method to compute d(f, a, b) of a boundary form

    Args:
        form(BoundaryForm): n >= 2
        bases(BasisPair): a is n x n, b is (n-1) x (n-1); standard when omitted

    Returns:
        (IntPoly): homogeneous of degree n-2, or zero
    """
    if not isinstance(form, BoundaryForm):
        raise TypeError("det_boundary needs a BoundaryForm")
    bases = _resolve_bases(form, bases)
    theta = build_theta_boundary(form, bases)
    return extract_struck_column_determinant(theta, bases.dual_a(), form.expected_degree)


def det_massey(form, bases=None):
    """
    Method to compute d(f, a, b) of a Massey form

    Args:
        form(MasseyForm): f0 vanishes
        bases(BasisPair): as for det_boundary

    Returns:
        (IntPoly): homogeneous of degree m(n-1)-1, or zero
    """
    if not isinstance(form, MasseyForm):
        raise TypeError("det_massey needs a MasseyForm")
    bases = _resolve_bases(form, bases)
    theta = build_theta_massey(form, bases)
    return extract_struck_column_determinant(theta, bases.dual_a(), form.expected_degree)


def determinant(form, bases=None):
    """
    Method to compute d(f, a, b) for any kind of form

    Args:
        form(Form):
        bases(BasisPair): standard when omitted

    Returns:
        (IntPoly)
    """
    if isinstance(form, ClosedForm):
        return det_closed(form, bases)
    if isinstance(form, BoundaryForm):
        return det_boundary(form, bases)
    if isinstance(form, MasseyForm):
        return det_massey(form, bases)
    raise TypeError("Unsupported form: {}".format(type(form).__name__))


def change_basis(d_reference, bases, new_bases):
    """
    Method to move a determinant from bases (a, b) to (a', b'): d(f, a', b') = [a'/a][b'/b] d(f, a, b)

    Args:
        d_reference(IntPoly): d(f, a, b)
        bases(BasisPair): (a, b)
        new_bases(BasisPair): (a', b')

    Returns:
        (IntPoly)
    """
    if len(bases.a) != len(new_bases.a) or len(bases.b) != len(new_bases.b):
        raise DimensionError("Base pairs have different sizes")
    # det(a' a^-1) is det(a') det(a) since both are +1 or -1
    factor = new_bases.det_a * bases.det_a * new_bases.det_b * bases.det_b
    return d_reference * factor


def sign_refine(d, bases, omega):
    """
    Method to turn d(f, a, b) into Det_omega(f)

    Args:
        d(IntPoly): determinant at the bases
        bases(BasisPair): the bases d was computed at
        omega(Orientation|int): the homology orientation sign

    Returns:
        (IntPoly)
    """
    return d * (Orientation(omega).sign * bases.orientation_sign())


def det_sign_refined(form, omega):
    """
    Method to compute Det_omega(f), the determinant at bases positively oriented with respect to omega

    Args:
        form(Form):
        omega(Orientation|int):

    Returns:
        (IntPoly)
    """
    if not isinstance(form, Form):
        raise TypeError("Unsupported form: {}".format(type(form).__name__))
    return determinant(form) * Orientation(omega).sign
