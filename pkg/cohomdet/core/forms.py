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
from abc import ABCMeta, abstractmethod
import itertools
import logging

import numpy as np
import six

from .consts import LOGGER_NAME, KIND_CLOSED, KIND_BOUNDARY, KIND_MASSEY, RANDOM_ENTRY_BOUND
from .polyring import IntPoly, PolyMatrix, DimensionError
from cohomdet.utils.intmatrix import identity, transpose, check_unimodular, to_int


class FormValidationError(ValueError):
    def __init__(self, message, index=None):
        """
        Raised when a tensor breaks the symmetry its form requires

        Args:
            message(str): Description of the violation
            index(tuple(int)): 1-based index of the first violating entry
        """
        ValueError.__init__(self, message)
        self.index = index


class TensorFormatError(ValueError):
    """Raised when a tensor payload has the wrong shape or non-integer entries"""
    pass


def _as_tensor(tensor, shape):
    """Copy a nested sequence into a read-only numpy object array of Python ints"""
    try:
        array = np.array(tensor, dtype=object)
    except ValueError as err:
        raise TensorFormatError("Tensor is not rectangular: {}".format(err))
    if array.shape != shape:
        raise TensorFormatError("Tensor has shape {}, expected {}".format(array.shape, shape))
    result = np.empty(shape, dtype=object)
    for idx in np.ndindex(*shape):
        try:
            result[idx] = to_int(array[idx])
        except TypeError:
            raise TensorFormatError("Tensor entry at {} is not an integer".format(tuple(i + 1 for i in idx)))
    result.flags.writeable = False
    return result


def _nonzero_entries(array):
    for idx in np.ndindex(*array.shape):
        value = array[idx]
        if value:
            yield idx, value


def _accumulate(terms, num_vars, indices, coeff):
    exponents = [0] * num_vars
    for index in indices:
        exponents[index] += 1
    key = tuple(exponents)
    terms[key] = terms.get(key, 0) + int(coeff)


@six.add_metaclass(ABCMeta)
class Form(object):
    kind = None

    def __init__(self, tensor, n):
        """
        A validated integer tensor housing the form f

        Args:
            tensor(list|numpy.ndarray): Nested integer entries, 0-based
            n(int): Rank of the module whose dual variables generate the polynomial ring
        """
        if isinstance(n, bool) or not isinstance(n, int):
            raise TensorFormatError("n must be an integer")
        self._n = n
        self._tensor = _as_tensor(tensor, self.shape)
        self.validate()

    @property
    def n(self):
        return self._n

    @property
    def num_vars(self):
        return self._n

    @property
    def tensor(self):
        """Read-only numpy object array"""
        return self._tensor

    @property
    @abstractmethod
    def shape(self):
        return NotImplemented

    @property
    @abstractmethod
    def theta_degree(self):
        """Degree of every entry of the theta matrix"""
        return NotImplemented

    @property
    @abstractmethod
    def expected_degree(self):
        """Degree of the extracted determinant"""
        return NotImplemented

    @abstractmethod
    def validate(self):
        """
        Method to check the symmetry the form requires

        Raises:
            (FormValidationError): naming the first violating index
        """
        return NotImplemented

    def g_matrix(self):
        """
        Method to build the polynomial map g at standard bases

        Entry [x][p] is the sum over the trailing indices of f(x, e_p, e_rest) times the product of the
        dual variables e_rest*.

        Returns:
            (PolyMatrix): rows indexed by the first slot, columns by the second
        """
        rows, cols = self.shape[0], self.shape[1]
        cells = [[{} for _ in range(cols)] for _ in range(rows)]
        for idx, value in _nonzero_entries(self._tensor):
            _accumulate(cells[idx[0]][idx[1]], self._n, idx[2:], value)
        return PolyMatrix.from_rows([[IntPoly(self._n, terms) for terms in row] for row in cells])

    def entries(self):
        """Nonzero entries as ((1-based index), value) pairs in lexicographic order"""
        return [(tuple(i + 1 for i in idx), value) for idx, value in _nonzero_entries(self._tensor)]

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return (self.kind == other.kind and self.shape == other.shape and
                bool((self._tensor == other._tensor).all()))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return "{}(n={}, nonzero={})".format(type(self).__name__, self._n, len(self.entries()))


class ClosedForm(Form):
    kind = KIND_CLOSED

    @property
    def shape(self):
        return (self._n,) * 3

    @property
    def theta_degree(self):
        return 1

    @property
    def expected_degree(self):
        return self._n - 3

    def validate(self):
        if self._n < 3:
            raise TensorFormatError("A closed form needs n >= 3, got {}".format(self._n))
        t = self._tensor
        for i, j, k in itertools.product(range(self._n), repeat=3):
            value = t[i, j, k]
            repeated = i == j or j == k or i == k
            if (repeated and value) or t[j, i, k] != -value or t[i, k, j] != -value:
                index = (i + 1, j + 1, k + 1)
                raise FormValidationError("Tensor is not alternating at index {}".format(index), index)


class BoundaryForm(Form):
    kind = KIND_BOUNDARY

    @property
    def shape(self):
        return (self._n - 1, self._n, self._n)

    @property
    def theta_degree(self):
        return 1

    @property
    def expected_degree(self):
        return self._n - 2

    def validate(self):
        if self._n < 2:
            raise TensorFormatError("A boundary form needs n >= 2, got {}".format(self._n))
        t = self._tensor
        for x, j, k in itertools.product(range(self._n - 1), range(self._n), range(self._n)):
            value = t[x, j, k]
            if (j == k and value) or t[x, k, j] != -value:
                index = (x + 1, j + 1, k + 1)
                raise FormValidationError("Tensor is not skew in its last two slots at index {}".format(index),
                                          index)


class MasseyForm(Form):
    kind = KIND_MASSEY

    def __init__(self, tensor, n, m):
        """
        A form pairing relative classes against order-m Massey products

        Args:
            tensor(list|numpy.ndarray): (n-1) x n^(m+1) integer entries
            n(int): Rank of K (>= 2)
            m(int): Massey order (>= 1)
        """
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise TensorFormatError("Massey order m must be an integer >= 1, got {}".format(m))
        self._m = m
        Form.__init__(self, tensor, n)

    @property
    def m(self):
        return self._m

    @property
    def shape(self):
        return (self._n - 1,) + (self._n,) * (self._m + 1)

    @property
    def theta_degree(self):
        return self._m

    @property
    def expected_degree(self):
        return self._m * (self._n - 1) - 1

    def validate(self):
        if self._n < 2:
            raise TensorFormatError("A Massey form needs n >= 2, got {}".format(self._n))
        for x, component in enumerate(_f0_components(self._tensor, self._n)):
            if component:
                raise FormValidationError("Massey obstruction f0 does not vanish at b{}: {}".format(
                    x + 1, component.to_text()), (x + 1,))

    def __repr__(self):
        return "MasseyForm(n={}, m={}, nonzero={})".format(self._n, self._m, len(self.entries()))


def validate_closed(tensor, n):
    """
    Method to validate a fully alternating n x n x n tensor

    Args:
        tensor(list|numpy.ndarray): f(a_i, a_j, a_k), 0-based
        n(int): rank, at least 3

    Returns:
        (ClosedForm)
    """
    return ClosedForm(tensor, n)


def validate_boundary(tensor, n):
    """
    Method to validate an (n-1) x n x n tensor skew in its last two slots

    Args:
        tensor(list|numpy.ndarray): f(b_x, a_j, a_k), 0-based
        n(int): rank of K, at least 2

    Returns:
        (BoundaryForm)
    """
    return BoundaryForm(tensor, n)


def validate_massey(tensor, n, m):
    return MasseyForm(tensor, n, m)


def _f0_components(array, n):
    components = [{} for _ in range(array.shape[0])]
    for idx, value in _nonzero_entries(array):
        _accumulate(components[idx[0]], n, idx[1:], value)
    return [IntPoly(n, terms) for terms in components]


def massey_f0(tensor, n, m):
    """
    Method to compute the obstruction f0(b_x) = sum f(b_x, a_i1, ..., a_i(m+1)) a_i1* ... a_i(m+1)*

    Args:
        tensor(list|numpy.ndarray): raw (n-1) x n^(m+1) tensor
        n(int): rank of K
        m(int): Massey order

    Returns:
        (list(IntPoly)): one homogeneous component of degree m+1 per row x
    """
    shape = (n - 1,) + (n,) * (m + 1)
    return _f0_components(_as_tensor(tensor, shape), n)


def massey_f0_bar(tensor, n, m, point):
    """
    Method to evaluate the weaker obstruction f(b_x, a, ..., a) at one integer vector a

    f0 = 0 implies this vanishes for every a; over Z the converse holds as well because a polynomial that
    vanishes at every integer point is zero.

    Args:
        tensor(list|numpy.ndarray): raw (n-1) x n^(m+1) tensor
        n(int): rank of K
        m(int): Massey order
        point(list(int)): coordinates of a in the standard basis

    Returns:
        (list(int)): one value per row x
    """
    if len(point) != n:
        raise DimensionError("Point has {} coordinates, expected {}".format(len(point), n))
    shape = (n - 1,) + (n,) * (m + 1)
    array = _as_tensor(tensor, shape)
    values = [0] * (n - 1)
    for idx, value in _nonzero_entries(array):
        product = value
        for index in idx[1:]:
            product *= point[index]
        values[idx[0]] += product
    return values


def _basis_matrices(bases, size_a, size_b):
    if bases is None:
        return identity(size_a), identity(size_b)
    a = [list(row) for row in bases.a]
    b = [list(row) for row in bases.b]
    check_unimodular(a, size_a, "basis a")
    check_unimodular(b, size_b, "basis b")
    return a, b


def build_theta_closed(form, bases=None):
    """
    Method to build the n x n matrix theta[i][j] = g(a_i, b_j) of a closed form

    Args:
        form(ClosedForm):
        bases(BasisPair): rows of a and b are basis vectors in standard coordinates; standard when omitted

    Returns:
        (PolyMatrix): entries in the standard dual variables, homogeneous of degree 1
    """
    if not isinstance(form, ClosedForm):
        raise TypeError("build_theta_closed needs a ClosedForm")
    a, b = _basis_matrices(bases, form.n, form.n)
    return form.g_matrix().int_left_multiply(a).int_right_multiply(transpose(b))


def _build_theta_relative(form, bases):
    a, b = _basis_matrices(bases, form.n, form.n - 1)
    theta = form.g_matrix().int_left_multiply(b).int_right_multiply(transpose(a))
    logging.getLogger(LOGGER_NAME).debug("Built {}x{} theta of degree {} for {}".format(
        theta.rows, theta.cols, form.theta_degree, form))
    return theta


def build_theta_boundary(form, bases=None):
    """
    Method to build the (n-1) x n matrix theta[i][j] = g(b_i, a_j) of a boundary form

    Args:
        form(BoundaryForm):
        bases(BasisPair): a is n x n and b is (n-1) x (n-1); standard when omitted

    Returns:
        (PolyMatrix)
    """
    if not isinstance(form, BoundaryForm):
        raise TypeError("build_theta_boundary needs a BoundaryForm")
    return _build_theta_relative(form, bases)


def build_theta_massey(form, bases=None):
    """Same as build_theta_boundary with g summed over m trailing slots, so entries have degree m"""
    if not isinstance(form, MasseyForm):
        raise TypeError("build_theta_massey needs a MasseyForm")
    return _build_theta_relative(form, bases)


def levi_civita_form(scale=1):
    """The n=3 closed form with f(a1, a2, a3) = scale"""
    tensor = np.zeros((3, 3, 3), dtype=object)
    for perm in itertools.permutations(range(3)):
        inversions = sum(1 for p, q in itertools.combinations(perm, 2) if p > q)
        tensor[perm] = -scale if inversions % 2 else scale
    return ClosedForm(tensor, 3)


def alternating_tensor(rng, n, bound=RANDOM_ENTRY_BOUND):
    """Random fully alternating n x n x n numpy object array"""
    tensor = np.zeros((n, n, n), dtype=object)
    for triple in itertools.combinations(range(n), 3):
        value = int(rng.integers(-bound, bound + 1))
        for perm in itertools.permutations(range(3)):
            inversions = sum(1 for p, q in itertools.combinations(perm, 2) if p > q)
            tensor[tuple(triple[p] for p in perm)] = -value if inversions % 2 else value
    return tensor


def skew_tensor(rng, rows, n, bound=RANDOM_ENTRY_BOUND):
    """Random rows x n x n numpy object array skew in its last two slots"""
    tensor = np.zeros((rows, n, n), dtype=object)
    for x in range(rows):
        for j, k in itertools.combinations(range(n), 2):
            value = int(rng.integers(-bound, bound + 1))
            tensor[x, j, k] = value
            tensor[x, k, j] = -value
    return tensor


def random_closed_form(rng, n, bound=RANDOM_ENTRY_BOUND):
    return ClosedForm(alternating_tensor(rng, n, bound), n)


def random_boundary_form(rng, n, bound=RANDOM_ENTRY_BOUND):
    return BoundaryForm(skew_tensor(rng, n - 1, n, bound), n)


def random_massey_form(rng, n, m, bound=RANDOM_ENTRY_BOUND):
    """
    Method to draw a random Massey form

    A raw tensor is antisymmetrised over its first two K slots, which makes every f0 component cancel.

    Args:
        rng(numpy.random.Generator): seeded generator
        n(int): rank of K
        m(int): Massey order
        bound(int): raw entries are drawn from [-bound, bound]

    Returns:
        (MasseyForm)
    """
    shape = (n - 1,) + (n,) * (m + 1)
    raw = rng.integers(-bound, bound + 1, size=shape).astype(object)
    tensor = raw - np.swapaxes(raw, 1, 2)
    return MasseyForm(tensor, n, m)
