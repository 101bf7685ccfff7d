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
"""Exact arithmetic in the graded polynomial ring Z[a1*, ..., an*].

IntPoly wraps a sympy Poly over ZZ in the generators a1..an. Determinants and minors are taken in sympy's
sparse ring ZZ[a1, ..., an], either by DomainMatrix (fraction-free Bareiss) or by a Laplace expansion that
shares the minors of every column subset. Every value is immutable once built.
"""
import itertools
import logging
import numbers
import re
from enum import Enum
from types import MappingProxyType

from sympy import Integer, Poly, Symbol, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.polyerrors import ExactQuotientFailed

from .consts import LOGGER_NAME


class DimensionError(ValueError):
    """Raised when operands disagree on a size (variables, rows, columns)"""
    pass


class NotDivisibleError(ArithmeticError):
    """Raised when an exact quotient does not exist over the integers"""
    pass


class ZeroDivisorError(ValueError):
    """Raised when asked to divide by the zero polynomial"""
    pass


class PolyParseError(ValueError):
    """Raised when polynomial text cannot be parsed"""
    pass


class DegreeMarker(Enum):
    """Results of IntPoly.homogeneous_degree() that are not an integer degree."""
    ANY = "any"                         # the zero polynomial is homogeneous of every degree
    NOT_HOMOGENEOUS = "not-homogeneous"


_TERM_RE = re.compile(r'([+-]?)([^+-]+)')
_VAR_RE = re.compile(r'^a(\d+)(?:\^(\d+))?$')

_GENERATORS = {}
_RINGS = {}


def generators(num_vars):
    """The sympy symbols a1..an standing for the dual variables"""
    if num_vars not in _GENERATORS:
        _GENERATORS[num_vars] = tuple(Symbol("a{}".format(i + 1)) for i in range(num_vars))
    return _GENERATORS[num_vars]


def poly_ring(num_vars):
    """The sympy domain ZZ[a1, ..., an]"""
    if num_vars not in _RINGS:
        _RINGS[num_vars] = ZZ.poly_ring(*generators(num_vars))
    return _RINGS[num_vars]


def _check_num_vars(num_vars):
    if isinstance(num_vars, bool) or not isinstance(num_vars, numbers.Integral) or num_vars < 1:
        raise DimensionError("num_vars must be a positive integer, got {}".format(num_vars))
    return int(num_vars)


class IntPoly(object):
    __slots__ = ('_poly', '_terms')

    def __init__(self, num_vars, terms=None):
        """
        A polynomial with integer coefficients in num_vars commuting variables

        Args:
            num_vars(int): Number of generators a1*..an*
            terms(dict): Map of exponent tuples to integer coefficients. Zero coefficients are dropped.
        """
        num_vars = _check_num_vars(num_vars)
        clean = {}
        if terms:
            for exponents, coeff in terms.items():
                exponents = tuple(int(e) for e in exponents)
                if len(exponents) != num_vars:
                    raise DimensionError("Exponent vector {} does not have length {}".format(exponents, num_vars))
                if any(e < 0 for e in exponents):
                    raise ValueError("Negative exponent in {}".format(exponents))
                coeff = int(coeff)
                if coeff:
                    clean[exponents] = coeff
        self._poly = Poly.from_dict(dict(clean), *generators(num_vars), domain=ZZ)
        self._terms = clean

    @classmethod
    def from_poly(cls, poly):
        """Wrap a sympy Poly over ZZ whose generators are a1..an"""
        if tuple(poly.gens) != generators(len(poly.gens)) or poly.get_domain() != ZZ:
            raise DimensionError("Expected a Poly over ZZ in a1..an, got {}".format(poly))
        wrapped = cls.__new__(cls)
        wrapped._poly = poly
        wrapped._terms = None
        return wrapped

    @classmethod
    def from_ring_element(cls, element, num_vars):
        """Convert an element of poly_ring(num_vars) back to an IntPoly"""
        return cls(num_vars, {monom: int(coeff) for monom, coeff in element.items()})

    @classmethod
    def zero(cls, num_vars):
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars, value):
        num_vars = _check_num_vars(num_vars)
        return cls(num_vars, {(0,) * num_vars: int(value)})

    @classmethod
    def variable(cls, num_vars, index):
        """The generator a_{index+1}* (index is 0-based)"""
        num_vars = _check_num_vars(num_vars)
        if not 0 <= index < num_vars:
            raise DimensionError("Variable index {} out of range for {} variables".format(index, num_vars))
        exponents = [0] * num_vars
        exponents[index] = 1
        return cls(num_vars, {tuple(exponents): 1})

    @classmethod
    def linear(cls, coeffs):
        """The linear form sum_i coeffs[i] * a_{i+1}*"""
        num_vars = len(coeffs)
        terms = {}
        for idx, coeff in enumerate(coeffs):
            exponents = [0] * num_vars
            exponents[idx] = 1
            terms[tuple(exponents)] = int(coeff)
        return cls(num_vars, terms)

    @classmethod
    def parse(cls, text, num_vars):
        """
        Method to parse the canonical text rendering (e.g. "2*a1^2*a3 - a2")

        Args:
            text(str): Polynomial text. Whitespace is ignored and terms may appear in any order.
            num_vars(int): Number of variables of the result

        Returns:
            (IntPoly)
        """
        compact = re.sub(r'\s+', '', text)
        if not compact:
            raise PolyParseError("Empty polynomial text")
        terms = {}
        position = 0
        for match in _TERM_RE.finditer(compact):
            if match.start() != position:
                raise PolyParseError("Cannot parse polynomial text '{}'".format(text))
            position = match.end()
            coeff = -1 if match.group(1) == '-' else 1
            exponents = [0] * num_vars
            for factor in match.group(2).split('*'):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                var_match = _VAR_RE.match(factor)
                if not var_match:
                    raise PolyParseError("Unknown factor '{}' in '{}'".format(factor, text))
                index = int(var_match.group(1))
                if not 1 <= index <= num_vars:
                    raise PolyParseError("Variable a{} out of range for {} variables".format(index, num_vars))
                exponents[index - 1] += int(var_match.group(2) or 1)
            key = tuple(exponents)
            terms[key] = terms.get(key, 0) + coeff
        if position != len(compact):
            raise PolyParseError("Cannot parse polynomial text '{}'".format(text))
        return cls(num_vars, terms)

    @property
    def poly(self):
        """The underlying sympy Poly"""
        return self._poly

    @property
    def num_vars(self):
        return len(self._poly.gens)

    @property
    def terms(self):
        if self._terms is None:
            self._terms = {monom: int(coeff) for monom, coeff in self._poly.terms() if coeff}
        return MappingProxyType(self._terms)

    def to_ring_element(self):
        """This polynomial as an element of poly_ring(num_vars)"""
        return poly_ring(self.num_vars).ring.from_dict(dict(self.terms))

    def is_zero(self):
        return self._poly.is_zero

    def __bool__(self):
        return not self._poly.is_zero

    __nonzero__ = __bool__

    def __eq__(self, other):
        if isinstance(other, int):
            return self == IntPoly.constant(self.num_vars, other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._poly == other._poly

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        # constants compare equal to ints, so they must hash like them
        if self._poly.is_ground:
            return hash(int(self._poly.LC()))
        return hash(self._poly)

    def _coerce(self, other):
        if isinstance(other, int):
            return IntPoly.constant(self.num_vars, other)
        if not isinstance(other, IntPoly):
            return None
        if other.num_vars != self.num_vars:
            raise DimensionError("Polynomials in {} and {} variables cannot be combined".format(
                self.num_vars, other.num_vars))
        return other

    def __neg__(self):
        return IntPoly.from_poly(-self._poly)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntPoly.from_poly(self._poly + other._poly)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntPoly.from_poly(self._poly - other._poly)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return IntPoly.from_poly(other._poly - self._poly)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly.from_poly(self._poly.mul_ground(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only non-negative integer powers are supported")
        return IntPoly.from_poly(self._poly ** exponent)

    def sorted_terms(self):
        """Terms as (exponents, coeff) pairs, graded-lex descending"""
        return [(monom, int(coeff)) for monom, coeff in self._poly.terms(order='grlex') if coeff]

    def homogeneous_degree(self):
        """
        Method to get the degree when every monomial has the same total degree

        Returns:
            (int|DegreeMarker): the degree, DegreeMarker.ANY for zero or DegreeMarker.NOT_HOMOGENEOUS
        """
        if self._poly.is_zero:
            return DegreeMarker.ANY
        if not self._poly.is_homogeneous:
            return DegreeMarker.NOT_HOMOGENEOUS
        return int(self._poly.total_degree())

    def is_homogeneous_of(self, degree):
        found = self.homogeneous_degree()
        return found is DegreeMarker.ANY or found == degree

    def evaluate(self, point):
        """Evaluate at an integer point of length num_vars"""
        if len(point) != self.num_vars:
            raise DimensionError("Point has {} coordinates, expected {}".format(len(point), self.num_vars))
        return int(self._poly.eval(dict(zip(self._poly.gens, (int(x) for x in point)))))

    def to_text(self):
        """Canonical rendering: graded-lex order, variables a1..an, e.g. "2*a1^2*a3 - a2" """
        pieces = []
        for position, (exponents, coeff) in enumerate(self.sorted_terms()):
            factors = []
            for idx, power in enumerate(exponents):
                if power == 1:
                    factors.append("a{}".format(idx + 1))
                elif power > 1:
                    factors.append("a{}^{}".format(idx + 1, power))
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "{}*{}".format(magnitude, "*".join(factors))
            if position == 0:
                pieces.append("-" + body if coeff < 0 else body)
            else:
                pieces.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(pieces) if pieces else "0"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "IntPoly({}, '{}')".format(self.num_vars, self.to_text())


class PolyMatrix(object):
    __slots__ = ('_rows', '_cols', '_num_vars', '_entries')

    def __init__(self, rows, cols, entries, num_vars=None):
        """
        A rectangular matrix over Z[a1*, ..., an*]

        Args:
            rows(int): Row count (>= 1)
            cols(int): Column count (>= 1)
            entries(list(IntPoly)): Row-major entries
            num_vars(int): Variable count, required only to sanity check an all-integer entry list
        """
        if rows < 1 or cols < 1:
            raise DimensionError("A PolyMatrix needs positive dimensions, got {}x{}".format(rows, cols))
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise DimensionError("Expected {} entries for a {}x{} matrix, got {}".format(
                rows * cols, rows, cols, len(entries)))
        if num_vars is None:
            num_vars = entries[0].num_vars
        for entry in entries:
            if not isinstance(entry, IntPoly):
                raise TypeError("PolyMatrix entries must be IntPoly, got {}".format(type(entry).__name__))
            if entry.num_vars != num_vars:
                raise DimensionError("PolyMatrix entries must share one variable count")
        self._rows = rows
        self._cols = cols
        self._num_vars = num_vars
        self._entries = entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(row) for row in rows]
        if not rows or not rows[0]:
            raise DimensionError("A PolyMatrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionError("Ragged rows")
        return cls(len(rows), width, [entry for row in rows for entry in row])

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def num_vars(self):
        return self._num_vars

    @property
    def entries(self):
        return self._entries

    def is_square(self):
        return self._rows == self._cols

    def __getitem__(self, key):
        row, col = key
        if not (0 <= row < self._rows and 0 <= col < self._cols):
            raise IndexError("Entry ({}, {}) outside a {}x{} matrix".format(row, col, self._rows, self._cols))
        return self._entries[row * self._cols + col]

    def row(self, index):
        start = index * self._cols
        return self._entries[start:start + self._cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self._rows)]

    def to_ring_rows(self):
        """Entries as elements of poly_ring(num_vars), one list per row"""
        return [[entry.to_ring_element() for entry in self.row(i)] for i in range(self._rows)]

    def strike_column(self, col):
        """The matrix A(col) with one column removed (0-based)"""
        keep = [j for j in range(self._cols) if j != col]
        return PolyMatrix.from_rows([[row[j] for j in keep] for row in self.to_rows()])

    def strike_row(self, row):
        return PolyMatrix.from_rows([r for i, r in enumerate(self.to_rows()) if i != row])

    def strike(self, row, col):
        """The matrix A(row;col) with one row and one column removed (0-based)"""
        return self.strike_row(row).strike_column(col)

    def swap_rows(self, first, second):
        rows = self.to_rows()
        rows[first], rows[second] = rows[second], rows[first]
        return PolyMatrix.from_rows(rows)

    def int_left_multiply(self, matrix):
        """Compute C * self for an integer matrix C"""
        if any(len(row) != self._rows for row in matrix):
            raise DimensionError("Integer matrix does not have {} columns".format(self._rows))
        zero = IntPoly.zero(self._num_vars)
        rows = self.to_rows()
        result = []
        for c_row in matrix:
            new_row = []
            for j in range(self._cols):
                total = zero
                for k, scale in enumerate(c_row):
                    if scale:
                        total = total + rows[k][j] * int(scale)
                new_row.append(total)
            result.append(new_row)
        return PolyMatrix.from_rows(result)

    def int_right_multiply(self, matrix):
        """Compute self * C for an integer matrix C"""
        if len(matrix) != self._cols:
            raise DimensionError("Integer matrix does not have {} rows".format(self._cols))
        width = len(matrix[0])
        zero = IntPoly.zero(self._num_vars)
        result = []
        for row in self.to_rows():
            new_row = []
            for j in range(width):
                total = zero
                for k in range(self._cols):
                    scale = matrix[k][j]
                    if scale:
                        total = total + row[k] * int(scale)
                new_row.append(total)
            result.append(new_row)
        return PolyMatrix.from_rows(result)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self._rows, self._cols, self._entries) == (other._rows, other._cols, other._entries)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self):
        return "PolyMatrix({})".format([[str(e) for e in row] for row in self.to_rows()])


def _same_ring(p, q, action):
    if p.num_vars != q.num_vars:
        raise DimensionError("Polynomials in {} and {} variables cannot be {}".format(p.num_vars, q.num_vars, action))


def poly_mul(p, q):
    """
    Product of two polynomials in the same ring

    Args:
        p(IntPoly):
        q(IntPoly):

    Returns:
        (IntPoly): canonical product
    """
    _same_ring(p, q, "multiplied")
    return IntPoly.from_poly(p.poly.mul(q.poly))


def exact_divide(p, q):
    """
    Method to compute r with p = q * r over the integers

    Args:
        p(IntPoly): Dividend
        q(IntPoly): Divisor, nonzero

    Returns:
        (IntPoly): The exact quotient

    Raises:
        (ZeroDivisorError): if q is zero
        (NotDivisibleError): if no quotient exists over the integers
    """
    _same_ring(p, q, "divided")
    if q.is_zero():
        raise ZeroDivisorError("Division by the zero polynomial")
    try:
        # auto=False keeps the division in ZZ instead of retrying over QQ
        quotient = p.poly.exquo(q.poly, auto=False)
    except ExactQuotientFailed:
        raise NotDivisibleError("{} is not divisible by {}".format(p, q))
    return IntPoly.from_poly(quotient)


def substitute_linear(p, matrix):
    """
    Method to apply the ring map a_i* -> sum_j matrix[i][j] * alpha_j*

    Args:
        p(IntPoly): Polynomial in len(matrix) variables
        matrix(list(list(int))): One row per variable of p, every row of the same length n'

    Returns:
        (IntPoly): Image in n' variables
    """
    rows = [[int(x) for x in row] for row in matrix]
    if len(rows) != p.num_vars:
        raise DimensionError("Substitution has {} rows but the polynomial has {} variables".format(
            len(rows), p.num_vars))
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise DimensionError("Substitution matrix rows differ in length")
    if width < 1:
        raise DimensionError("Substitution needs at least one target variable")
    targets = generators(width)
    images = {source: sum((scale * target for scale, target in zip(row, targets) if scale), Integer(0))
              for source, row in zip(p.poly.gens, rows)}
    # xreplace substitutes every variable at once, so a1 -> a2, a2 -> a1 swaps them
    return IntPoly.from_poly(Poly(p.poly.as_expr().xreplace(images), *targets, domain=ZZ))


def _leading_minors(rows, cols, depth, ring):
    """Determinants of rows 0..depth-1 against every column subset of size depth"""
    level = {(): ring.one}
    for row in range(depth):
        entries = rows[row]
        next_level = {}
        for subset in itertools.combinations(range(cols), row + 1):
            total = ring.zero
            for position, col in enumerate(subset):
                entry = entries[col]
                if not entry:
                    continue
                minor = level[subset[:position] + subset[position + 1:]]
                if not minor:
                    continue
                if (row + position) % 2:
                    total -= entry * minor
                else:
                    total += entry * minor
            next_level[subset] = total
        level = next_level
    return level


def _bareiss_det(rows, ring_domain):
    size = len(rows)
    return DomainMatrix(rows, (size, size), ring_domain).det()


def poly_det(matrix, method="laplace"):
    """
    Method to compute the exact determinant of a square polynomial matrix

    Args:
        matrix(PolyMatrix): square matrix
        method(str): "laplace" (memoised expansion over column subsets) or "bareiss" (fraction-free
                     elimination by sympy's DomainMatrix). Both give the same canonical result.

    Returns:
        (IntPoly)
    """
    if not matrix.is_square():
        raise DimensionError("Determinant of a non-square {}x{} matrix".format(matrix.rows, matrix.cols))
    if method not in ("laplace", "bareiss"):
        raise ValueError("Unknown determinant method: {}".format(method))
    domain = poly_ring(matrix.num_vars)
    rows = matrix.to_ring_rows()
    if method == "laplace":
        value = _leading_minors(rows, matrix.cols, matrix.rows, domain.ring)[tuple(range(matrix.cols))]
    else:
        value = _bareiss_det(rows, domain)
    return IntPoly.from_ring_element(value, matrix.num_vars)


def struck_column_minors(matrix, method="laplace"):
    """
    Method to compute det A(j) for every column j of an r x (r+1) matrix

    Args:
        matrix(PolyMatrix): r x (r+1) matrix
        method(str): "laplace" shares the minors of every column subset in one pass; "bareiss" takes r+1
                     separate DomainMatrix determinants

    Returns:
        (list(IntPoly)): entry j is the determinant with column j (0-based) struck out
    """
    if matrix.cols != matrix.rows + 1:
        raise DimensionError("Struck-column minors need an r x (r+1) matrix, got {}x{}".format(
            matrix.rows, matrix.cols))
    if method not in ("laplace", "bareiss"):
        raise ValueError("Unknown determinant method: {}".format(method))
    domain = poly_ring(matrix.num_vars)
    rows = matrix.to_ring_rows()
    every = tuple(range(matrix.cols))
    if method == "laplace":
        level = _leading_minors(rows, matrix.cols, matrix.rows, domain.ring)
        values = [level[every[:j] + every[j + 1:]] for j in every]
    else:
        values = [_bareiss_det([row[:j] + row[j + 1:] for row in rows], domain) for j in every]
    minors = [IntPoly.from_ring_element(value, matrix.num_vars) for value in values]
    logging.getLogger(LOGGER_NAME).debug("Computed {} struck-column minors of a {}x{} matrix".format(
        len(minors), matrix.rows, matrix.cols))
    return minors
