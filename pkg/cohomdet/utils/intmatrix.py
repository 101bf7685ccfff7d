"""Small exact helpers for integer matrices given as lists of rows."""
import numbers

from sympy import Matrix

from cohomdet.core.consts import RANDOM_UNIMODULAR_STEPS
from cohomdet.core.polyring import DimensionError


class NotUnimodularError(ValueError):
    """Raised when a basis matrix does not have determinant +1 or -1"""
    pass


def to_int(value):
    """Coerce an integral value (Python or numpy integer, not bool) to int, else raise TypeError"""
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError("Expected an integer, got {!r}".format(value))
    return int(value)


def as_int_matrix(rows, name="matrix"):
    """
    Method to copy a nested sequence into a square-checked list of int rows

    Args:
        rows(list(list(int))): The matrix
        name(str): Used in error messages

    Returns:
        (list(list(int)))
    """
    try:
        matrix = [[to_int(x) for x in row] for row in rows]
    except TypeError:
        raise ValueError("{} must be a list of integer rows".format(name))
    if not matrix or any(len(row) != len(matrix) for row in matrix):
        raise DimensionError("{} must be a non-empty square matrix".format(name))
    return matrix


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(matrix):
    return [list(col) for col in zip(*matrix)]


def int_det(matrix):
    """Exact determinant by sympy's fraction-free elimination"""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise DimensionError("Determinant of a non-square matrix")
    if size == 0:
        return 1
    return int(Matrix(matrix).det(method="bareiss"))


def unimodular_inverse(matrix):
    """
    Method to invert an integer matrix of determinant +1 or -1

    Args:
        matrix(list(list(int))): square integer matrix

    Returns:
        (list(list(int))): the integer inverse, det * adjugate
    """
    det = int_det(matrix)
    if det not in (1, -1):
        raise NotUnimodularError("Matrix with determinant {} has no integer inverse".format(det))
    inverse = Matrix(matrix).adjugate(method="bareiss") * det
    return [[int(x) for x in inverse.row(i)] for i in range(inverse.rows)]


def random_unimodular(rng, n, steps=RANDOM_UNIMODULAR_STEPS, bound=3):
    """
    Method to draw a random unimodular matrix from elementary row operations

    Args:
        rng(numpy.random.Generator): seeded generator
        n(int): size
        steps(int): number of elementary operations applied to the identity
        bound(int): largest multiplier used in a row addition

    Returns:
        (list(list(int)))
    """
    matrix = identity(n)
    for _ in range(steps):
        op = int(rng.integers(0, 3))
        i = int(rng.integers(0, n))
        if op == 0 and n > 1:
            j = int(rng.integers(0, n - 1))
            if j >= i:
                j += 1
            scale = int(rng.integers(-bound, bound + 1))
            matrix[i] = [x + scale * y for x, y in zip(matrix[i], matrix[j])]
        elif op == 1 and n > 1:
            j = int(rng.integers(0, n))
            matrix[i], matrix[j] = matrix[j], matrix[i]
        else:
            matrix[i] = [-x for x in matrix[i]]
    return matrix


def is_permutation(matrix):
    """True when every row and column holds a single 1 and zeros elsewhere"""
    for rows in (matrix, transpose(matrix)):
        for row in rows:
            if sorted(row) != [0] * (len(row) - 1) + [1]:
                return False
    return True


def check_unimodular(matrix, size, name):
    """
    Method to validate a basis matrix: square of the given size with determinant +1 or -1

    Args:
        matrix(list(list(int))): rows are basis vectors in standard coordinates
        size(int): expected rank
        name(str): Used in error messages

    Returns:
        (int): the determinant
    """
    matrix = as_int_matrix(matrix, name)
    if len(matrix) != size:
        raise DimensionError("{} must be {}x{}, got {}x{}".format(name, size, size, len(matrix), len(matrix)))
    det = int_det(matrix)
    if det not in (1, -1):
        raise NotUnimodularError("{} has determinant {}, expected +1 or -1".format(name, det))
    return det
