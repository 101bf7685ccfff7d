"""Helpers shared by the test suites.

cofactor_det is a deliberately plain recursive expansion along the first row; it shares no code with the
determinant routines under test.
"""
import os

import numpy as np

from cohomdet.core.polyring import IntPoly, PolyMatrix


def cofactor_det(rows):
    """Determinant of a square list of IntPoly rows by first-row cofactor expansion"""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    total = IntPoly.zero(rows[0][0].num_vars)
    for col in range(size):
        entry = rows[0][col]
        if entry.is_zero():
            continue
        sub = [[x for j, x in enumerate(row) if j != col] for row in rows[1:]]
        term = entry * cofactor_det(sub)
        total = total - term if col % 2 else total + term
    return total


def random_poly(rng, num_vars, max_degree, bound=9, num_terms=3, homogeneous=False):
    """Random polynomial with up to num_terms terms and coefficients in [-bound, bound]"""
    terms = {}
    for _ in range(num_terms):
        degree = max_degree if homogeneous else int(rng.integers(0, max_degree + 1))
        exponents = [0] * num_vars
        for _ in range(degree):
            exponents[int(rng.integers(0, num_vars))] += 1
        key = tuple(exponents)
        terms[key] = terms.get(key, 0) + int(rng.integers(-bound, bound + 1))
    return IntPoly(num_vars, terms)


def random_poly_matrix(rng, rows, cols, num_vars, max_degree, bound=9, homogeneous=False):
    return PolyMatrix.from_rows([[random_poly(rng, num_vars, max_degree, bound, homogeneous=homogeneous)
                                  for _ in range(cols)] for _ in range(rows)])


def rng_for(seed):
    return np.random.default_rng(seed)


def data_path(name):
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", name)
