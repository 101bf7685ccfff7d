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
"""Solid-torus gluing: matched pairs (f_M, f_Mbar) and exact checks of the identities relating their
determinants.

M has a torus boundary component T and Mbar is M with a solid torus glued along T. The map
(iota_M)_*: S -> Sbar is a linear substitution of dual variables given by an integer matrix whose row i
is the image of a_i*.
"""
from enum import IntEnum
import itertools
import logging

import numpy as np
import six

from .consts import LOGGER_NAME, RANDOM_ENTRY_BOUND
from .det import det_boundary, det_closed, DeterminantError
from .forms import BoundaryForm, ClosedForm, alternating_tensor, skew_tensor, random_boundary_form, \
    random_closed_form
from .polyring import IntPoly, DimensionError, substitute_linear
from cohomdet.utils.intmatrix import identity, is_permutation, to_int


class GluingInputError(ValueError):
    """Raised when gluing data is inconsistent"""
    pass


class VacuousCaseError(GluingInputError):
    """Raised for rank data that no manifold realises"""
    pass


class GluingCase(IntEnum):
    # another boundary component and the image of H1(T) is not rank 2
    ZERO_DETERMINANT = 1
    # T is the whole boundary and b1 drops
    ZERO_IMAGE = 2
    # another boundary component and the image of H1(T) is rank 2
    RANK_TWO_IMAGE = 3
    # T is the whole boundary and b1 is kept
    CLOSED_TARGET = 4


def _sign(value, name):
    if value not in (1, -1) or isinstance(value, bool):
        raise GluingInputError("{} must be +1 or -1, got {}".format(name, value))
    return int(value)


def _positive(value, name):
    try:
        value = to_int(value)
    except TypeError:
        raise GluingInputError("{} must be an integer".format(name))
    if value < 1:
        raise GluingInputError("{} must be >= 1, got {}".format(name, value))
    return value


class GluingInstance(object):
    def __init__(self, case, f_M, f_Mbar=None, iota=None, k=1, m=1, tors_M=1, tors_Mbar=1, ell_index=None,
                 s0=None, omega=1, omega_bar=None):
        """
        A matched pair of forms plus the gluing data of one case

        Args:
            case(GluingCase|int): 1 to 4
            f_M(BoundaryForm): form of M, rank n
            f_Mbar(ClosedForm|BoundaryForm): form of Mbar; optional in cases 1 and 2
            iota(list(list(int))): n rows, row i the image of a_i* in the dual variables of Mbar
            k(int): pairing of the surviving class with the solid torus longitude
            m(int): torsion multiplicity introduced by the gluing (case 3)
            tors_M(int): order of the torsion of H1(M)
            tors_Mbar(int): order of the torsion of H1(Mbar)
            ell_index(int): 1-based index of the Mbar dual variable carrying l = k * alpha*
            s0(int): +1 or -1, sign of the case-4 torsion-weighted identity; that check is skipped when None
            omega(int): sign of the standard bases of M under its homology orientation
            omega_bar(int): sign relating d(f_Mbar) at standard bases to Det of Mbar; defaults to -omega
        """
        try:
            self.case = GluingCase(case)
        except ValueError:
            raise GluingInputError("Unknown gluing case: {}".format(case))
        if not isinstance(f_M, BoundaryForm):
            raise GluingInputError("f_M must be a boundary form")
        self.f_M = f_M
        self.f_Mbar = f_Mbar
        self.iota = None if iota is None else [[to_int(x) for x in row] for row in iota]
        self.k = _positive(k, "k")
        self.m = _positive(m, "m")
        self.tors_M = _positive(tors_M, "tors_M")
        self.tors_Mbar = _positive(tors_Mbar, "tors_Mbar")
        self.ell_index = ell_index
        self.s0 = None if s0 is None else _sign(s0, "s0")
        self.omega = _sign(omega, "omega")
        self.omega_bar = -self.omega if omega_bar is None else _sign(omega_bar, "omega_bar")
        self._check()

    @property
    def n(self):
        return self.f_M.n

    def _check_iota(self, cols):
        if self.iota is None:
            raise GluingInputError("Case {} needs iota".format(int(self.case)))
        if len(self.iota) != self.n or any(len(row) != cols for row in self.iota):
            raise GluingInputError("iota must be {}x{}".format(self.n, cols))

    def _check_ell(self, count):
        if self.ell_index is None or not 1 <= self.ell_index <= count:
            raise GluingInputError("ell_index must lie in 1..{}, got {}".format(count, self.ell_index))

    def _check(self):
        n = self.n
        if self.case in (GluingCase.ZERO_IMAGE, GluingCase.RANK_TWO_IMAGE):
            self._check_iota(n - 1)
            zero_rows = [i for i, row in enumerate(self.iota) if not any(row)]
            if len(zero_rows) != 1:
                raise GluingInputError("iota must kill exactly one dual variable, kills {}".format(len(zero_rows)))
            if zero_rows != [n - 1]:
                raise GluingInputError("iota must kill a{}*, kills a{}*".format(n, zero_rows[0] + 1))
        if self.case == GluingCase.ZERO_DETERMINANT and self.iota is not None:
            self._check_iota(len(self.iota[0]) if self.iota else 0)
        if self.case == GluingCase.RANK_TWO_IMAGE:
            if not isinstance(self.f_Mbar, BoundaryForm) or self.f_Mbar.n != n - 1:
                raise GluingInputError("Case 3 needs a boundary form f_Mbar of rank {}".format(n - 1))
            self._check_ell(n - 1)
            if self.ell_index != n - 1:
                raise GluingInputError("Case 3 needs ell_index = {}, got {}".format(n - 1, self.ell_index))
            last_row = self.f_M.tensor[n - 2]
            for j, col in itertools.product(range(n), repeat=2):
                if last_row[j, col] and {j, col} != {n - 2, n - 1}:
                    raise GluingInputError("Case 3 needs f_M(b{}, a{}, a{}) = 0, got {}".format(
                        n - 1, j + 1, col + 1, last_row[j, col]))
            corner = self.f_M.tensor[n - 2, n - 2, n - 1]
            if corner != self.k * self.m:
                raise GluingInputError("Corner value f_M(b{0}, a{0}, a{1}) = {2} differs from k*m = {3}".format(
                    n - 1, n, corner, self.k * self.m))
            if self.tors_Mbar != self.m * self.tors_M:
                raise GluingInputError("Case 3 needs tors_Mbar = m * tors_M")
        if self.case == GluingCase.CLOSED_TARGET:
            if not isinstance(self.f_Mbar, ClosedForm) or self.f_Mbar.n != n:
                raise GluingInputError("Case 4 needs a closed form f_Mbar of rank {}".format(n))
            self._check_iota(n)
            if not is_permutation(self.iota):
                raise GluingInputError("Case 4 needs iota to relabel the dual variables")
            self._check_ell(n)
            if self.iota[n - 1][self.ell_index - 1] != 1:
                raise GluingInputError("ell_index must be the image of a{}*".format(n))
            if self.tors_M != self.k * self.tors_Mbar:
                raise GluingInputError("Case 4 needs tors_M = k * tors_Mbar")

    def ell(self):
        """l = k * alpha*_{ell_index} in the dual variables of Mbar"""
        count = len(self.iota[0])
        return IntPoly.variable(count, self.ell_index - 1) * self.k

    def __repr__(self):
        return "GluingInstance(case={}, n={})".format(int(self.case), self.n)


class GluingCheck(object):
    def __init__(self, name, lhs, rhs):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs

    @property
    def passed(self):
        return self.lhs == self.rhs


class GluingReport(object):
    def __init__(self, case, checks):
        """
        Outcome of verifying one instance

        lhs and rhs come from the first failing check, or from the first check when all pass, so the
        verdict is pass exactly when lhs equals rhs.

        Args:
            case(GluingCase):
            checks(list(GluingCheck)): principal check first
        """
        if not checks:
            raise ValueError("A report needs at least one check")
        self.case = case
        self.checks = list(checks)
        failing = [check for check in self.checks if not check.passed]
        self._shown = failing[0] if failing else self.checks[0]

    @property
    def lhs(self):
        return self._shown.lhs

    @property
    def rhs(self):
        return self._shown.rhs

    @property
    def passed(self):
        return self.lhs == self.rhs

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    @property
    def detail(self):
        return "{}: {} {} {}".format(self._shown.name, self.lhs, "==" if self.passed else "!=", self.rhs)


def iota_star(p, inst):
    """
    Method to apply (iota_M)_* to a polynomial of M

    Args:
        p(IntPoly): polynomial in the n dual variables of M
        inst(GluingInstance):

    Returns:
        (IntPoly): polynomial in the dual variables of Mbar
    """
    if inst.iota is None:
        raise GluingInputError("Instance has no iota")
    if p.num_vars != inst.n:
        raise DimensionError("Polynomial has {} variables, instance has n={}".format(p.num_vars, inst.n))
    return substitute_linear(p, inst.iota)


def classify_case(r, boundary_is_only_T, b1_M, b1_Mbar):
    """
    Method to pick the gluing case from rank data

    Args:
        r(int): rank of the image of H1(T) in H1(M), 0 to 2
        boundary_is_only_T(bool): T is the whole boundary of M
        b1_M(int): first Betti number of M
        b1_Mbar(int): first Betti number of Mbar

    Returns:
        (GluingCase)

    Raises:
        (GluingInputError): b1 changes by something other than 0 or 1, or r is out of range
        (VacuousCaseError): r = 0 with another boundary component
    """
    if r not in (0, 1, 2):
        raise GluingInputError("Rank of the image of H1(T) must be 0, 1 or 2, got {}".format(r))
    drop = b1_M - b1_Mbar
    if drop not in (0, 1):
        raise GluingInputError("b1(Mbar) must be b1(M) or b1(M) - 1, got {} and {}".format(b1_M, b1_Mbar))
    if not boundary_is_only_T:
        if r == 0:
            raise VacuousCaseError("Image of H1(T) cannot have rank 0 when M has another boundary component")
        return GluingCase.ZERO_DETERMINANT if r == 1 else GluingCase.RANK_TWO_IMAGE
    return GluingCase.ZERO_IMAGE if drop == 1 else GluingCase.CLOSED_TARGET


def _killing_iota(n):
    # a_i* -> alpha_i* for i < n, a_n* -> 0
    return identity(n - 1) + [[0] * (n - 1)]


def make_case1_instance(f_head, omega=1):
    """
    Method to build a case-1 instance: the b_{n-1} row of f_M is zero

    Args:
        f_head(list|numpy.ndarray): (n-2) x n x n tensor skew in its last two slots
        omega(int): orientation sign of M

    Returns:
        (GluingInstance)
    """
    head = np.array(f_head, dtype=object)
    if head.ndim != 3 or head.shape[1] != head.shape[2] or head.shape[0] != head.shape[1] - 2:
        raise DimensionError("f_head must be (n-2) x n x n, got {}".format(head.shape))
    n = head.shape[1]
    if n < 3:
        raise DimensionError("Case 1 needs n >= 3")
    tensor = np.concatenate([head, np.zeros((1, n, n), dtype=object)])
    return GluingInstance(GluingCase.ZERO_DETERMINANT, BoundaryForm(tensor, n), omega=omega)


def make_case2_instance(F, G, omega=1):
    """
    Method to build a case-2 instance from an alternating F and an antisymmetric G

    Args:
        F(list|numpy.ndarray): (n-1) x (n-1) x (n-1) fully alternating tensor
        G(list|numpy.ndarray): (n-1) x (n-1) antisymmetric matrix, G[i][k] = f_M(b_i, a_n, a_k)
        omega(int): orientation sign of M

    Returns:
        (GluingInstance)
    """
    f_Mbar = ClosedForm(F, len(F))
    n = f_Mbar.n + 1
    g = np.array(G, dtype=object)
    if g.shape != (n - 1, n - 1):
        raise DimensionError("G must be {0}x{0}, got {1}".format(n - 1, g.shape))
    if any(g[i, k] != -g[k, i] for i in range(n - 1) for k in range(n - 1)):
        raise GluingInputError("G must be antisymmetric")
    tensor = np.zeros((n - 1, n, n), dtype=object)
    tensor[:, :n - 1, :n - 1] = f_Mbar.tensor
    for i in range(n - 1):
        for k in range(n - 1):
            tensor[i, n - 1, k] = g[i, k]
            tensor[i, k, n - 1] = -g[i, k]
    return GluingInstance(GluingCase.ZERO_IMAGE, BoundaryForm(tensor, n), f_Mbar=f_Mbar, iota=_killing_iota(n),
                          omega=omega)


def make_case3_instance(fbar, v, k=1, m=1, tors_M=1, omega=1, omega_bar=None):
    """
    Method to build a case-3 instance around the boundary form of Mbar

    f_M agrees with fbar on the first n-1 variables, pairs b_i with a_n through v, and its last row holds
    only D = k*m at (a_{n-1}, a_n). The torsion of H1(Mbar) is m times that of H1(M).

    Args:
        fbar(BoundaryForm): form of Mbar, rank n-1 >= 2
        v(list(list(int))): (n-2) x (n-1), v[i][j] = f_M(b_i, a_j, a_n)
        k(int): >= 1
        m(int): >= 1
        tors_M(int): torsion order of H1(M)
        omega(int): orientation sign of M
        omega_bar(int): orientation sign of Mbar; defaults to -omega

    Returns:
        (GluingInstance)
    """
    if not isinstance(fbar, BoundaryForm):
        raise GluingInputError("Case 3 needs a boundary form for Mbar")
    n = fbar.n + 1
    k = _positive(k, "k")
    m = _positive(m, "m")
    v = np.array(v, dtype=object)
    if v.shape != (n - 2, n - 1):
        raise DimensionError("v must be {}x{}, got {}".format(n - 2, n - 1, v.shape))
    tensor = np.zeros((n - 1, n, n), dtype=object)
    tensor[:n - 2, :n - 1, :n - 1] = fbar.tensor
    for i in range(n - 2):
        for j in range(n - 1):
            tensor[i, j, n - 1] = v[i, j]
            tensor[i, n - 1, j] = -v[i, j]
    tensor[n - 2, n - 2, n - 1] = k * m
    tensor[n - 2, n - 1, n - 2] = -k * m
    logging.getLogger(LOGGER_NAME).debug("Case 3 instance with n={}, D={}".format(n, k * m))
    return GluingInstance(GluingCase.RANK_TWO_IMAGE, BoundaryForm(tensor, n), f_Mbar=fbar, iota=_killing_iota(n),
                          k=k, m=m, tors_M=tors_M, tors_Mbar=m * _positive(tors_M, "tors_M"), ell_index=n - 1,
                          omega=omega, omega_bar=omega_bar)


def make_case4_instance(fbar, k=1, tors_Mbar=1, s0=None, omega=1):
    """
    Method to build a case-4 instance: theta of M is all but the last row of the closed theta of Mbar

    Args:
        fbar(ClosedForm): form of Mbar, rank n >= 3
        k(int): >= 1, so l = k * alpha_n*
        tors_Mbar(int): torsion order of H1(Mbar); tors_M = k * tors_Mbar
        s0(int): sign of the torsion-weighted identity; defaults to (-1)^n * omega
        omega(int): orientation sign of M

    Returns:
        (GluingInstance)
    """
    if not isinstance(fbar, ClosedForm):
        raise GluingInputError("Case 4 needs a closed form for Mbar")
    n = fbar.n
    k = _positive(k, "k")
    tors_Mbar = _positive(tors_Mbar, "tors_Mbar")
    omega = _sign(omega, "omega")
    if s0 is None:
        s0 = omega * (-1) ** n
    f_M = BoundaryForm(fbar.tensor[:n - 1], n)
    return GluingInstance(GluingCase.CLOSED_TARGET, f_M, f_Mbar=fbar, iota=identity(n), k=k,
                          tors_M=k * tors_Mbar, tors_Mbar=tors_Mbar, ell_index=n, s0=s0, omega=omega)


def _side(form, compute, label):
    try:
        return compute(form)
    except ArithmeticError as err:
        six.raise_from(DeterminantError("{}: {}".format(label, err)), err)


def verify_gluing(inst):
    """
    Method to check the gluing identities of an instance exactly

    Args:
        inst(GluingInstance):

    Returns:
        (GluingReport)
    """
    n = inst.n
    d_M = _side(inst.f_M, det_boundary, "f_M")
    log = logging.getLogger(LOGGER_NAME)
    log.debug("d(f_M) = {}".format(d_M))

    if inst.case == GluingCase.ZERO_DETERMINANT:
        zero = IntPoly.zero(n)
        checks = [GluingCheck("d(f_M) = 0", d_M, zero),
                  GluingCheck("Det_omega(f_M) = 0", d_M * inst.omega, zero)]
    elif inst.case == GluingCase.ZERO_IMAGE:
        zero = IntPoly.zero(n - 1)
        image = iota_star(d_M, inst)
        checks = [GluingCheck("iota_*(d(f_M)) = 0", image, zero),
                  GluingCheck("iota_*(Det_omega(f_M)) = 0", image * inst.omega, zero)]
    elif inst.case == GluingCase.RANK_TWO_IMAGE:
        d_bar = _side(inst.f_Mbar, det_boundary, "f_Mbar")
        ell = inst.ell()
        image = iota_star(d_M, inst)
        checks = [GluingCheck("iota_*(d(f_M)) = -m*l*d(f_Mbar)", image, ell * d_bar * (-inst.m)),
                  GluingCheck("|Tors H1(M)|*iota_*(Det(f_M)) = |Tors H1(Mbar)|*l*Det(f_Mbar)",
                              image * (inst.tors_M * inst.omega),
                              ell * d_bar * (inst.tors_Mbar * inst.omega_bar))]
    else:
        d_bar = _side(inst.f_Mbar, det_closed, "f_Mbar")
        image = iota_star(d_M, inst)
        a_n = iota_star(IntPoly.variable(n, n - 1), inst)
        checks = [GluingCheck("iota_*(d(f_M)) = (-1)^n*iota_*(a_n*)*d(f_Mbar)", image, a_n * d_bar * (-1) ** n)]
        if inst.s0 is not None:
            checks.append(GluingCheck("|Tors H1(M)|*iota_*(Det(f_M)) = s0*|Tors H1(Mbar)|*l*Det(f_Mbar)",
                                      image * (inst.tors_M * inst.omega),
                                      inst.ell() * d_bar * (inst.s0 * inst.tors_Mbar)))

    report = GluingReport(inst.case, checks)
    log.debug("Case {} verification: {}".format(int(inst.case), report.detail))
    return report


def random_case1_instance(seed, n, bound=RANDOM_ENTRY_BOUND):
    rng = np.random.default_rng(seed)
    return make_case1_instance(skew_tensor(rng, n - 2, n, bound))


def random_case2_instance(seed, n, bound=RANDOM_ENTRY_BOUND):
    rng = np.random.default_rng(seed)
    F = alternating_tensor(rng, n - 1, bound)
    G = skew_tensor(rng, 1, n - 1, bound)[0]
    return make_case2_instance(F, G)


def random_case3_instance(seed, n, bound=RANDOM_ENTRY_BOUND):
    """Random case-3 instance with k, m in [1, 4]"""
    rng = np.random.default_rng(seed)
    fbar = random_boundary_form(rng, n - 1, bound)
    v = rng.integers(-bound, bound + 1, size=(n - 2, n - 1)).astype(object)
    k, m = (int(x) for x in rng.integers(1, 5, size=2))
    return make_case3_instance(fbar, v, k=k, m=m, tors_M=int(rng.integers(1, 4)))


def random_case4_instance(seed, n, bound=RANDOM_ENTRY_BOUND):
    rng = np.random.default_rng(seed)
    fbar = random_closed_form(rng, n, bound)
    return make_case4_instance(fbar, k=int(rng.integers(1, 5)), tors_Mbar=int(rng.integers(1, 4)))


RANDOM_GENERATORS = {GluingCase.ZERO_DETERMINANT: random_case1_instance,
                     GluingCase.ZERO_IMAGE: random_case2_instance,
                     GluingCase.RANK_TWO_IMAGE: random_case3_instance,
                     GluingCase.CLOSED_TARGET: random_case4_instance}
