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
"""Conversion between library objects and their JSON documents.

Tensor documents list nonzero entries with 1-based indices:
    {"kind": "boundary", "n": 2, "entries": [{"idx": [1, 1, 2], "val": 5}, {"idx": [1, 2, 1], "val": -5}]}
"""
import numpy as np

from .consts import KIND_CLOSED, KIND_BOUNDARY, KIND_MASSEY, KIND_GLUING, MAX_RANK, MAX_DENSE_ENTRIES
from .forms import ClosedForm, BoundaryForm, MasseyForm, TensorFormatError
from .gluing import GluingInstance, GluingInputError


def tensor_shape(kind, n, m=None):
    """
    Method to get the dense shape of a tensor document

    Args:
        kind(str): closed, boundary or massey
        n(int): rank
        m(int): Massey order (massey only)

    Returns:
        (tuple(int))

    Raises:
        (TensorFormatError): unknown kind, n outside 2..MAX_RANK or more than MAX_DENSE_ENTRIES entries
    """
    if not 2 <= n <= MAX_RANK:
        raise TensorFormatError("n must be between 2 and {}, got {}".format(MAX_RANK, n))
    if kind == KIND_CLOSED:
        return (n,) * 3
    if kind == KIND_BOUNDARY:
        return (n - 1, n, n)
    if kind != KIND_MASSEY:
        raise TensorFormatError("Unknown tensor kind: {}".format(kind))
    # grow one slot at a time so a huge m stops early
    shape = (n - 1,)
    size = n - 1
    for _ in range(m + 1):
        size *= n
        if size > MAX_DENSE_ENTRIES:
            raise TensorFormatError("A massey tensor with n={} and m={} exceeds {} dense entries".format(
                n, m, MAX_DENSE_ENTRIES))
        shape += (n,)
    return shape


def entry_errors(entries, shape):
    """
    Method to list problems with a sparse entry list

    Args:
        entries(list(dict)): {"idx": [...], "val": int} items with 1-based indices
        shape(tuple(int)): dense shape the indices address

    Returns:
        (list(str)): one message per problem, empty when the entries are usable
    """
    errors = []
    seen = set()
    if not isinstance(entries, list):
        return ["Entries must be a list"]
    for position, entry in enumerate(entries):
        if not isinstance(entry, dict):
            errors.append("Entry {} must be an object".format(position + 1))
            continue
        idx = entry.get("idx")
        if not isinstance(idx, list) or len(idx) != len(shape):
            errors.append("Entry {} must have an index of {} integers".format(position + 1, len(shape)))
            continue
        if any(isinstance(i, bool) or not isinstance(i, int) for i in idx):
            errors.append("Entry {} has a non-integer index {}".format(position + 1, idx))
            continue
        if any(not 1 <= i <= size for i, size in zip(idx, shape)):
            errors.append("Entry {} index {} is out of range for shape {}".format(position + 1, idx, shape))
            continue
        key = tuple(idx)
        if key in seen:
            errors.append("Duplicate entry for index {}".format(idx))
        seen.add(key)
        value = entry.get("val")
        if isinstance(value, bool) or not isinstance(value, int):
            errors.append("Entry {} value must be an integer".format(position + 1))
    return errors


def _dense(entries, shape):
    errors = entry_errors(entries, shape)
    if errors:
        raise TensorFormatError(errors[0])
    tensor = np.zeros(shape, dtype=object)
    for entry in entries:
        tensor[tuple(i - 1 for i in entry["idx"])] = entry["val"]
    return tensor


def form_from_dict(doc):
    """
    Method to build and validate a form from its document

    Args:
        doc(dict): tensor document

    Returns:
        (Form)
    """
    kind = doc.get("kind")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise TensorFormatError("Tensor document needs an integer n")
    if kind == KIND_MASSEY:
        m = doc.get("m")
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise TensorFormatError("Massey document needs an integer m >= 1")
        return MasseyForm(_dense(doc.get("entries", []), tensor_shape(kind, n, m)), n, m)
    if kind == KIND_CLOSED:
        if n < 3:
            raise TensorFormatError("A closed form needs n >= 3, got {}".format(n))
        return ClosedForm(_dense(doc.get("entries", []), tensor_shape(kind, n)), n)
    if kind == KIND_BOUNDARY:
        if n < 2:
            raise TensorFormatError("A boundary form needs n >= 2, got {}".format(n))
        return BoundaryForm(_dense(doc.get("entries", []), tensor_shape(kind, n)), n)
    raise TensorFormatError("Unknown tensor kind: {}".format(kind))


def form_to_dict(form):
    doc = {"kind": form.kind, "n": form.n,
           "entries": [{"idx": list(idx), "val": value} for idx, value in form.entries()]}
    if form.kind == KIND_MASSEY:
        doc["m"] = form.m
    return doc


_INSTANCE_FIELDS = ("k", "m", "tors_M", "tors_Mbar", "ell_index", "s0", "omega", "omega_bar")


def instance_from_dict(doc):
    """
    Method to build a gluing instance from its document

    Args:
        doc(dict): {"kind": "gluing", "case": 1-4, "f_M": {...}, "f_Mbar": {...}, "iota": [[...]], ...}

    Returns:
        (GluingInstance)
    """
    if doc.get("kind") != KIND_GLUING:
        raise GluingInputError("Not a gluing document")
    if "f_M" not in doc:
        raise GluingInputError("Gluing document needs f_M")
    f_M = form_from_dict(doc["f_M"])
    f_Mbar = form_from_dict(doc["f_Mbar"]) if doc.get("f_Mbar") is not None else None
    kwargs = {name: doc[name] for name in _INSTANCE_FIELDS if doc.get(name) is not None}
    return GluingInstance(doc.get("case"), f_M, f_Mbar=f_Mbar, iota=doc.get("iota"), **kwargs)


def instance_to_dict(inst):
    doc = {"kind": KIND_GLUING,
           "case": int(inst.case),
           "f_M": form_to_dict(inst.f_M),
           "k": inst.k,
           "m": inst.m,
           "tors_M": inst.tors_M,
           "tors_Mbar": inst.tors_Mbar,
           "omega": inst.omega,
           "omega_bar": inst.omega_bar}
    if inst.f_Mbar is not None:
        doc["f_Mbar"] = form_to_dict(inst.f_Mbar)
    if inst.iota is not None:
        doc["iota"] = [list(row) for row in inst.iota]
    if inst.ell_index is not None:
        doc["ell_index"] = inst.ell_index
    if inst.s0 is not None:
        doc["s0"] = inst.s0
    return doc


def report_to_dict(report):
    """Method to encode a GluingReport with canonical polynomial text"""
    return {"case": int(report.case),
            "verdict": report.verdict,
            "lhs": report.lhs.to_text(),
            "rhs": report.rhs.to_text(),
            "detail": report.detail,
            "checks": [{"name": check.name,
                        "lhs": check.lhs.to_text(),
                        "rhs": check.rhs.to_text(),
                        "passed": check.passed} for check in report.checks]}
