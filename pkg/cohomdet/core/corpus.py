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
import logging
import os

from .config import load_input
from .consts import LOGGER_NAME
from .det import determinant, det_boundary
from .gluing import GluingInstance, verify_gluing
from .polyring import IntPoly

CORPUS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")


class CorpusError(LookupError):
    """Raised for an unknown corpus entry"""
    pass


class CorpusMismatchError(AssertionError):
    """Raised when a bundled expectation is not reproduced"""
    pass


class CorpusEntry(object):
    def __init__(self, name, description, provenance, subject, expected_d):
        """
        A bundled example with its expected determinant

        Args:
            name(str): Entry name, also the file stem
            description(str): Where the example comes from
            provenance(str): TRIVIAL or DERIVED followed by the oracle used
            subject(Form|GluingInstance): The form, or the gluing instance whose f_M carries expected_d
            expected_d(IntPoly): Expected determinant at standard bases
        """
        self.name = name
        self.description = description
        self.provenance = provenance
        self.subject = subject
        self.expected_d = expected_d

    def is_gluing(self):
        return isinstance(self.subject, GluingInstance)

    def recompute(self):
        """
        Method to recompute the determinant and, for gluing entries, the verification report

        Returns:
            (IntPoly, GluingReport|None)
        """
        if self.is_gluing():
            return det_boundary(self.subject.f_M), verify_gluing(self.subject)
        return determinant(self.subject), None

    def self_check(self):
        """
        Method to confirm the bundled expectation

        Raises:
            (CorpusMismatchError)
        """
        d, report = self.recompute()
        if d != self.expected_d:
            raise CorpusMismatchError("{}: computed {} but expected {}".format(self.name, d, self.expected_d))
        if report is not None and not report.passed:
            raise CorpusMismatchError("{}: gluing verification failed: {}".format(self.name, report.detail))


def corpus_list():
    """
    Method to list the bundled entries

    Returns:
        (list(str)): sorted names
    """
    return sorted(name[:-len(".json")] for name in os.listdir(CORPUS_DIR) if name.endswith(".json"))


def load_entry(name):
    """Method to load an entry without checking its expectation"""
    if name not in corpus_list():
        raise CorpusError("Unknown corpus entry: {}".format(name))
    configuration = load_input(os.path.join(CORPUS_DIR, "{}.json".format(name)))
    doc = configuration.config_data
    subject = configuration.to_instance() if configuration.is_gluing() else configuration.to_form()
    num_vars = subject.n
    return CorpusEntry(name, doc.get("description", ""), doc.get("provenance", ""), subject,
                       IntPoly.parse(doc["expected_d"], num_vars))


def corpus_get(name):
    """
    Method to load an entry and confirm its expected determinant

    Args:
        name(str): a name from corpus_list()

    Returns:
        (CorpusEntry)
    """
    entry = load_entry(name)
    entry.self_check()
    logging.getLogger(LOGGER_NAME).debug("Corpus entry {} reproduced {}".format(name, entry.expected_d))
    return entry


def verify_corpus():
    """
    Method to re-verify every bundled entry

    Returns:
        (list(tuple(str, bool, str))): name, passed, message
    """
    results = []
    for name in corpus_list():
        try:
            entry = corpus_get(name)
        except CorpusMismatchError as err:
            results.append((name, False, str(err)))
        else:
            results.append((name, True, "d = {}".format(entry.expected_d)))
    return results
