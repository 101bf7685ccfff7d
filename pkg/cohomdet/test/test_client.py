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

import json
import os
import unittest

import six

try:
    import mock
except ImportError:
    from unittest import mock

from cohomdet import __version__
from cohomdet.client import run
from cohomdet.core.corpus import CORPUS_DIR, corpus_list
from cohomdet.test.harness import data_path


def corpus_path(name):
    return os.path.join(CORPUS_DIR, "{}.json".format(name))


def invoke(argv, stdin_text=None):
    """Run the client and capture (exit code, stdout, stderr)"""
    out = six.StringIO()
    err = six.StringIO()
    stdin = six.StringIO(stdin_text if stdin_text is not None else "")
    with mock.patch('sys.stdout', out), mock.patch('sys.stderr', err), mock.patch('sys.stdin', stdin):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


class TestDet(unittest.TestCase):

    def test_torus(self):
        code, out, _ = invoke(["det", "--input", corpus_path("torus3")])
        assert code == 0
        assert out.strip() == "1"

    def test_json(self):
        code, out, _ = invoke(["det", "--input", corpus_path("boundary-n3-levi-civita"), "--format", "json"])
        assert code == 0
        assert json.loads(out) == {"d": "-a3", "degree": 1}

    def test_orientation(self):
        """Method to test that the sign-refined determinant flips with the orientation"""
        code, out, _ = invoke(["det", "-i", corpus_path("torus3"), "--orientation", "-1", "--format", "json"])
        assert code == 0
        assert json.loads(out) == {"d": "-1", "degree": 0, "orientation": -1}

    def test_basis(self):
        code, out, _ = invoke(["det", "-i", corpus_path("rank2-boundary-D1"), "--basis-a", "[[0, 1], [1, 0]]"])
        assert code == 0
        assert out.strip() == "-1"

    def test_basis_with_orientation(self):
        """Method to test that Det_omega does not depend on the bases used to compute it"""
        code, out, _ = invoke(["det", "-i", corpus_path("rank2-boundary-D1"), "--basis-a", "[[0, 1], [1, 0]]",
                               "--orientation", "1"])
        assert code == 0
        assert out.strip() == "1"

    def test_bad_basis(self):
        code, _, err = invoke(["det", "-i", corpus_path("torus3"), "--basis-a", "[[1, 1], [1, 1]]"])
        assert code == 2
        assert err.startswith("error:")

        code, _, _ = invoke(["det", "-i", corpus_path("torus3"), "--basis-a", "[[1, 0"])
        assert code == 2

    def test_stdin(self):
        with open(corpus_path("massey-n2-m2"), 'rt') as example_file:
            code, out, _ = invoke(["det"], example_file.read())
        assert code == 0
        assert out.strip() == "a1"

    def test_zero_degree_is_null(self):
        doc = {"kind": "boundary", "n": 2, "entries": []}
        code, out, _ = invoke(["det", "--format", "json"], json.dumps(doc))
        assert code == 0
        assert json.loads(out) == {"d": "0", "degree": None}

    def test_deterministic(self):
        first = invoke(["det", "-i", corpus_path("boundary-n3-levi-civita")])
        second = invoke(["det", "-i", corpus_path("boundary-n3-levi-civita")])
        assert first == second

    @mock.patch('cohomdet.client.determinant', side_effect=MemoryError)
    def test_out_of_memory(self, fake_det):
        """Method to test that running out of memory is reported as an input error"""
        code, out, err = invoke(["det", "-i", corpus_path("torus3")])
        assert code == 2
        assert out == ""
        assert err == "error: input is too large to hold in memory\n"
        assert fake_det.called


class TestVerify(unittest.TestCase):

    def test_case1(self):
        code, out, _ = invoke(["verify", "--input", data_path("case1.json")])
        assert code == 0
        assert out.splitlines()[0] == "pass (case 1)"

    def test_corpus_instance_json(self):
        code, out, _ = invoke(["verify", "-i", corpus_path("case3-n3"), "--format", "json"])
        assert code == 0
        result = json.loads(out)
        assert result["verdict"] == "pass"
        assert result["lhs"] == "-a2"

    def test_failing_instance(self):
        """Method to test that a wrong case-4 sign exits 1 with a fail verdict"""
        with open(corpus_path("case4-n3"), 'rt') as example_file:
            doc = json.load(example_file)
        doc["s0"] = 1
        code, out, _ = invoke(["verify"], json.dumps(doc))
        assert code == 1
        assert out.startswith("fail (case 4)")

    def test_tensor_document(self):
        code, _, err = invoke(["verify", "-i", corpus_path("torus3")])
        assert code == 2
        assert "gluing" in err


class TestGenerate(unittest.TestCase):

    def test_generate_then_verify(self):
        for case, n in ((1, 3), (2, 4), (3, 4), (4, 3)):
            code, out, _ = invoke(["generate", "--case", str(case), "--n", str(n), "--seed", "11"])
            assert code == 0
            doc = json.loads(out)
            assert doc["case"] == case
            code, out, _ = invoke(["verify"], json.dumps(doc))
            assert code == 0, out

    def test_seeded(self):
        first = invoke(["generate", "--case", "3", "--n", "5", "--seed", "3"])[1]
        second = invoke(["generate", "--case", "3", "--n", "5", "--seed", "3"])[1]
        assert first == second

    def test_too_small(self):
        code, _, err = invoke(["generate", "--case", "2", "--n", "3"])
        assert code == 2
        assert "4 <= --n <= 8" in err

    def test_too_large(self):
        code, _, err = invoke(["generate", "--case", "1", "--n", "9"])
        assert code == 2
        assert "--n <= 8" in err


class TestCheck(unittest.TestCase):

    def test_valid(self):
        code, out, _ = invoke(["check", "-i", corpus_path("torus3")])
        assert code == 0
        assert out.startswith("valid closed form: n=3")

    def test_valid_json(self):
        code, out, _ = invoke(["check", "-i", corpus_path("case4-n3"), "--format", "json"])
        assert code == 0
        assert json.loads(out) == {"valid": True, "kind": "gluing"}

    def test_not_skew(self):
        code, out, err = invoke(["check", "-i", data_path("bad-not-skew.json")])
        assert code == 2
        assert out == ""
        assert "(1, 1, 2)" in err

    def test_malformed(self):
        code, _, err = invoke(["check", "-i", data_path("malformed.json")])
        assert code == 2
        assert "Malformed" in err

    def test_missing_field(self):
        code, _, err = invoke(["check", "-i", data_path("missing-field.json")])
        assert code == 2
        assert "entries" in err

    def test_rank_too_large(self):
        """Method to test that a huge rank is refused before any dense tensor is allocated"""
        doc = {"kind": "closed", "n": 100000, "entries": [{"idx": [1, 2, 3], "val": 1}]}
        code, out, err = invoke(["check"], json.dumps(doc))
        assert code == 2
        assert out == ""
        assert err.startswith("error:")

    def test_massey_order_too_large(self):
        doc = {"kind": "massey", "n": 3, "m": 1000000, "entries": []}
        code, _, err = invoke(["check"], json.dumps(doc))
        assert code == 2
        assert "dense entries" in err

    def test_case3_wrong_killed_variable(self):
        with open(corpus_path("case3-n3"), 'rt') as example_file:
            doc = json.load(example_file)
        doc["iota"] = [[0, 0], [1, 0], [0, 1]]
        code, _, err = invoke(["check"], json.dumps(doc))
        assert code == 2
        assert "a3*" in err


class TestCorpusCommand(unittest.TestCase):

    def test_list(self):
        code, out, _ = invoke(["corpus"])
        assert code == 0
        assert out.split() == corpus_list()

    def test_show(self):
        code, out, _ = invoke(["corpus", "torus3"])
        assert code == 0
        assert "expected d: 1" in out

    def test_unknown(self):
        code, _, err = invoke(["corpus", "lens-space"])
        assert code == 2
        assert "lens-space" in err

    def test_verify(self):
        code, out, _ = invoke(["corpus", "--verify", "--format", "json"])
        assert code == 0
        assert all(item["passed"] for item in json.loads(out))


class TestParser(unittest.TestCase):

    def test_version(self):
        code, out, _ = invoke(["--version"])
        assert code == 0
        assert __version__ in out

    def test_no_command(self):
        code, _, err = invoke([])
        assert code == 2
        assert "command" in err

    def test_unknown_flag(self):
        code, _, _ = invoke(["det", "--bogus"])
        assert code == 2

    def test_bad_choice(self):
        code, _, _ = invoke(["det", "--orientation", "2"])
        assert code == 2

    def test_bad_log_level(self):
        code, _, err = invoke(["det", "-i", corpus_path("torus3"), "--log-level", "loud"])
        assert code == 2
        assert "loud" in err

    def test_help(self):
        code, out, _ = invoke(["--help"])
        assert code == 0
        assert "verify" in out
