#!/usr/bin/env python
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

from cohomdet import print_version
from cohomdet.core.config import load_input, InputFileError
from cohomdet.core.consts import EXIT_OK, EXIT_FAIL, EXIT_INPUT, LOGGER_NAME, MAX_RANK
from cohomdet.core.corpus import corpus_list, corpus_get, verify_corpus, CorpusMismatchError
from cohomdet.core.codec import instance_to_dict, report_to_dict
from cohomdet.core.det import BasisPair, Orientation, determinant, sign_refine
from cohomdet.core.gluing import GluingCase, RANDOM_GENERATORS, verify_gluing
from cohomdet.core.polyring import DegreeMarker
from cohomdet.utils.intmatrix import identity
from cohomdet.utils.log import setup_logging, always_log_info
from cohomdet.utils.console import print_summary

import argparse
import json
import logging
import sys


class CliInputError(Exception):
    """Raised for unusable command line arguments"""
    pass


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise CliInputError(message)


def get_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-file", "-l",
                        default=None,
                        help="Path to a file to append log records to. Defaults to stderr")
    common.add_argument("--log-level", "-v",
                        default="warning",
                        help="Log level to use: critical, error, warning, info, debug")
    common.add_argument("--format",
                        choices=["text", "json"],
                        default="text",
                        help="Output format")

    parser = ArgumentParser(prog="cohomdet",
                            description="Exact cohomology determinants of 3-manifold cup and Massey forms",
                            formatter_class=argparse.RawDescriptionHelpFormatter,
                            epilog="Exit codes: 0 success, 1 verification or extraction failure, 2 input error")
    parser.add_argument("--version",
                        action="store_true",
                        default=False,
                        help="Get the package version")
    subparsers = parser.add_subparsers(dest="command", parser_class=ArgumentParser)

    det = subparsers.add_parser("det", parents=[common], help="Compute d(f, a, b) of a tensor")
    det.add_argument("--input", "-i", default="-", help="Tensor document, or - for stdin")
    det.add_argument("--basis-a", default=None,
                     help="Basis a as a JSON array of integer rows; standard when omitted")
    det.add_argument("--basis-b", default=None,
                     help="Basis b as a JSON array of integer rows; standard when omitted")
    det.add_argument("--orientation", type=int, choices=[1, -1], default=None,
                     help="Print Det_omega for this homology orientation sign instead of d(f, a, b)")

    verify = subparsers.add_parser("verify", parents=[common], help="Verify the gluing identities of an instance")
    verify.add_argument("--input", "-i", default="-", help="Gluing document, or - for stdin")

    corpus = subparsers.add_parser("corpus", parents=[common], help="List, show or re-verify bundled examples")
    corpus.add_argument("name", nargs="?", default=None, help="Entry to show")
    corpus.add_argument("--verify", action="store_true", default=False,
                        help="Recompute every bundled entry")

    check = subparsers.add_parser("check", parents=[common], help="Validate an input document only")
    check.add_argument("--input", "-i", default="-", help="Tensor or gluing document, or - for stdin")

    generate = subparsers.add_parser("generate", parents=[common], help="Print a random gluing instance")
    generate.add_argument("--case", type=int, choices=[1, 2, 3, 4], required=True, help="Gluing case")
    generate.add_argument("--n", type=int, required=True, help="Rank of K for M")
    generate.add_argument("--seed", type=int, default=0, help="Random seed")

    return parser


def _emit(args, text, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _parse_matrix(text, name):
    try:
        matrix = json.loads(text)
    except ValueError:
        raise CliInputError("{} is not valid JSON".format(name))
    if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
        raise CliInputError("{} must be a JSON array of rows".format(name))
    return matrix


def run_det(args):
    form = load_input(args.input).to_form()
    a = _parse_matrix(args.basis_a, "--basis-a") if args.basis_a else identity(form.n)
    b = _parse_matrix(args.basis_b, "--basis-b") if args.basis_b else identity(form.shape[0])
    bases = BasisPair(a, b)
    bases.check_for(form)

    d = determinant(form, bases)
    payload = {"d": d.to_text()}
    if args.orientation is not None:
        d = sign_refine(d, bases, Orientation(args.orientation))
        payload = {"d": d.to_text(), "orientation": args.orientation}
    degree = d.homogeneous_degree()
    payload["degree"] = None if degree is DegreeMarker.ANY else degree
    _emit(args, d.to_text(), payload)
    return EXIT_OK


def run_verify(args):
    report = verify_gluing(load_input(args.input).to_instance())
    lines = ["{} (case {})".format(report.verdict, int(report.case)),
             "lhs: {}".format(report.lhs),
             "rhs: {}".format(report.rhs)]
    lines.extend("  [{}] {}".format("ok" if check.passed else "FAIL", check.name) for check in report.checks)
    _emit(args, "\n".join(lines), report_to_dict(report))
    return EXIT_OK if report.passed else EXIT_FAIL


def run_corpus(args):
    if args.verify:
        results = verify_corpus()
        _emit(args, "\n".join("{} {}: {}".format("ok" if ok else "FAIL", name, msg) for name, ok, msg in results),
              [{"name": name, "passed": ok, "detail": msg} for name, ok, msg in results])
        return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL

    if args.name is None:
        names = corpus_list()
        _emit(args, "\n".join(names), names)
        return EXIT_OK

    entry = corpus_get(args.name)
    _emit(args,
          "{}\n{}\nprovenance: {}\nexpected d: {}".format(entry.name, entry.description, entry.provenance,
                                                          entry.expected_d),
          {"name": entry.name, "description": entry.description, "provenance": entry.provenance,
           "expected_d": entry.expected_d.to_text()})
    return EXIT_OK


def run_check(args):
    configuration = load_input(args.input)
    subject = configuration.to_instance() if configuration.is_gluing() else configuration.to_form()
    if args.format == "json":
        print(json.dumps({"valid": True, "kind": configuration.kind}, sort_keys=True))
    else:
        print_summary(subject)
    return EXIT_OK


def run_generate(args):
    minimum = {GluingCase.ZERO_DETERMINANT: 3, GluingCase.ZERO_IMAGE: 4,
               GluingCase.RANK_TWO_IMAGE: 3, GluingCase.CLOSED_TARGET: 3}[GluingCase(args.case)]
    if not minimum <= args.n <= MAX_RANK:
        raise CliInputError("case {} needs {} <= --n <= {}".format(args.case, minimum, MAX_RANK))
    inst = RANDOM_GENERATORS[GluingCase(args.case)](args.seed, args.n)
    always_log_info("Generated case {} instance with n={} from seed {}".format(args.case, args.n, args.seed))
    print(json.dumps(instance_to_dict(inst), sort_keys=True, indent=2))
    return EXIT_OK


COMMANDS = {"det": run_det,
            "verify": run_verify,
            "corpus": run_corpus,
            "check": run_check,
            "generate": run_generate}


def run(argv=None):
    """Run one command

    Args:
        argv(list(str)): Command line arguments, sys.argv[1:] when omitted

    Returns:
        (int): exit code
    """
    try:
        args = get_parser().parse_args(argv)
        if args.version:
            print_version()
            return EXIT_OK
        if args.command is None:
            raise CliInputError("a command is required: {}".format(", ".join(sorted(COMMANDS))))
        setup_logging(args.log_level, args.log_file)
        return COMMANDS[args.command](args)
    except SystemExit as err:
        # --help
        return err.code if isinstance(err.code, int) else EXIT_OK
    except CorpusMismatchError as err:
        sys.stderr.write("error: {}\n".format(err))
        return EXIT_FAIL
    except (CliInputError, InputFileError, ValueError, LookupError) as err:
        sys.stderr.write("error: {}\n".format(err))
        return EXIT_INPUT
    except MemoryError:
        sys.stderr.write("error: input is too large to hold in memory\n")
        return EXIT_INPUT
    except ArithmeticError as err:
        logging.getLogger(LOGGER_NAME).debug("Determinant extraction failed", exc_info=True)
        sys.stderr.write("error: {}\n".format(err))
        return EXIT_FAIL


def main():
    """Client UI main"""
    sys.exit(run())


if __name__ == '__main__':
    main()
