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
import json
import logging
import os
import sys

from .consts import LOGGER_NAME, SCHEMA_BY_KIND, VALIDATOR_BY_SCHEMA, KIND_GLUING
from .validator import Validator
from . import codec

SCHEMA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "schema")


class InputFileError(Exception):
    """Custom error for unreadable or invalid input documents"""
    pass


class Configuration(object):
    def __init__(self, config_data=None):
        """
        A class to store an input document with its schema and validator

        Args:
            config_data(dict): The loaded JSON document
        """
        self.config_data = None
        self.schema = None
        self.schema_name = None

        # If a document was provided, load it now
        if config_data is not None:
            self.load(config_data)

    def load(self, config_data):
        """
        Method to load the document and the schema matching its kind

        Args:
            config_data(dict): The loaded JSON document

        Returns:
            None

        """
        if not isinstance(config_data, dict):
            raise InputFileError("Input document must be a JSON object")
        self.config_data = config_data

        kind = self.config_data.get("kind")
        try:
            self.schema_name = SCHEMA_BY_KIND[kind]
        except (KeyError, TypeError):
            raise InputFileError("Unknown document kind: {}".format(kind))
        with open(os.path.join(SCHEMA_DIR, "{}.json".format(self.schema_name)), 'rt') as schema_file:
            self.schema = json.load(schema_file)

    @property
    def kind(self):
        return self.config_data["kind"]

    def is_gluing(self):
        return self.kind == KIND_GLUING

    def get_validator(self):
        """
        Method to get a validator instance for the loaded document

        Returns:
            (cohomdet.core.validator.Validator): Validator instance with its schema populated

        """
        if not self.config_data:
            raise ValueError("No input document loaded.")

        validator = Validator.factory(VALIDATOR_BY_SCHEMA[self.schema_name], self.config_data)
        validator.schema = self.schema
        return validator

    def check(self):
        """
        Method to validate the document, raising on the first error

        Returns:
            (list(str)): info messages
        """
        msgs = self.get_validator().validate()
        for msg in msgs["info"]:
            logging.getLogger(LOGGER_NAME).debug(msg)
        if msgs["error"]:
            raise InputFileError(msgs["error"][0])
        return msgs["info"]

    def to_form(self):
        """Method to validate the document and build the form it describes"""
        if self.is_gluing():
            raise InputFileError("Expected a tensor document, got a gluing instance")
        self.check()
        return codec.form_from_dict(self.config_data)

    def to_instance(self):
        """Method to validate the document and build the gluing instance it describes"""
        if not self.is_gluing():
            raise InputFileError("Expected a gluing document, got a {} tensor".format(self.kind))
        self.check()
        return codec.instance_from_dict(self.config_data)


def load_input(path):
    """
    Method to read an input document from a file or from stdin

    Args:
        path(str): File path, or "-" for standard input

    Returns:
        (Configuration)
    """
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, 'rt') as input_file:
                data = json.load(input_file)
    except (IOError, OSError) as err:
        raise InputFileError("Cannot read {}: {}".format(path, err))
    except ValueError as err:
        raise InputFileError("Malformed JSON in {}: {}".format(path, err))
    return Configuration(data)
