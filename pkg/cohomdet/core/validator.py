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
import six
import jsonschema

from .codec import tensor_shape, entry_errors
from .forms import TensorFormatError
from .consts import KIND_CLOSED, KIND_MASSEY, KIND_BOUNDARY


@six.add_metaclass(ABCMeta)
class Validator(object):
    def __init__(self, config_data):
        """
        A class to implement the input document validator

        Args:
            config_data(dict): The loaded JSON document

        """
        self.config = config_data

        # Schema to be populated by the Configuration
        self.schema = None

    def validate_schema(self):
        """
        Method to validate the JSON data against the schema

        Returns:
            jsonschema.ValidationError: The error if schema validation fails, else None

        """
        if not self.schema:
            raise ValueError("Schema has not been populated yet. Cannot validate.")

        try:
            jsonschema.validate(self.config, self.schema)
        except jsonschema.ValidationError as e:
            return e

        return None

    def validate(self):
        """
        Method to run the schema check and then the property checks

        Returns:
            (dict): Dictionary of "info" and "error" messages

        """
        schema_err_msg = self.validate_schema()
        if not schema_err_msg:
            schema_info_msg = ["Input schema validation - Passed"]
            info_msg, error_msg = self.validate_properties()
            schema_info_msg.extend(info_msg)
            return {"info": schema_info_msg,
                    "error": error_msg}
        else:
            location = "/".join(str(x) for x in schema_err_msg.absolute_path)
            message = schema_err_msg.message
            if location:
                message = "{}: {}".format(location, message)
            return {"info": ["Input schema validation - Failed"],
                    "error": [message]}

    @abstractmethod
    def validate_properties(self):
        """
        Method to validate any custom properties beyond verifying that the schema was used correctly

        Returns:
            (list(str), list(str)): a tuple of lists containing "info" and "error" messages

        """
        return NotImplemented

    @staticmethod
    def factory(validator_str, config_data):
        """
        Method to return a validator class based on a string

        Args:
            validator_str(str): Class name for the validator to use
            config_data(dict): Dictionary containing the document

        Returns:
            (Validator)
        """
        if validator_str == "TensorValidatorV01":
            return TensorValidatorV01(config_data)
        if validator_str == "GluingValidatorV01":
            return GluingValidatorV01(config_data)
        raise ValueError("Unsupported validator: {}".format(validator_str))


def tensor_property_errors(doc, prefix=""):
    """
    Method to check the parts of a tensor document a schema cannot express

    Args:
        doc(dict): tensor document that already passed the schema
        prefix(str): Prepended to every message

    Returns:
        (list(str))
    """
    kind = doc["kind"]
    n = doc["n"]
    if kind == KIND_CLOSED and n < 3:
        return ["{}closed tensors need n >= 3".format(prefix)]
    if kind == KIND_MASSEY and "m" not in doc:
        return ["{}massey tensors need m".format(prefix)]
    if kind != KIND_MASSEY and "m" in doc:
        return ["{}only massey tensors take m".format(prefix)]
    try:
        shape = tensor_shape(kind, n, doc.get("m"))
    except TensorFormatError as err:
        return ["{}{}".format(prefix, err)]
    return ["{}{}".format(prefix, msg) for msg in entry_errors(doc["entries"], shape)]


class TensorValidatorV01(Validator):
    def __init__(self, config_data):
        """
        A class to validate closed, boundary and Massey tensor documents

        Args:
            config_data(dict): Tensor document

        """
        Validator.__init__(self, config_data)

    def validate_properties(self):
        errors = tensor_property_errors(self.config)
        if errors:
            return [], errors
        return ['Parameter Validation Passed'], []


class GluingValidatorV01(Validator):
    def __init__(self, config_data):
        """
        A class to validate gluing instance documents

        Args:
            config_data(dict): Gluing document

        """
        Validator.__init__(self, config_data)

    def validate_properties(self):
        """
        Method to check nested tensors and the shape of iota

        Returns:
            (list(str), list(str)): a tuple of lists containing "info" and "error" messages

        """
        errors = []
        if self.config["f_M"]["kind"] != KIND_BOUNDARY:
            errors.append('"f_M" must be a boundary tensor')
        errors.extend(tensor_property_errors(self.config["f_M"], '"f_M": '))
        if "f_Mbar" in self.config:
            errors.extend(tensor_property_errors(self.config["f_Mbar"], '"f_Mbar": '))

        if "iota" in self.config:
            iota = self.config["iota"]
            if len(iota) != self.config["f_M"]["n"]:
                errors.append('"iota" must have one row per variable of f_M')
            if len(set(len(row) for row in iota)) > 1:
                errors.append('"iota" rows must all have the same length')
        elif self.config["case"] != 1:
            errors.append('"iota" is required for case {}'.format(self.config["case"]))

        if errors:
            return [], errors
        return ['Parameter Validation Passed'], []
