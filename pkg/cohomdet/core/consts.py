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

# Name of the package-wide logger
LOGGER_NAME = 'cohomdet'

# Document kinds accepted on input
KIND_CLOSED = 'closed'
KIND_BOUNDARY = 'boundary'
KIND_MASSEY = 'massey'
KIND_GLUING = 'gluing'

# Bundled schema files, keyed by document kind
TENSOR_SCHEMA = 'tensor-v0.1-schema'
GLUING_SCHEMA = 'gluing-v0.1-schema'
SCHEMA_BY_KIND = {KIND_CLOSED: TENSOR_SCHEMA,
                  KIND_BOUNDARY: TENSOR_SCHEMA,
                  KIND_MASSEY: TENSOR_SCHEMA,
                  KIND_GLUING: GLUING_SCHEMA}
VALIDATOR_BY_SCHEMA = {TENSOR_SCHEMA: 'TensorValidatorV01',
                       GLUING_SCHEMA: 'GluingValidatorV01'}

# CLI exit codes
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

# Entry bound used by the random form and instance generators
RANDOM_ENTRY_BOUND = 5
# Number of elementary row operations used to scramble a random unimodular matrix
RANDOM_UNIMODULAR_STEPS = 12

# Largest rank n accepted from a document
MAX_RANK = 8
# Largest number of dense tensor entries a document may address
MAX_DENSE_ENTRIES = 2 ** 20
