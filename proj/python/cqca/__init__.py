# Copyright 2026 The cqca Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Clifford quantum cellular automata over prime fields.

Matrices, words and phases are plain dicts in the same JSON schema the
``cqca`` command line tool uses. Strings holding that JSON are accepted too.
"""

import json

from . import _core
from ._core import (
    DomainError,
    Error,
    FactorizationMismatchError,
    MismatchError,
    NotSymplecticError,
    NoValidPhaseError,
    ParseError,
    WindowError,
    parse_poly,
)

__all__ = [
    "DomainError",
    "Error",
    "FactorizationMismatchError",
    "MismatchError",
    "NotSymplecticError",
    "NoValidPhaseError",
    "ParseError",
    "WindowError",
    "canonical",
    "classify",
    "compose",
    "default_phase",
    "evolve",
    "factorize",
    "inverse",
    "is_symplectic",
    "multiply_word",
    "parse_poly",
    "recipe",
    "selftest",
    "validate_phase",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def canonical(matrix):
    return json.loads(_core.canonical(_text(matrix)))


def is_symplectic(matrix):
    return _core.is_symplectic(_text(matrix))


def classify(matrix):
    """Split into {"shift": [...], "core": matrix}; raises NotSymplecticError."""
    return json.loads(_core.classify(_text(matrix)))


def compose(first, second):
    return json.loads(_core.compose(_text(first), _text(second)))


def inverse(matrix):
    return json.loads(_core.inverse(_text(matrix)))


def factorize(matrix):
    return json.loads(_core.factorize(_text(matrix)))


def multiply_word(word, p):
    return json.loads(_core.multiply_word(_text(word), p))


def recipe(f, h, f_prime=None, h_prime=None, p=2):
    """Matrix ((f, f'), (-h', h)); h' defaults to 1 and f' to 1 - f h."""
    return json.loads(_core.recipe(f, h, f_prime, h_prime, p))


def default_phase(matrix):
    return json.loads(_core.default_phase(_text(matrix)))


def validate_phase(matrix, phase, radius=None, seed=0):
    return _core.validate_phase(_text(matrix), _text(phase), radius, seed)


def evolve(matrix, plus, minus, steps, format="csv"):
    """Trace of s^t xi for t = 0..steps. 'pgm' returns bytes, the rest str."""
    return _core.evolve(_text(matrix), plus, minus, steps, format)


def selftest(p, window=3, seed=0):
    return _core.selftest(p, window, seed)
