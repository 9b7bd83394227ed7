"""Worked examples and bounded searches for certificate data."""

from swobstruct.search.characteristic import find_characteristic
from swobstruct.search.fixtures import ExampleFixture, build_example, list_examples, reproduce
from swobstruct.search.oracle import oracle_rep_decomposition
from swobstruct.search.orthogonal import find_orthogonal_square2_system

__all__ = [
    "find_characteristic",
    "ExampleFixture",
    "build_example",
    "list_examples",
    "reproduce",
    "oracle_rep_decomposition",
    "find_orthogonal_square2_system",
]
