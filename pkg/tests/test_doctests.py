import doctest
import importlib

import pytest

MODULES = ["graph", "costs", "formats", "rigidity", "linkedness", "treerep",
           "augment", "minsize", "chordal", "oracles"]


@pytest.mark.parametrize("name", MODULES)
def test_docstring_examples(name):
    mod = importlib.import_module(f"rigaug.{name}")
    res = doctest.testmod(mod, optionflags=doctest.NORMALIZE_WHITESPACE)
    assert res.failed == 0
