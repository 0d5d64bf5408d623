import doctest
import importlib

import pytest

MODULES = ["altans.graph", "altans.altan", "altans.kekule"]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    result = doctest.testmod(importlib.import_module(name))
    assert result.failed == 0
