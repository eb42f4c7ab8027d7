"""Run the inline doctest examples of the documented core modules."""

import doctest

import kustab.exact
import kustab.variety


def test_exact_doctests():
    result = doctest.testmod(kustab.exact)
    assert result.attempted > 0 and result.failed == 0


def test_variety_doctests():
    result = doctest.testmod(kustab.variety)
    assert result.attempted > 0 and result.failed == 0
