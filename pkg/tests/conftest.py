"""Shared brace pools reused across test modules."""

import pytest

from skewbrace import census
from skewbrace.fixtures import build, example_names


@pytest.fixture(scope="session")
def worked_examples():
    """The four built-in worked examples keyed by name."""
    return {name: build(name) for name in example_names()}


@pytest.fixture(scope="session")
def small_entries():
    """Every census entry of order 1 through 8."""
    entries = []
    for n in range(1, 9):
        entries.extend(census(n).entries)
    return entries


@pytest.fixture(scope="session")
def medium_entries():
    """Every census entry of order 9 through 12."""
    entries = []
    for n in range(9, 13):
        entries.extend(census(n).entries)
    return entries


@pytest.fixture(scope="session")
def small_pool(small_entries, worked_examples):
    """Braces of order 1..8 plus the worked examples."""
    braces = [entry.brace for entry in small_entries]
    braces.extend(ex.brace for ex in worked_examples.values())
    return braces


@pytest.fixture(scope="session")
def full_pool(small_pool, medium_entries):
    """Braces of order 1..12 plus the worked examples."""
    return small_pool + [entry.brace for entry in medium_entries]
