"""Gemeinsame Test-Fixtures; die Module liegen flach im Repository-Wurzelverzeichnis."""
import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

import enumeration  # noqa: E402


@pytest.fixture(autouse=True)
def sequential_enumeration():
    """Jeder Test startet und endet mit sequentieller Zählung."""
    enumeration.configure(workers=1, parallel_min_length=8, split_depth=3)
    yield
    enumeration.configure(workers=1, parallel_min_length=8, split_depth=3)
