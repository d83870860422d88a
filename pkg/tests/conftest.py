"""
conftest.py - pytest fixtures for stlc_interp tests.
"""

import pytest

from stlc_interp.syntax.types import Arrow, Base, Language

P = Base("P")
Q = Base("Q")
R = Base("R")


@pytest.fixture
def lang_p():
    """Constant-free language over P."""
    return Language.from_bases({"P"})


@pytest.fixture
def lang_pq():
    """Constant-free language over P and Q."""
    return Language.from_bases({"P", "Q"})


@pytest.fixture
def lang_pqr():
    """Constant-free language over P, Q and R."""
    return Language.from_bases({"P", "Q", "R"})


@pytest.fixture
def lang_constants():
    """P, Q with f : Q → P and d : Q."""
    return Language(base_types=frozenset({"P", "Q"}), constants={"f": Arrow(Q, P), "d": Q})
