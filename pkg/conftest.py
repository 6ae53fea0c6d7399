import logging
import os

import hypothesis
import pytest

from app.catalog.registry import build_family
from app.models import FamilySpec

hypothesis.settings.register_profile("default", max_examples=50, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None, derandomize=True)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

logging.getLogger("app").setLevel(logging.WARNING)


def family(tag, **fields):
    return build_family(FamilySpec(family=tag, **fields))


@pytest.fixture(scope="session")
def petersen():
    return family("Petersen")


@pytest.fixture(scope="session")
def t5():
    return family("Triangular", m=5)


@pytest.fixture(scope="session")
def t6():
    return family("Triangular", m=6)


@pytest.fixture(scope="session")
def sp42():
    return family("Symplectic", r=2, q=2)


@pytest.fixture(scope="session")
def lattice4():
    return family("Lattice", n=4)


@pytest.fixture(scope="session")
def clebsch():
    return family("Clebsch")
