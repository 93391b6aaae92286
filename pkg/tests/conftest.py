import pytest

from steinerkit.designs import BUNDLED, bundled, complement
from steinerkit.monomials import CoverIdealSpec


@pytest.fixture(scope="session")
def systems():
    return {name: bundled(name) for name in BUNDLED}


@pytest.fixture(scope="session")
def cover_ideals(systems):
    return {name: CoverIdealSpec(complement(s)) for name, s in systems.items()}


@pytest.fixture(scope="session")
def fano_J(cover_ideals):
    return cover_ideals["fano"]


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
