"""Shared test fixtures for the schubert-normality test suite."""

from pathlib import Path

import pytest

from schubert_normality.config.loader import load_group

FIXTURES_DIR = Path(__file__).parent / "fixtures"
GOLDEN_DIR = FIXTURES_DIR / "golden"
EXAMPLES_DIR = Path(__file__).parent.parent / "config" / "examples"


def group(preset: str):
    """Build a GroupDatum from a preset such as ``pgl(3)@3``."""
    return load_group(preset).to_datum()


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture
def examples_dir():
    return EXAMPLES_DIR


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR


@pytest.fixture
def pgl2():
    return group("pgl(2)@2")


@pytest.fixture
def pgl3():
    return group("pgl(3)@3")


@pytest.fixture
def pu3():
    return group("pu(3)@3")


@pytest.fixture
def so4():
    return group("so4@2")


@pytest.fixture
def pgl3_path():
    return EXAMPLES_DIR / "pgl3.json"


@pytest.fixture
def pu8_path():
    return EXAMPLES_DIR / "pu8.json"
