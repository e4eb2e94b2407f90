"""
Shared fixtures for the q-congruence toolkit tests.
"""

import random
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))
sys.path.insert(0, str(ROOT / 'src'))

from qc_toolkit.core.qfactory import SeriesFactory  # noqa: E402
from qc_toolkit.utils.config import config  # noqa: E402


@pytest.fixture(scope="session")
def seed() -> int:
    value = config.get_int('verification.seed', 20240607)
    print(f"property seed: {value}")
    return value


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture
def factory() -> SeriesFactory:
    return SeriesFactory()
