from pathlib import Path

import pytest

from pathcolour.unique import build_forced_pair_28, build_unique_109

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def ctx109():
    return build_unique_109()


@pytest.fixture(scope="session")
def cert28():
    return build_forced_pair_28()
