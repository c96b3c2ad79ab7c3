import pytest

from src.pairdist.gf import build_field

_SETTINGS_ENV = (
    "PAIRDIST_MAX_ENUM",
    "PAIRDIST_JOBS",
    "PAIRDIST_FORMAT",
    "PAIRDIST_REDUCE_BY_SCALARS",
    "PAIRDIST_DEBUG",
)


@pytest.fixture(autouse=True)
def mock_env_vars(monkeypatch):
    for name in _SETTINGS_ENV:
        monkeypatch.delenv(name, raising=False)
    yield


@pytest.fixture
def f2():
    return build_field(2, 1)


@pytest.fixture
def f3():
    return build_field(3, 1)


@pytest.fixture
def f4():
    return build_field(2, 2)


@pytest.fixture
def f5():
    return build_field(5, 1)


@pytest.fixture
def f9():
    return build_field(3, 2)
