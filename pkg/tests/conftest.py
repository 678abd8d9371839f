import pytest

from ffidtest.gf import Field, get_field


@pytest.fixture
def F16() -> Field:
    return get_field(2, 4)


@pytest.fixture
def F4096() -> Field:
    return get_field(2, 12)
