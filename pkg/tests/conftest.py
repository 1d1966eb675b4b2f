import pytest

from .util import get_code, get_field


@pytest.fixture(scope="session")
def f7():
    """F_7 with the evaluation-point generator alpha = 5."""
    return get_field(7, alpha=5)


@pytest.fixture(scope="session")
def rs72(f7):
    """RS(7, 5, 2): n = 6, d = 5, tau = 2."""
    return get_code(7, 2, alpha=5)
