import pytest
from hypothesis import settings

from oddzeta.coeffs import build_table
from oddzeta.highprec import estimate_terms

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def table_k7():
    """Shared table covering k <= 7 with enough rows for 32-digit sums."""
    return build_table(7, estimate_terms(32, 7))
