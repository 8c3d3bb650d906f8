import pytest

from yangbaxter import suite


@pytest.fixture(scope="session")
def default_report():
    """Full suite at the default seed, including the determinism re-run."""
    return suite.run_suite(suite.DEFAULT_SEED)
