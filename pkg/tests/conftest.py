"""Shared fixtures and hypothesis settings for the test suite."""

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def sweep_rows():
    """The full certification sweep shared by the acceptance criteria.

    Covers every internal degree sequence with at most 13 vertices;
    sequences whose enumeration exceeds 10^6 trees come back skipped,
    which by the factorial bound can only happen at 12 or 13 vertices.
    """
    from sombor.oracle import sweep_verify

    return list(sweep_verify(13, budget=10**6))
