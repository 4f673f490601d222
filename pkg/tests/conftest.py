import pytest

from wildflowers import Engine


@pytest.fixture(scope="session")
def engine():
    """One arena + solver pair shared across the suite.

    Sharing is sound: every cache is keyed on exact form handles or literal
    positions, so results never depend on what was computed before.  Tests
    that specifically exercise cache independence build their own Engine.
    """
    return Engine()
