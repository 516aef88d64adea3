import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

from hodgeorbit.rootdata import root_system


@pytest.fixture(scope="session")
def rs():
    """Root-system factory with session-wide caching."""
    return root_system
