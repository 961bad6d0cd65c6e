import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hoffline.verify import build_catalog


@pytest.fixture(scope="session")
def catalog7():
    """Catalog up to 7 vertices (2 + 28 + 7 members); fast to build."""
    return build_catalog(7)


@pytest.fixture(scope="session")
def catalog8():
    """Full desk-scale catalog up to 8 vertices (the 38 members)."""
    return build_catalog(8)
