import os

import pytest


def stretch_enabled() -> bool:
    return os.environ.get("FLIPDIST_STRETCH", "") not in ("", "0")


requires_stretch = pytest.mark.skipif(
    not stretch_enabled(), reason="set FLIPDIST_STRETCH=1 to run stretch checks"
)
