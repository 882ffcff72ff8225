import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("KY_SLOW_TESTS"):
        return
    skip_slow = pytest.mark.skip(reason="slow tier; set KY_SLOW_TESTS=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
