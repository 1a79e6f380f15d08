import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("RBGROUPS_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="long run; set RBGROUPS_SLOW=1 to enable")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
