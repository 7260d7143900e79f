import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pocgroups.bruteforce import available_backends  # noqa: E402
from pocgroups.closedform import OrderClassTable  # noqa: E402

# Order tables of S3 and A4, which are outside the representable family.
S3_TABLE = OrderClassTable(6, ((1, 1), (2, 3), (3, 2)))
A4_TABLE = OrderClassTable(12, ((1, 1), (2, 3), (3, 8)))


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): acceptance criterion")
    config._criteria = []


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    item.config._criteria.append(
        (marker.args[0], marker.args[1], call.excinfo is None, item.name)
    )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = getattr(config, "_criteria", [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    by_num = {}
    for num, text, ok, name in rows:
        prev = by_num.get(num, (text, True))
        by_num[num] = (text, prev[1] and ok)
    for num in sorted(by_num):
        text, ok = by_num[num]
        terminalreporter.write_line(f"AC{num} {'PASS' if ok else 'FAIL'}  {text}")
