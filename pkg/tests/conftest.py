import os

import pytest

ACCEPTANCE_RESULTS = []


def pytest_addoption(parser):
    parser.addoption(
        "--expensive",
        action="store_true",
        default=False,
        help="run exact-oracle tests at n=256 (tens of seconds)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--expensive") or os.environ.get("DC2SPECTRUM_EXPENSIVE") == "1":
        return
    skip = pytest.mark.skip(reason="needs --expensive")
    for item in items:
        if "expensive" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
