import pathlib

import pytest

from prefcomm.io import read_network

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def example1():
    return read_network(DATA / "example1.pn")


@pytest.fixture
def fiveblock():
    return read_network(DATA / "fiveblock.pn")


@pytest.fixture
def data_dir():
    return DATA


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
