"""Pytest configurations
"""

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--full-matrix",
        action="store_true",
        help=(
            "Run the heavy part of the test matrix, i.e. the larger groups and the "
            "higher degrees."
        ),
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "full_matrix: run the heavy computations of the test matrix."
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--full-matrix"):
        # --full-matrix given in cli: do not skip the heavy tests
        return
    skip_full = pytest.mark.skip(reason="need --full-matrix option to run")
    for item in items:
        if "full_matrix" in item.keywords:
            item.add_marker(skip_full)
