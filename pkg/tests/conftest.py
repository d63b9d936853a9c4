# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Fixtures and options for bicyclic-szeged tests."""

import pytest


def pytest_addoption(parser):
    """Parse additional pytest options.

    Args:
        parser: Pytest parser.
    """
    parser.addoption(
        "--acceptance",
        action="store_true",
        help="run the exhaustive checks at n = 8",
    )


def pytest_configure(config):
    """Register the custom markers.

    Args:
        config: Pytest config.
    """
    config.addinivalue_line("markers", "acceptance: exhaustive run gated by --acceptance")


def pytest_collection_modifyitems(config, items):
    """Skip acceptance tests unless requested.

    Args:
        config: Pytest config.
        items: collected tests.
    """
    if config.getoption("--acceptance"):
        return
    skip = pytest.mark.skip(reason="needs --acceptance")
    for item in items:
        if "acceptance" in item.keywords:
            item.add_marker(skip)
