import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))  # for the oracles module

from gemcensus import decode
from gemcensus.census import CensusFilter, census_codes
from gemcensus.tables import reference_catalog


def extended_enabled() -> bool:
    return os.environ.get("GEMCENSUS_EXTENDED", "") == "1"


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "extended: long opt-in runs, enabled with GEMCENSUS_EXTENDED=1")


def pytest_collection_modifyitems(config, items):
    if extended_enabled():
        return
    skip = pytest.mark.skip(reason="extended run; set GEMCENSUS_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def catalog_rows():
    return reference_catalog()


@pytest.fixture(scope="session")
def catalog_graphs(catalog_rows):
    return {row.name: decode(row.code) for row in catalog_rows}


@pytest.fixture(scope="session")
def small_census_codes():
    """Census codes for orders <= 8, both parities (103 classes)."""
    out = {}
    for order in (2, 4, 6, 8):
        for bip in (True, False):
            key = (order, bip)
            out[key] = census_codes(order, CensusFilter(bipartite=bip))
    return out
