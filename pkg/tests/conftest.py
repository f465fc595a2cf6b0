import random

import pytest

from crext.catalog import catalog_pairs


@pytest.fixture(scope="session")
def pairs():
    return catalog_pairs()


@pytest.fixture(scope="session")
def pair_map(pairs):
    return {f"{name}/{bname}": (ring, bim)
            for name, ring, bname, bim in pairs}


@pytest.fixture
def rng():
    return random.Random(20260826)
