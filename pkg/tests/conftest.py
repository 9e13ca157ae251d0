import os

import pytest


@pytest.fixture(scope="session", autouse=True)
def _signature_cache(tmp_path_factory):
    """Keep signature weight caches inside the test tree."""
    d = tmp_path_factory.mktemp("sigcache")
    old = os.environ.get("HNP_CACHE_DIR")
    os.environ["HNP_CACHE_DIR"] = str(d)
    yield
    if old is None:
        os.environ.pop("HNP_CACHE_DIR", None)
    else:
        os.environ["HNP_CACHE_DIR"] = old
