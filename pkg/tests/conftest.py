import pytest

from kronpoly import characters, config


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache(tmp_path_factory):
    """Keep character tables written by the tests out of the user cache."""
    with config.override(cache_dir=tmp_path_factory.mktemp("kron-cache")):
        yield
    characters.clear_memory_caches()
