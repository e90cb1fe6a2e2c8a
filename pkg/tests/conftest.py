import functools
import random

import pytest
from hypothesis import settings

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repro")

SEED = 20260809


@pytest.fixture()
def rng():
    return random.Random(SEED)


@pytest.fixture(scope="session")
def classes():
    """Cached class lists per (n, d); shared across the whole session."""
    from monocremona.enumeration import enumerate_maps

    @functools.lru_cache(maxsize=None)
    def get(n, d):
        return tuple(enumerate_maps(n, d))

    return get


@pytest.fixture(scope="session")
def summaries():
    """Cached verify_bounds summaries per (n, d, jobs)."""
    from monocremona.enumeration import verify_bounds

    @functools.lru_cache(maxsize=None)
    def get(n, d, jobs=1):
        return verify_bounds(n, d, jobs=jobs)

    return get


@pytest.fixture(scope="session")
def reports3(classes):
    """Invariant reports for every class at (3, d) for d = 2..4."""
    from monocremona.invariants import johnson_check

    return {d: [(E, johnson_check(E)) for E in classes(3, d)] for d in (2, 3, 4)}
