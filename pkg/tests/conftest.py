import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from vkhov.catalog import bundled  # noqa: E402
from vkhov.diagram import random_diagram  # noqa: E402


def random_population(count, max_crossings, seed, max_components=2):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_crossings)
        c = rng.choice([1, 1, 1, 2][: 2 + max_components])
        c = min(c, max_components)
        out.append(random_diagram(n, rng, c))
    return out


@pytest.fixture(scope="session")
def catalog():
    return bundled()


@pytest.fixture(scope="session")
def small_catalog(catalog):
    return {k: d for k, d in catalog.items() if d.crossing_count <= 6}
