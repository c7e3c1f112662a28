import itertools
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from crosscut.structures import Graph, TripleSystem

CORPUS_SEED = 20240901


def random_triple_system(rng: random.Random, n: int, density: float) -> TripleSystem:
    triples = [
        t for t in itertools.combinations(range(n), 3) if rng.random() < density
    ]
    return TripleSystem(n, triples)


def random_graph(rng: random.Random, n: int, density: float) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < density]
    return Graph(n, edges)


@pytest.fixture(scope="session")
def cleaning_corpus():
    """200 seeded random systems paired round-robin with (k, t) settings."""
    rng = random.Random(CORPUS_SEED)
    instances = []
    settings = list(itertools.product((3, 4), (1, 2)))
    for i in range(200):
        n = rng.randint(5, 12)
        density = rng.uniform(0.05, 0.6)
        k, t = settings[i % len(settings)]
        instances.append((random_triple_system(rng, n, density), k, t))
    return instances
