"""Shared instance corpus for the test suite.

Everything is seeded; the corpus is a deterministic function of this file.
"""

import pytest

from cvckit.graph import bipartite_random, gnp_random, is_connected


def connected_gnp(n, p, seed, tries=300):
    """First connected G(n, p) sample scanning seeds upward."""
    for offset in range(tries):
        g = gnp_random(n, p, seed + offset)
        if is_connected(g):
            return g
    raise AssertionError(f"no connected G({n}, {p}) sample near seed {seed}")


def connected_bipartite(n1, n2, p, seed, tries=300):
    for offset in range(tries):
        g = bipartite_random(n1, n2, p, seed + offset)
        if is_connected(g):
            return g
    raise AssertionError(f"no connected bipartite sample near seed {seed}")


def small_corpus(count=500, base_seed=1000):
    """Mixed corpus of connected instances, 4 <= n <= 14.

    Four G(n, p) densities cycle through, with every fifth instance a
    small random bipartite graph.  Names encode the recipe.
    """
    out = []
    densities = (0.2, 0.35, 0.5, 0.7)
    for i in range(count):
        if i % 5 == 4:
            n1 = 2 + i % 5
            n2 = 2 + (i // 5) % 5
            p = 0.4 + 0.2 * ((i // 25) % 2)
            g = connected_bipartite(n1, n2, p, 10_000 + i)
            name = f"bip_{n1}_{n2}_i{i}"
        else:
            n = 4 + i % 11
            p = densities[(i // 11) % 4]
            g = connected_gnp(n, p, base_seed + i)
            name = f"gnp_{n}_{int(p * 100):03d}_i{i}"
        out.append((name, g))
    return out


@pytest.fixture(scope="session")
def corpus500():
    return small_corpus()


@pytest.fixture(scope="session")
def corpus60():
    return small_corpus(count=60)
