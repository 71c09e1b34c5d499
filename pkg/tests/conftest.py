import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from edgeflip.corpus import builtin_corpus, complete, cycle, path, star  # noqa: E402
from edgeflip.graph import build_graph  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


@pytest.fixture
def K3():
    return complete(3)


@pytest.fixture
def P3():
    return path(3)


@pytest.fixture
def C4():
    return cycle(4)


@pytest.fixture
def K13():
    return star(3)


@st.composite
def connected_graphs(draw, min_n=3, max_n=6, max_m=None):
    """Random tree on n labelled vertices plus a random set of extra edges."""
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(n)))
    tree = {tuple(sorted((perm[v], perm[draw(st.integers(0, v - 1))]))) for v in range(1, n)}
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in tree]
    room = len(others) if max_m is None else max(0, min(len(others), max_m - len(tree)))
    extra = draw(st.lists(st.sampled_from(others), max_size=room, unique=True)) if others and room else []
    return build_graph(n, list(tree) + extra)

