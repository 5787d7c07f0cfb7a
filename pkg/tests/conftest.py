"""Shared fixtures: the worked fixtures used across the suite."""

import pytest

from hyperchrom import Hypergraph
from hyperchrom.generators import fig1


@pytest.fixture
def e1() -> Hypergraph:
    # single 3-edge
    return Hypergraph(3, [(1, 2, 3)])


@pytest.fixture
def e2() -> Hypergraph:
    # two 3-edges sharing one vertex
    return Hypergraph(5, [(1, 2, 3), (3, 4, 5)])


@pytest.fixture
def tri() -> Hypergraph:
    # graph triangle, the smallest instance with a delta-cycle
    return Hypergraph(3, [(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def f1() -> Hypergraph:
    # linear 3-uniform instance whose full edge set is a delta-cycle
    return fig1(1)


@pytest.fixture
def h2() -> Hypergraph:
    return fig1(2)


@pytest.fixture
def h3() -> Hypergraph:
    return fig1(3)


@pytest.fixture
def matching2() -> Hypergraph:
    # two disjoint 3-edges; rho equals the uniformity here
    return Hypergraph(6, [(1, 2, 3), (4, 5, 6)])
