import pytest

from laga import build_boolean, build_graph, build_subspace_lattice


@pytest.fixture(scope="session")
def boolean3():
    return build_boolean(3)


@pytest.fixture(scope="session")
def boolean4():
    return build_boolean(4)


@pytest.fixture(scope="session")
def subspace23():
    return build_subspace_lattice(2, 3)


@pytest.fixture(scope="session")
def nested_graph():
    """b covers {x, y, z}, c covers {x, y}: successor sets nest."""
    return build_graph(
        [1, 3, 2],
        [
            ((2, 0), (1, 0)),
            ((2, 0), (1, 1)),
            ((2, 0), (1, 2)),
            ((2, 1), (1, 0)),
            ((2, 1), (1, 1)),
            ((1, 0), (0, 0)),
            ((1, 1), (0, 0)),
            ((1, 2), (0, 0)),
        ],
        unique_minimal=True,
        positive_outdegree=True,
    )


@pytest.fixture(scope="session")
def nonuniform_graph():
    """Top vertex covers c and d whose successor sets are disjoint."""
    return build_graph(
        [1, 2, 2, 1],
        [
            ((3, 0), (2, 0)),
            ((3, 0), (2, 1)),
            ((2, 0), (1, 0)),
            ((2, 1), (1, 1)),
            ((1, 0), (0, 0)),
            ((1, 1), (0, 0)),
        ],
        unique_minimal=True,
        positive_outdegree=True,
    )


def _retarget_pair():
    """Two graphs differing only in where an out-degree-1 vertex points.

    An out-degree-1 vertex annihilates the whole level below, so both
    graphs share every degree-2 relation space, yet the in-degree
    multisets at level 1 differ and the graphs are not isomorphic.
    """
    base = [
        ((2, 0), (1, 0)),
        ((2, 0), (1, 1)),
        ((2, 1), (1, 1)),
        ((2, 1), (1, 2)),
        ((1, 0), (0, 0)),
        ((1, 1), (0, 0)),
        ((1, 2), (0, 0)),
    ]
    g1 = build_graph(
        [1, 3, 3],
        base + [((2, 2), (1, 0))],
        unique_minimal=True,
        positive_outdegree=True,
    )
    g2 = build_graph(
        [1, 3, 3],
        base + [((2, 2), (1, 1))],
        unique_minimal=True,
        positive_outdegree=True,
    )
    return g1, g2


@pytest.fixture(scope="session")
def retarget_pair():
    return _retarget_pair()
