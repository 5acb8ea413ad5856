import pytest

from simqwalk import build_walk_space, clique_complex, karate_club_complex, step_operator, unitary_spectrum

TRIANGLE_EDGES = [(1, 2), (1, 3), (2, 3)]
BOWTIE_EDGES = [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]
K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


@pytest.fixture(scope="session")
def path_complex():
    return clique_complex([(1, 2), (2, 3)], max_dim=2)


@pytest.fixture(scope="session")
def filled_triangle():
    return clique_complex(TRIANGLE_EDGES, max_dim=2)


@pytest.fixture(scope="session")
def hollow_triangle():
    return clique_complex(TRIANGLE_EDGES, max_dim=1)


@pytest.fixture(scope="session")
def bowtie():
    return clique_complex(BOWTIE_EDGES, max_dim=2)


@pytest.fixture(scope="session")
def tetrahedron():
    return clique_complex(K4_EDGES, max_dim=3)


@pytest.fixture(scope="session")
def star():
    return clique_complex([(1, 2), (1, 3), (1, 4)], max_dim=2)


@pytest.fixture(scope="session")
def two_edges():
    return clique_complex([(1, 2), (3, 4)], max_dim=2)


@pytest.fixture(scope="session")
def karate():
    return karate_club_complex()


@pytest.fixture(scope="session")
def karate_walk_n1(karate):
    return step_operator(build_walk_space(karate, 1))


@pytest.fixture(scope="session")
def karate_walk_n2(karate):
    return step_operator(build_walk_space(karate, 2))


@pytest.fixture(scope="session")
def karate_spectrum_n1(karate_walk_n1):
    # one Schur decomposition of the 1056-arc step operator, shared by tests
    return unitary_spectrum(karate_walk_n1)
