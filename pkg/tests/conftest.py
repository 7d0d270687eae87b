import pytest

from lcmlat import Hypergraph, build_lcm_lattice, edge_ideal


@pytest.fixture(scope="session")
def fig3_hypergraph():
    # triangles sharing an edge / a vertex: {1,2,3}, {2,3,4}, {4,5,6}
    return Hypergraph.make(6, [{1, 2, 3}, {2, 3, 4}, {4, 5, 6}])


@pytest.fixture(scope="session")
def fig3_lattice(fig3_hypergraph):
    return build_lcm_lattice(edge_ideal(fig3_hypergraph))


@pytest.fixture(scope="session")
def tetrahedron():
    return Hypergraph.make(4, [{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}])


@pytest.fixture(scope="session")
def tetra_lattice(tetrahedron):
    return build_lcm_lattice(edge_ideal(tetrahedron))


@pytest.fixture(scope="session")
def fig5_graph():
    return Hypergraph.make(4, [{1, 2}, {1, 3}, {2, 4}])


@pytest.fixture(scope="session")
def fig5_lattice(fig5_graph):
    return build_lcm_lattice(edge_ideal(fig5_graph))


@pytest.fixture(scope="session")
def p4_graph():
    return Hypergraph.make(4, [{1, 2}, {2, 3}, {3, 4}])


@pytest.fixture(scope="session")
def p4_lattice(p4_graph):
    return build_lcm_lattice(edge_ideal(p4_graph))
