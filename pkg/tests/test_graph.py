import numpy as np
import pytest

from crosscountry.elimination import eliminate_vertex
from crosscountry.errors import (
    AlreadyEliminated,
    DuplicateEdge,
    DuplicateVertex,
    GraphError,
    IllegalEndpoint,
    IncompleteOrder,
    NotIntermediate,
    ShapeMismatch,
    VertexEliminated,
)
from crosscountry.graph import (
    CompGraph,
    check_complete,
    format_graph,
    format_order,
    parse_graph,
    parse_order,
    read_graph,
    write_graph,
)
from crosscountry.sparsity import JacobianSpec

from conftest import SCALAR_DENSE, V1, V2, worked_graph, random_graph


def test_add_edge_builds_graph():
    g = CompGraph(2, 2, 2)
    g.add_edge(0, 2, SCALAR_DENSE)
    assert len(g.edges) == 1 and g.edge(0, 2) == SCALAR_DENSE


def test_duplicate_edge():
    g = CompGraph(2, 2, 2).add_edge(0, 2, SCALAR_DENSE)
    with pytest.raises(DuplicateEdge):
        g.add_edge(0, 2, SCALAR_DENSE)


def test_edge_shape_must_match_vertex():
    g = CompGraph(1, 1, 1, vertex_shapes=[(3, 1), (3, 1), (1, 1)])
    with pytest.raises(ShapeMismatch):
        g.add_edge(0, 1, JacobianSpec(1, (2, 1), (3, 1)))


@pytest.mark.parametrize("src, dst", [(4, 5), (2, 1), (3, 2), (0, 9), (2, 2)])
def test_illegal_endpoints(src, dst):
    with pytest.raises(IllegalEndpoint):
        CompGraph(2, 2, 2).add_edge(src, dst, SCALAR_DENSE)


def test_neighbors_worked():
    g = worked_graph()
    assert g.neighbors(V1) == ({0, 1}, {3, 5})
    assert g.neighbors(V2) == ({2}, {4, 5})
    assert g.neighbors(0) == (set(), {2})


def test_neighbors_of_eliminated_vertex():
    g = worked_graph()
    eliminate_vertex(g, V2)
    with pytest.raises(VertexEliminated):
        g.neighbors(V2)


def test_bipartite():
    g = worked_graph()
    assert not g.is_bipartite()
    eliminate_vertex(g, V1)
    eliminate_vertex(g, V2)
    assert g.is_bipartite()
    assert CompGraph(2, 0, 1).is_bipartite()


def test_edge_to_eliminated_vertex_rejected():
    g = worked_graph()
    eliminate_vertex(g, V2)
    with pytest.raises(VertexEliminated):
        g.add_edge(V1, V2, SCALAR_DENSE)


def test_tensor_worked():
    t = worked_graph().to_tensor()
    assert t.shape == (4, 4, 5)
    assert np.count_nonzero(t[:, :, 0]) == 6
    # edge 2 -> 5 sits in row 2, column 5 - n_inputs
    assert tuple(t[2, 3]) == (1, 1, 1, 1, 1)


def test_tensor_empty_graph():
    t = CompGraph(2, 3, 1).to_tensor()
    assert t.shape == (5, 4, 5) and not t.any()


def test_tensor_zeroes_eliminated_vertices():
    g = worked_graph()
    eliminate_vertex(g, V2)
    t = g.to_tensor()
    assert not t[V2].any() and not t[:, V2 - g.n_inputs].any()


@pytest.mark.parametrize("seed", range(100))
def test_tensor_round_trip(seed):
    g = random_graph(seed, eliminate=seed % 3, vector=seed % 2 == 1)
    t = g.to_tensor()
    h = CompGraph.from_tensor(t, g.n_inputs, eliminated=g.eliminated, vertex_shapes=g.vertex_shapes)
    np.testing.assert_array_equal(h.to_tensor(), t)
    assert h == g
    # without explicit shapes the tensor alone still reproduces itself
    np.testing.assert_array_equal(CompGraph.from_tensor(t, g.n_inputs).to_tensor(), t)


@pytest.mark.parametrize("seed", range(20))
def test_graph_file_round_trip(seed):
    g = random_graph(seed, vector=True)
    text = format_graph(g)
    h = parse_graph(text)
    assert format_graph(h) == text
    assert h.edges == g.edges


def test_graph_file_on_disk(tmp_path):
    g = worked_graph()
    write_graph(g, tmp_path / "g.txt")
    assert (tmp_path / "g.txt").read_text() == "2 2 2\n0 2 1 1 1 1 1\n1 2 1 1 1 1 1\n2 3 1 1 1 1 1\n2 5 1 1 1 1 1\n3 4 1 1 1 1 1\n3 5 1 1 1 1 1\n"
    assert read_graph(tmp_path / "g.txt") == g


@pytest.mark.parametrize("text", ["", "2 2\n", "2 2 2\n0 2 1 1 1 1\n", "2 2 2\n0 2 x 1 1 1 1\n"])
def test_malformed_graph_files(text):
    with pytest.raises(GraphError):
        parse_graph(text)


def test_order_format_is_one_based():
    g = worked_graph()
    assert format_order(g, [V2, V1]) == "2 1\n"
    assert parse_order(g, "2 1") == [V2, V1]
    with pytest.raises(NotIntermediate):
        parse_order(g, "3")


def test_check_complete():
    g = worked_graph()
    check_complete(g, [V1, V2])
    with pytest.raises(DuplicateVertex):
        check_complete(g, [V1, V1])
    with pytest.raises(IncompleteOrder):
        check_complete(g, [V1])
    with pytest.raises(NotIntermediate):
        check_complete(g, [0, V1])
    eliminate_vertex(g, V1)
    with pytest.raises(AlreadyEliminated):
        check_complete(g, [V1, V2])
