import pytest

from crosscountry.elimination import order_cost
from crosscountry.errors import InvalidConfig
from crosscountry.graph import CompGraph
from crosscountry.strategies import STRATEGIES, baseline_order

from conftest import SCALAR_DENSE, V1, V2, worked_graph, random_graph


def test_worked_baselines():
    g = worked_graph()
    assert baseline_order(g, "forward") == [V1, V2]
    assert baseline_order(g, "reverse") == [V2, V1]
    assert baseline_order(g, "min_markowitz") == [V2, V1]
    assert baseline_order(g, "markowitz") == [V2, V1]
    assert order_cost(g, baseline_order(g, "forward")) == 8
    assert order_cost(g, baseline_order(g, "markowitz")) == 6
    assert g.is_fresh


def test_zero_intermediates():
    g = CompGraph(2, 0, 1)
    assert all(baseline_order(g, s) == [] for s in STRATEGIES)


def test_unknown_strategy():
    with pytest.raises(InvalidConfig):
        baseline_order(worked_graph(), "sideways")


@pytest.mark.parametrize("seed", range(15))
def test_strategies_are_complete_permutations(seed):
    g = random_graph(seed, vector=True)
    for s in STRATEGIES:
        order = baseline_order(g, s)
        assert sorted(order) == list(g.intermediates)
    assert baseline_order(g, "markowitz") == baseline_order(g, "markowitz")


def fan_chain(n_in: int, n_mid: int, n_out: int) -> CompGraph:
    """Every input feeds the first link of a scalar chain that feeds every output."""
    g = CompGraph(n_in, n_mid, n_out)
    first, last = n_in, n_in + n_mid - 1
    for i in range(n_in):
        g.add_edge(i, first, SCALAR_DENSE)
    for v in range(first, last):
        g.add_edge(v, v + 1, SCALAR_DENSE)
    for o in range(n_out):
        g.add_edge(last, n_in + n_mid + o, SCALAR_DENSE)
    return g


@pytest.mark.parametrize("n_mid, width", [(3, 2), (5, 4), (8, 3)])
def test_mode_preference_on_chains(n_mid, width):
    one_in = fan_chain(1, n_mid, width)
    assert order_cost(one_in, baseline_order(one_in, "forward")) <= order_cost(
        one_in, baseline_order(one_in, "reverse")
    )
    one_out = fan_chain(width, n_mid, 1)
    assert order_cost(one_out, baseline_order(one_out, "reverse")) <= order_cost(
        one_out, baseline_order(one_out, "forward")
    )
