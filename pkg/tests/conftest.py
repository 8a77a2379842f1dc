import pytest

from neronjac import WeightedGraph


@pytest.fixture
def theta():
    """Two weight-0 vertices, three parallel edges; genus 2."""
    return WeightedGraph((0, 0), ((0, 1), (0, 1), (0, 1)))


@pytest.fixture
def bridge_graph():
    """Two weight-1 vertices joined by one edge; genus 2, tree-like."""
    return WeightedGraph((1, 1), ((0, 1),))


@pytest.fixture
def dumbbell():
    """Two weight-0 vertices, a joining edge and a loop on each; genus 2."""
    return WeightedGraph((0, 0), ((0, 0), (0, 1), (1, 1)))


@pytest.fixture
def theta_pendant():
    """Theta plus a pendant weight-1 vertex on vertex 0; genus 3."""
    return WeightedGraph((0, 0, 1), ((0, 1), (0, 1), (0, 1), (0, 2)))


@pytest.fixture
def path3():
    """Path of three weight-1 vertices; genus 3, tree-like."""
    return WeightedGraph((1, 1, 1), ((0, 1), (1, 2)))


@pytest.fixture
def four_cycle():
    """Four weight-1 vertices in a cycle; genus 5."""
    return WeightedGraph((1, 1, 1, 1), ((0, 1), (1, 2), (2, 3), (0, 3)))
