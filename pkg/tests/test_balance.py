import itertools
from fractions import Fraction

import pytest

from neronjac import (
    WeightedGraph,
    alpha,
    blow_up,
    census,
    enumerate_balanced,
    is_balanced,
    is_d_general,
    is_strictly_balanced,
    is_weakly_d_general,
    m_lower_bound,
)
from oracles import brute_force_balanced


class TestLowerBound:
    def test_theta_singleton(self, theta):
        # w = 1, delta = 3, 2g-2 = 2: m = d/2 - 3/2
        assert m_lower_bound(theta, {0}, 1) == Fraction(-1)
        assert m_lower_bound(theta, {0}, 2) == Fraction(-1, 2)

    def test_bridge_graph_singleton(self, bridge_graph):
        # w = 1, delta = 1, 2g-2 = 2: m = d/2 - 1/2
        assert m_lower_bound(bridge_graph, {0}, 1) == Fraction(0)
        assert m_lower_bound(bridge_graph, {0}, 3) == Fraction(1)

    def test_full_curve(self, theta):
        # w = 2g-2, delta = 0: m = d
        for d in range(-3, 4):
            assert m_lower_bound(theta, {0, 1}, d) == d

    def test_genus_one_rejected(self):
        g = WeightedGraph((1,), ())
        with pytest.raises(ValueError):
            m_lower_bound(g, {0}, 1)


class TestIsBalanced:
    def test_theta_degree_one(self, theta):
        balanced = {(-1, 2), (0, 1), (1, 0), (2, -1)}
        for md in itertools.product(range(-3, 4), repeat=2):
            if sum(md) == 1:
                assert is_balanced(theta, md) == (md in balanced)

    def test_theta_strict_degree_one(self, theta):
        strict = {(0, 1), (1, 0)}
        for md in itertools.product(range(-3, 4), repeat=2):
            if sum(md) == 1:
                assert is_strictly_balanced(theta, md) == (md in strict)

    def test_strict_implies_balanced(self, dumbbell):
        for md in itertools.product(range(-2, 4), repeat=2):
            if is_strictly_balanced(dumbbell, md):
                assert is_balanced(dumbbell, md)

    def test_exceptional_must_carry_one(self, bridge_graph):
        hat = blow_up(bridge_graph, {0})
        assert is_balanced(hat, (1, 1, 1))
        assert not is_balanced(hat, (1, 2, 0))
        assert not is_balanced(hat, (0, 0, 3))

    def test_blow_up_boundary_exemption(self, theta):
        # blowing up all three edges: the original vertices meet their bound
        # with equality but every boundary node lies on an exceptional
        # component, so strictness is exempt there
        hat = blow_up(theta, (0, 1, 2))
        md = (-1, -1, 1, 1, 1)
        assert is_balanced(hat, md)
        assert is_strictly_balanced(hat, md)

    def test_wrong_length_rejected(self, theta):
        with pytest.raises(ValueError):
            is_balanced(theta, (1,))


class TestEnumerateBalanced:
    def test_theta_degree_one(self, theta):
        bs = enumerate_balanced(theta, 1)
        assert bs.members == ((-1, 2), (0, 1), (1, 0), (2, -1))
        assert bs.strict_members == ((0, 1), (1, 0))
        assert bs.size == 4 and bs.strict_size == 2

    def test_theta_degree_two(self, theta):
        # m_Z(2) = -1/2 for each vertex, so every entry is >= 0 and no
        # integer can meet the bound with equality
        bs = enumerate_balanced(theta, 2)
        assert bs.members == ((0, 2), (1, 1), (2, 0))
        assert bs.strict_members == bs.members

    def test_lexicographic(self, dumbbell):
        for d in range(-3, 5):
            members = enumerate_balanced(dumbbell, d).members
            assert list(members) == sorted(members)

    def test_agrees_with_pointwise_predicates(self, theta_pendant):
        for d in range(-2, 6):
            bs = enumerate_balanced(theta_pendant, d)
            members = set(bs.members)
            for md in itertools.product(range(-4, 7), repeat=3):
                if sum(md) != d:
                    continue
                assert is_balanced(theta_pendant, md) == (md in members)
            for md in bs.members:
                assert is_strictly_balanced(theta_pendant, md) == (
                    md in bs.strict_members
                )

    @pytest.mark.parametrize("genus,mv", [(2, 2), (3, 3)])
    def test_against_brute_force_oracle(self, genus, mv):
        for g in census(genus, mv):
            box = [(-2 * genus, 3 * genus)] * g.n_vertices
            for d in range(-genus, 2 * genus + 1):
                want_b, want_s = brute_force_balanced(
                    list(g.weights), list(g.edges), set(g.exceptional), d, box
                )
                bs = enumerate_balanced(g, d)
                assert sorted(bs.members) == sorted(want_b)
                assert sorted(bs.strict_members) == sorted(want_s)

    def test_blow_up_against_oracle(self, theta, dumbbell):
        for base in (theta, dumbbell):
            for subset in [(0,), (0, 1), tuple(range(base.n_edges))]:
                hat = blow_up(base, subset)
                box = [(-4, 5)] * hat.n_vertices
                for d in (0, 1, 2, 3):
                    want_b, want_s = brute_force_balanced(
                        list(hat.weights),
                        list(hat.edges),
                        set(hat.exceptional),
                        d,
                        box,
                    )
                    bs = enumerate_balanced(hat, d)
                    assert sorted(bs.members) == sorted(want_b)
                    assert sorted(bs.strict_members) == sorted(want_s)


class TestGenerality:
    def test_theta(self, theta):
        # gcd(d - 1, 2) = 1 exactly when d is even
        for d in range(-4, 6):
            assert is_d_general(theta, d) == (d % 2 == 0)

    def test_bridge_graph_parity(self, bridge_graph):
        # m_{v}(d) = d/2 - 1/2 is an attainable integer exactly when d is odd
        for d in range(-3, 5):
            assert is_d_general(bridge_graph, d) == (d % 2 == 0)

    def test_weakly_general_contracts_bridges(self, bridge_graph):
        # the contraction is a single weight-2 vertex, trivially d-general
        for d in range(-3, 5):
            assert is_weakly_d_general(bridge_graph, d)

    def test_bridgeless_weak_equals_plain(self, theta, four_cycle):
        for g in (theta, four_cycle):
            for d in range(-3, 5):
                assert is_weakly_d_general(g, d) == is_d_general(g, d)

    def test_unstable_rejected(self):
        g = WeightedGraph((0, 2), ((0, 1), (0, 1)))
        assert not g.is_stable
        with pytest.raises(ValueError):
            is_d_general(g, 1)


class TestAlpha:
    def test_identity_without_bridges(self, theta):
        assert alpha(theta, (0, 1)) == (0, 1)

    def test_sums_over_fibers(self, theta_pendant):
        md = next(iter(enumerate_balanced(theta_pendant, 3).members))
        out = alpha(theta_pendant, md)
        assert sum(out) == 3
        assert len(out) == 2

    def test_image_is_balanced(self, theta_pendant):
        from neronjac import contract_separating

        contracted, _ = contract_separating(theta_pendant)
        for d in range(0, 5):
            for md in enumerate_balanced(theta_pendant, d).members:
                assert is_balanced(contracted, alpha(theta_pendant, md))

    def test_unbalanced_rejected(self, theta):
        with pytest.raises(ValueError):
            alpha(theta, (-3, 4))
