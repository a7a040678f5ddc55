"""Network construction, validation, pruning and component tests."""

from __future__ import annotations

import logging
from datetime import date

import numpy as np
import pytest

from schednet import (
    ActivityRecord,
    CycleDetected,
    Dependency,
    DuplicateActivityId,
    EmptyNetwork,
    SelfLoop,
    UnknownActivityId,
    build_network,
    prune_isolated,
    topological_order,
    weakly_connected_components,
)
from oracles import make_network, make_records, random_network, undirected_components


class TestActivityRecord:
    def test_valid_record(self):
        rec = ActivityRecord("a", "A", date(2021, 1, 1), date(2021, 1, 5))
        assert rec.actual_start is None

    def test_empty_id_rejected(self):
        with pytest.raises(ValueError):
            ActivityRecord("", "A", date(2021, 1, 1), date(2021, 1, 5))

    def test_planned_order_enforced(self):
        with pytest.raises(ValueError, match="planned_end"):
            ActivityRecord("a", "A", date(2021, 1, 5), date(2021, 1, 1))

    def test_actual_order_enforced(self):
        with pytest.raises(ValueError, match="actual_end"):
            ActivityRecord(
                "a",
                "A",
                date(2021, 1, 1),
                date(2021, 1, 5),
                actual_start=date(2021, 1, 4),
                actual_end=date(2021, 1, 2),
            )

    def test_single_actual_date_allowed(self):
        rec = ActivityRecord(
            "a", "A", date(2021, 1, 1), date(2021, 1, 5), actual_start=date(2021, 1, 2)
        )
        assert rec.actual_end is None


class TestBuildNetwork:
    def test_three_node_path(self, path3):
        assert path3.n == 3
        assert path3.edges == ((0, 1), (1, 2))
        assert path3.index_of == {"a": 0, "b": 1, "c": 2}

    def test_two_cycle_rejected(self):
        with pytest.raises(CycleDetected) as excinfo:
            make_network("ab", [("a", "b"), ("b", "a")])
        assert set(excinfo.value.cycle) == {"a", "b"}

    def test_longer_cycle_is_named(self):
        with pytest.raises(CycleDetected) as excinfo:
            make_network("abcd", [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])
        assert set(excinfo.value.cycle) == {"a", "b", "c"}

    def test_duplicate_rows_collapse_to_one_edge(self, caplog):
        with caplog.at_level(logging.WARNING):
            net = make_network("ab", [("a", "b"), ("a", "b")])
        assert net.edges == ((0, 1),)
        assert any("duplicate" in record.message for record in caplog.records)

    def test_unknown_id_rejected(self):
        with pytest.raises(UnknownActivityId):
            make_network("ab", [("a", "z")])

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoop):
            make_network("ab", [("a", "a")])

    def test_duplicate_activity_id_rejected(self):
        records = make_records("ab") + make_records("a")
        with pytest.raises(DuplicateActivityId):
            build_network(records, [])

    def test_nodes_sorted_by_id(self):
        records = list(reversed(make_records("abc")))
        net = build_network(records, [Dependency("a", "c")])
        assert net.node_ids == ("a", "b", "c")
        assert net.edges == ((0, 2),)


class TestPruneIsolated:
    def test_drops_isolated_node(self):
        net = make_network("abc", [("a", "b")])
        pruned = prune_isolated(net)
        assert pruned.node_ids == ("a", "b")
        assert pruned.edges == ((0, 1),)

    def test_fixpoint_when_nothing_isolated(self):
        net = make_network("ab", [("a", "b")])
        assert prune_isolated(net) == net

    def test_all_isolated_raises(self):
        net = make_network("abc", [])
        with pytest.raises(EmptyNetwork):
            prune_isolated(net)

    def test_idempotent_on_random_networks(self):
        rng = np.random.default_rng(7)
        for _ in range(30):
            net = random_network(rng, ensure_edge=True)
            once = prune_isolated(net)
            assert prune_isolated(once) == once


class TestComponents:
    def test_two_disjoint_edges(self, two_disjoint_edges):
        summary = weakly_connected_components(two_disjoint_edges)
        assert summary.component_count == 2
        assert summary.largest_component_size == 2

    def test_path(self, path3):
        summary = weakly_connected_components(path3)
        assert summary.component_count == 1
        assert summary.largest_component_size == 3

    def test_labels_ordered_by_smallest_index(self):
        net = make_network("abcd", [("c", "d"), ("a", "b")])
        summary = weakly_connected_components(net)
        assert list(summary.membership) == [0, 0, 1, 1]

    def test_matches_flooding_oracle_on_random_networks(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            net = random_network(rng)
            summary = weakly_connected_components(net)
            expected = undirected_components(net.n, net.edges)
            assert list(summary.membership) == expected
            assert summary.component_count == len(set(expected))

    def test_count_plus_edges_invariant_under_reversal(self):
        rng = np.random.default_rng(13)
        for _ in range(30):
            net = random_network(rng)
            reversed_net = make_network(
                net.node_ids,
                [(net.nodes[t].id, net.nodes[s].id) for s, t in net.edges],
            )
            forward = weakly_connected_components(net)
            backward = weakly_connected_components(reversed_net)
            assert forward.component_count + len(net.edges) == (
                backward.component_count + len(reversed_net.edges)
            )


class TestTopologicalOrder:
    def test_path(self, path3):
        assert topological_order(path3) == [0, 1, 2]

    def test_diamond_tie_break_by_index(self, diamond):
        assert topological_order(diamond) == [0, 1, 2, 3]

    def test_every_edge_points_forward_on_random_networks(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            net = random_network(rng)
            position = {node: k for k, node in enumerate(topological_order(net))}
            for s, t in net.edges:
                assert position[s] < position[t]
