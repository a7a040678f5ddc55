"""Activity networks: project schedule rows and their dependencies as a DAG.

A schedule is a list of activities (each with planned and, optionally,
actual start/end dates) plus a list of finish-to-start dependencies.
``build_network`` validates the pair into an :class:`ActivityNetwork`;
``prune_isolated`` drops nodes that take no part in any dependency.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from datetime import date
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CycleDetected,
    DuplicateActivityId,
    EmptyNetwork,
    SelfLoop,
    UnknownActivityId,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ActivityRecord:
    """One schedule row. Planned dates are mandatory, actual dates optional."""

    id: str
    name: str
    planned_start: date
    planned_end: date
    actual_start: date | None = None
    actual_end: date | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("activity id must be a nonempty string")
        if self.planned_end < self.planned_start:
            raise ValueError(f"activity {self.id!r}: planned_end precedes planned_start")
        if (
            self.actual_start is not None
            and self.actual_end is not None
            and self.actual_end < self.actual_start
        ):
            raise ValueError(f"activity {self.id!r}: actual_end precedes actual_start")


@dataclass(frozen=True)
class Dependency:
    """Finish-to-start precedence: predecessor must finish before successor starts."""

    predecessor: str
    successor: str


class ActivityNetwork:
    """Immutable DAG of activities.

    Nodes are stored in ascending id order and addressed by their index in
    that order, so identical inputs always produce identical indexing.
    Edges are deduplicated ``(source index, target index)`` pairs held in
    sorted order. Instances are read-only once constructed and safe to
    share between threads.
    """

    __slots__ = ("nodes", "edges", "index_of", "_succ", "_pred")

    def __init__(self, nodes: Sequence[ActivityRecord], edges: Iterable[tuple[int, int]]) -> None:
        self.nodes: tuple[ActivityRecord, ...] = tuple(nodes)
        self.edges: tuple[tuple[int, int], ...] = tuple(
            sorted({(int(s), int(t)) for s, t in edges})
        )
        n = len(self.nodes)
        for s, t in self.edges:
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"edge ({s}, {t}) references a node outside 0..{n - 1}")
            if s == t:
                raise ValueError(f"edge ({s}, {t}) is a self-loop")
        self.index_of: dict[str, int] = {rec.id: i for i, rec in enumerate(self.nodes)}
        succ: list[list[int]] = [[] for _ in range(n)]
        pred: list[list[int]] = [[] for _ in range(n)]
        for s, t in self.edges:
            succ[s].append(t)
            pred[t].append(s)
        self._succ: tuple[tuple[int, ...], ...] = tuple(tuple(x) for x in succ)
        self._pred: tuple[tuple[int, ...], ...] = tuple(tuple(x) for x in pred)

    @property
    def n(self) -> int:
        """Number of nodes."""
        return len(self.nodes)

    @property
    def node_ids(self) -> tuple[str, ...]:
        return tuple(rec.id for rec in self.nodes)

    @property
    def successor_lists(self) -> tuple[tuple[int, ...], ...]:
        """Per-node tuple of direct successor indices, each in ascending order."""
        return self._succ

    @property
    def predecessor_lists(self) -> tuple[tuple[int, ...], ...]:
        return self._pred

    def successors(self, index: int) -> tuple[int, ...]:
        return self._succ[index]

    def predecessors(self, index: int) -> tuple[int, ...]:
        return self._pred[index]

    def in_degrees(self) -> np.ndarray:
        return np.array([len(p) for p in self._pred], dtype=np.int64)

    def out_degrees(self) -> np.ndarray:
        return np.array([len(s) for s in self._succ], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.nodes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ActivityNetwork):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.nodes, self.edges))

    def __repr__(self) -> str:
        return f"ActivityNetwork(nodes={len(self.nodes)}, edges={len(self.edges)})"


@dataclass(frozen=True)
class ComponentSummary:
    """Weakly connected component census of a network.

    ``membership[i]`` is the component label of node ``i``; labels are
    assigned 0, 1, ... in order of each component's smallest node index.
    """

    component_count: int
    largest_component_size: int
    membership: np.ndarray


def build_network(
    activities: Sequence[ActivityRecord], dependencies: Sequence[Dependency]
) -> ActivityNetwork:
    """Validate a schedule into an :class:`ActivityNetwork`.

    Duplicate dependency rows are collapsed to a single edge (counted and
    logged at warning level). Nodes are indexed in ascending id order.

    Raises:
        DuplicateActivityId: two activities share an id.
        UnknownActivityId: a dependency references a missing activity.
        SelfLoop: a dependency links an activity to itself.
        CycleDetected: the dependencies contain a directed cycle; the
            exception lists one offending cycle.
    """
    seen: set[str] = set()
    for rec in activities:
        if rec.id in seen:
            raise DuplicateActivityId(rec.id)
        seen.add(rec.id)

    records = sorted(activities, key=lambda rec: rec.id)
    index = {rec.id: i for i, rec in enumerate(records)}

    edges: set[tuple[int, int]] = set()
    duplicates = 0
    for dep in dependencies:
        if dep.predecessor == dep.successor:
            raise SelfLoop(dep.predecessor)
        for node_id in (dep.predecessor, dep.successor):
            if node_id not in index:
                raise UnknownActivityId(node_id)
        pair = (index[dep.predecessor], index[dep.successor])
        if pair in edges:
            duplicates += 1
        else:
            edges.add(pair)
    if duplicates:
        logger.warning("collapsed %d duplicate dependency rows", duplicates)

    network = ActivityNetwork(records, edges)
    _assert_acyclic(network)
    return network


def topological_order(network: ActivityNetwork) -> list[int]:
    """Node indices ordered so every edge points forward.

    Ties are broken by ascending node index, so the order is deterministic.

    Raises:
        CycleDetected: defensive; unreachable for validated networks.
    """
    succ = network.successor_lists
    n = network.n
    remaining = [len(p) for p in network.predecessor_lists]
    ready = [i for i in range(n) if remaining[i] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        i = heapq.heappop(ready)
        order.append(i)
        for j in succ[i]:
            remaining[j] -= 1
            if remaining[j] == 0:
                heapq.heappush(ready, j)
    if len(order) < n:
        stuck = [i for i in range(n) if remaining[i] > 0]
        cycle = _find_cycle(succ, stuck)
        raise CycleDetected([network.nodes[i].id for i in cycle])
    return order


def prune_isolated(network: ActivityNetwork) -> ActivityNetwork:
    """Drop every node with no incoming and no outgoing dependency.

    Surviving nodes are re-indexed contiguously, preserving their relative
    (ascending id) order. Idempotent.

    Raises:
        EmptyNetwork: no node has a dependency at all.
    """
    degree = [0] * network.n
    for s, t in network.edges:
        degree[s] += 1
        degree[t] += 1
    keep = [i for i in range(network.n) if degree[i] > 0]
    if not keep:
        raise EmptyNetwork()
    if len(keep) == network.n:
        return network
    remap = {old: new for new, old in enumerate(keep)}
    records = [network.nodes[i] for i in keep]
    edges = [(remap[s], remap[t]) for s, t in network.edges]
    return ActivityNetwork(records, edges)


def weakly_connected_components(network: ActivityNetwork) -> ComponentSummary:
    """Connected components of the undirected view of the network."""
    n = network.n
    parent = list(range(n))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for s, t in network.edges:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)

    labels = np.empty(n, dtype=np.int64)
    label_of_root: dict[int, int] = {}
    for i in range(n):
        root = find(i)
        if root not in label_of_root:
            label_of_root[root] = len(label_of_root)
        labels[i] = label_of_root[root]
    labels.setflags(write=False)

    count = len(label_of_root)
    largest = int(np.bincount(labels).max()) if n else 0
    return ComponentSummary(count, largest, labels)


def _assert_acyclic(network: ActivityNetwork) -> None:
    topological_order(network)


def _find_cycle(succ: Sequence[Sequence[int]], candidates: Sequence[int]) -> list[int]:
    """Return one directed cycle among ``candidates`` (all lie on cycles or paths to them)."""
    state: dict[int, int] = {}  # 1 = on stack, 2 = done
    for start in candidates:
        if state.get(start):
            continue
        stack: list[tuple[int, int]] = [(start, 0)]
        path: list[int] = []
        on_path: dict[int, int] = {}
        while stack:
            node, edge_pos = stack.pop()
            if edge_pos == 0:
                state[node] = 1
                on_path[node] = len(path)
                path.append(node)
            children = succ[node]
            if edge_pos < len(children):
                stack.append((node, edge_pos + 1))
                child = children[edge_pos]
                if state.get(child) == 1:
                    return path[on_path[child]:]
                if not state.get(child):
                    stack.append((child, 0))
            else:
                state[node] = 2
                path.pop()
                del on_path[node]
    raise AssertionError("no cycle found among candidate nodes")
