"""Independent brute-force oracles used to cross-check library results.

Everything here is deliberately naive: per-source DFS for reachability,
explicit pair sums for heterogeneity, exhaustive path enumeration for
betweenness. None of it shares code with the implementations it checks.
"""

from __future__ import annotations

import math
from datetime import date

import numpy as np

from schednet import ActivityRecord, Dependency, build_network

DAY0 = date(2021, 1, 1)
DAY4 = date(2021, 1, 5)


def make_records(ids, planned_start=DAY0, planned_end=DAY4):
    return [ActivityRecord(i, f"activity {i}", planned_start, planned_end) for i in ids]


def make_network(ids, edge_pairs):
    """Network from id list and (predecessor id, successor id) pairs."""
    return build_network(make_records(ids), [Dependency(a, b) for a, b in edge_pairs])


def random_network(rng, n_min=2, n_max=12, p=None, ensure_edge=False):
    """Random DAG whose edges all point from lower to higher id."""
    n = int(rng.integers(n_min, n_max + 1))
    ids = [f"n{i:02d}" for i in range(n)]
    if p is None:
        p = float(rng.uniform(0.1, 0.5))
    pairs = [
        (ids[i], ids[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    if ensure_edge and not pairs and n >= 2:
        pairs = [(ids[0], ids[1])]
    return make_network(ids, pairs)


def dfs_reachable_sets(succ):
    """Per-source proper descendant sets via plain DFS."""
    n = len(succ)
    sets = []
    for source in range(n):
        seen = set()
        stack = list(succ[source])
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(succ[node])
        sets.append(seen)
    return sets


def reversed_adjacency(succ):
    n = len(succ)
    pred = [[] for _ in range(n)]
    for i, children in enumerate(succ):
        for j in children:
            pred[j].append(i)
    return pred


def rh_from_pair_sum(succ, n):
    """Direct evaluation of the reachability-heterogeneity definition.

    Sums (1/sqrt(d_i) - 1/sqrt(a_j))^2 over DFS-derived reachable pairs,
    one term at a time.
    """
    desc = dfs_reachable_sets(succ)
    anc = dfs_reachable_sets(reversed_adjacency(succ))
    d = [len(s) for s in desc]
    a = [len(s) for s in anc]
    pairs = [(i, j) for i in range(n) for j in sorted(desc[i])]
    if n <= 2 or not pairs:
        return 0.0
    total = 0.0
    for i, j in pairs:
        diff = 1.0 / math.sqrt(d[i]) - 1.0 / math.sqrt(a[j])
        total += diff * diff
    return total / (n - 2.0 * math.sqrt(n - 1))


def enumerate_betweenness(succ, n):
    """Betweenness by exhaustive enumeration of every simple directed path."""

    def all_paths(source, target):
        paths = []
        stack = [(source, [source])]
        while stack:
            node, path = stack.pop()
            if node == target:
                paths.append(path)
                continue
            for child in succ[node]:
                if child not in path:
                    stack.append((child, path + [child]))
        return paths

    score = np.zeros(n)
    for s in range(n):
        for t in range(n):
            if s == t:
                continue
            paths = all_paths(s, t)
            if not paths:
                continue
            shortest = min(len(p) for p in paths)
            geodesics = [p for p in paths if len(p) == shortest]
            for path in geodesics:
                for node in path[1:-1]:
                    score[node] += 1.0 / len(geodesics)
    return score


def undirected_components(n, edges):
    """Component labelling by repeated breadth-first flooding."""
    adjacency = [[] for _ in range(n)]
    for s, t in edges:
        adjacency[s].append(t)
        adjacency[t].append(s)
    label = [-1] * n
    current = 0
    for start in range(n):
        if label[start] != -1:
            continue
        frontier = [start]
        label[start] = current
        while frontier:
            node = frontier.pop()
            for other in adjacency[node]:
                if label[other] == -1:
                    label[other] = current
                    frontier.append(other)
        current += 1
    return label
