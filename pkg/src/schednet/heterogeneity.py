"""Heterogeneity scores for activity networks.

Two related measures of structural irregularity:

* ``estrada_rho``: degree-based score over direct edges,
  ``sum((1/sqrt(k_out(i)) - 1/sqrt(k_in(j)))^2)`` for every edge (i, j),
  normalized by ``n - 2*sqrt(n - 1)``.
* ``rh_global``: the reachability-heterogeneity (RH) score. Same form, but
  summed over every reachable pair (i, j) with j a proper descendant of i,
  replacing degrees with i's descendant count and j's ancestor count.
* ``rh_local``: a node's contribution to the global score, defined as the
  global score minus the global score of the network with that node (and
  its incident edges) removed. Newly isolated nodes stay in the count.

Scores are zero for networks with at most two nodes or no reachable pair:
the normalization vanishes at n = 2 while the raw sum is provably zero
there, so zero is the homogeneous-limit value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateNormalization, UnknownNode
from .network import ActivityNetwork
from .reachability import descendant_bitsets, linear_topological_order


@dataclass(frozen=True)
class HeterogeneityScore:
    """A heterogeneity value with the node and pair counts behind it."""

    value: float
    node_count: int
    pair_count: int


@dataclass(frozen=True)
class LocalRHVector:
    """Per-node local RH scores, aligned to node index order."""

    values: np.ndarray
    global_score: HeterogeneityScore


def estrada_rho(network: ActivityNetwork) -> HeterogeneityScore:
    """Degree-based heterogeneity over direct edges.

    Zero for any graph whose edge endpoints all have matching out/in
    degrees (paths, cycles of matched degree); 1.0 for the 3-node out-star.
    Networks with n <= 2 score zero by convention.

    Raises:
        DegenerateNormalization: defensively, if n == 2 ever yields a
            nonzero raw sum (impossible for simple DAGs).
    """
    n = network.n
    out_deg = network.out_degrees()
    in_deg = network.in_degrees()
    raw = 0.0
    for s, t in network.edges:
        diff = 1.0 / math.sqrt(out_deg[s]) - 1.0 / math.sqrt(in_deg[t])
        raw += diff * diff
    if n <= 2:
        if raw != 0.0:
            raise DegenerateNormalization(
                f"nonzero heterogeneity sum {raw} with {n} nodes"
            )
        return HeterogeneityScore(0.0, n, len(network.edges))
    return HeterogeneityScore(raw / _normalizer(n), n, len(network.edges))


def rh_global(network: ActivityNetwork) -> HeterogeneityScore:
    """Global reachability-heterogeneity score of a network."""
    value, pair_count = _rh_value(network.successor_lists, network.n)
    return HeterogeneityScore(value, network.n, pair_count)


def rh_local(network: ActivityNetwork, node: int) -> float:
    """Drop in global RH caused by removing one node (may be negative).

    The removed node's incident edges go with it; any node isolated by the
    removal still counts toward the smaller network's normalization.
    """
    if not 0 <= node < network.n:
        raise UnknownNode(node)
    base = rh_global(network).value
    removed_value, _ = _rh_value(_drop_node(network.successor_lists, node), network.n - 1)
    return base - removed_value


def rh_local_all(network: ActivityNetwork) -> LocalRHVector:
    """Local RH for every node.

    Each entry equals ``rh_local(network, i)`` bit for bit: the batch runs
    the same one-node-removed evaluation per node, sharing only the base
    score.
    """
    base = rh_global(network)
    succ = network.successor_lists
    n = network.n
    values = np.empty(n, dtype=np.float64)
    for node in range(n):
        removed_value, _ = _rh_value(_drop_node(succ, node), n - 1)
        values[node] = base.value - removed_value
    values.setflags(write=False)
    return LocalRHVector(values, base)


def _normalizer(n: int) -> float:
    return n - 2.0 * math.sqrt(n - 1)


def _drop_node(
    succ: Sequence[Sequence[int]], node: int
) -> tuple[tuple[int, ...], ...]:
    """Adjacency of the subgraph without ``node``, indices compacted."""
    return tuple(
        tuple(j if j < node else j - 1 for j in succ[i] if j != node)
        for i in range(len(succ))
        if i != node
    )


def _rh_value(succ: Sequence[Sequence[int]], n: int) -> tuple[float, int]:
    """RH value and reachable-pair count for an adjacency structure.

    The pair sum expands to ``#(i: d_i > 0) + #(j: a_j > 0) - 2 * u' R w``
    with u = 1/sqrt(d), w = 1/sqrt(a) and R the reachability matrix, so one
    matrix-vector product replaces iteration over every reachable pair.
    Every summed term has d_i >= 1 and a_j >= 1 by construction, so no
    division by zero can occur.
    """
    if n == 0:
        return 0.0, 0
    order = linear_topological_order(succ)
    bits = descendant_bitsets(succ, order)
    d = np.array([b.bit_count() for b in bits], dtype=np.int64)
    pair_count = int(d.sum())
    if n <= 2 or pair_count == 0:
        return 0.0, pair_count

    nbytes = (n + 7) // 8
    packed = np.frombuffer(
        b"".join(b.to_bytes(nbytes, "little") for b in bits), dtype=np.uint8
    ).reshape(n, nbytes)
    reach = np.unpackbits(packed, axis=1, bitorder="little", count=n).astype(np.float64)

    a = reach.sum(axis=0)
    sources = int(np.count_nonzero(d))
    targets = int(np.count_nonzero(a))
    u = np.zeros(n, dtype=np.float64)
    np.divide(1.0, np.sqrt(d, dtype=np.float64), out=u, where=d > 0)
    w = np.zeros(n, dtype=np.float64)
    np.divide(1.0, np.sqrt(a), out=w, where=a > 0)

    cross = float(u @ (reach @ w))
    raw = sources + targets - 2.0 * cross
    if raw < 0.0:  # cancellation noise on near-homogeneous graphs
        raw = 0.0
    return raw / _normalizer(n), pair_count
