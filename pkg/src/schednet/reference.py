"""Published reference values for four proprietary project networks.

The reported analysis behind this library covered four infrastructure
construction schedules - a highway (HW), a data centre (DC), a wind farm
(WF) and a power network (PN) - whose data are not redistributable, so
none of these numbers can be recomputed here. They are retained as
documentation fixtures: shape and consistency checks only, never as
regression targets.
"""

from __future__ import annotations

PROJECTS = ("HW", "DC", "WF", "PN")

# Network census per project: activities, dependencies, weakly connected
# components, size of the largest component.
NETWORK_STATS: dict[str, dict[str, int]] = {
    "HW": {"nodes": 682, "dependencies": 666, "wccs": 113, "largest_wcc": 100},
    "DC": {"nodes": 1185, "dependencies": 1510, "wccs": 111, "largest_wcc": 440},
    "WF": {"nodes": 266, "dependencies": 425, "wccs": 1, "largest_wcc": 266},
    "PN": {"nodes": 129, "dependencies": 138, "wccs": 10, "largest_wcc": 62},
}

# Global reachability-heterogeneity score per project.
GLOBAL_RH: dict[str, float] = {
    "HW": 0.238,
    "DC": 0.332,
    "WF": 0.680,
    "PN": 0.514,
}

# Mutual information (and rank, 1 = highest) of each node metric against
# Start Delay, per project.
MI_BENCHMARK: dict[str, dict[str, tuple[float, int]]] = {
    "in_degree": {
        "HW": (0.287, 8),
        "DC": (0.134, 7),
        "WF": (0.285, 8),
        "PN": (0.045, 8),
    },
    "out_degree": {
        "HW": (0.304, 7),
        "DC": (0.117, 8),
        "WF": (0.293, 7),
        "PN": (0.047, 7),
    },
    "betweenness": {
        "HW": (0.920, 4),
        "DC": (0.250, 6),
        "WF": (0.667, 3),
        "PN": (0.092, 6),
    },
    "closeness": {
        "HW": (1.209, 2),
        "DC": (0.507, 1),
        "WF": (0.653, 4),
        "PN": (0.106, 5),
    },
    "reverse_closeness": {
        "HW": (0.975, 3),
        "DC": (0.353, 4),
        "WF": (0.689, 2),
        "PN": (0.123, 4),
    },
    "descendants": {
        "HW": (0.686, 6),
        "DC": (0.274, 5),
        "WF": (0.561, 6),
        "PN": (0.148, 3),
    },
    "ancestors": {
        "HW": (0.812, 5),
        "DC": (0.382, 2),
        "WF": (0.586, 5),
        "PN": (0.149, 2),
    },
    "local_rh": {
        "HW": (1.709, 1),
        "DC": (0.354, 3),
        "WF": (0.821, 1),
        "PN": (0.208, 1),
    },
}
