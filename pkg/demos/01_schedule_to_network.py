"""
Turning a project schedule into an activity network
====================================================

A schedule is two lists: activities (with planned and, once known, actual
dates) and finish-to-start dependencies. This walk-through builds the
network for a toy construction job, inspects it, and exports it.
"""

from datetime import date

from schednet import (
    ActivityRecord,
    Dependency,
    build_network,
    network_to_json,
    prune_isolated,
    topological_order,
    weakly_connected_components,
)

# --- the schedule -----------------------------------------------------------
# Six activities; "survey" happened two days early, "roof" ran late.
activities = [
    ActivityRecord("survey", "Site survey", date(2021, 3, 1), date(2021, 3, 3),
                   actual_start=date(2021, 2, 27), actual_end=date(2021, 3, 1)),
    ActivityRecord("found", "Foundations", date(2021, 3, 4), date(2021, 3, 12),
                   actual_start=date(2021, 3, 2), actual_end=date(2021, 3, 11)),
    ActivityRecord("frame", "Framing", date(2021, 3, 15), date(2021, 3, 26),
                   actual_start=date(2021, 3, 15), actual_end=date(2021, 3, 29)),
    ActivityRecord("roof", "Roofing", date(2021, 3, 29), date(2021, 4, 2),
                   actual_start=date(2021, 3, 31), actual_end=date(2021, 4, 7)),
    ActivityRecord("elec", "Electrical rough-in", date(2021, 3, 29), date(2021, 4, 5),
                   actual_start=date(2021, 3, 30), actual_end=date(2021, 4, 6)),
    ActivityRecord("fence", "Perimeter fence", date(2021, 3, 1), date(2021, 3, 5)),
]

dependencies = [
    Dependency("survey", "found"),
    Dependency("found", "frame"),
    Dependency("frame", "roof"),
    Dependency("frame", "elec"),
]

# --- build and validate -----------------------------------------------------
# build_network checks ids, self-loops, duplicates and acyclicity; the
# fence has no dependencies at all, so pruning removes it.
network = build_network(activities, dependencies)
print(f"built:  {network.n} activities, {len(network.edges)} dependencies")

network = prune_isolated(network)
print(f"pruned: {network.n} activities ({'fence' not in network.index_of and 'fence dropped'})")

# --- structure at a glance ---------------------------------------------------
components = weakly_connected_components(network)
print(f"components: {components.component_count}, largest {components.largest_component_size}")

order = topological_order(network)
print("topological order:", " -> ".join(network.nodes[i].id for i in order))

for i in range(network.n):
    succ = ", ".join(network.nodes[j].id for j in network.successors(i)) or "-"
    print(f"  {network.nodes[i].id:7s} unblocks: {succ}")

# --- export ------------------------------------------------------------------
# The JSON form round-trips through network_from_json; edge indices refer
# to node array order.
payload = network_to_json(network)
print("json nodes:", [node["id"] for node in payload["nodes"]])
print("json edges:", payload["edges"])
