"""CSV and JSON serialization for schedules and networks.

File formats:
  activities CSV:   header ``id,name,planned_start,planned_end,actual_start,actual_end``
                    with ISO-8601 dates; the two actual fields may be empty.
  dependencies CSV: header ``predecessor,successor``.
  network JSON:     ``{"nodes": [{"id": ...}, ...], "edges": [[src, dst], ...]}``
                    with edge indices referencing node array order.
"""

from __future__ import annotations

import csv
import json
from datetime import date
from pathlib import Path
from typing import Any, Sequence

from .errors import ScheduleParseError
from .network import ActivityNetwork, ActivityRecord, Dependency, build_network, prune_isolated

ACTIVITY_FIELDS = ("id", "name", "planned_start", "planned_end", "actual_start", "actual_end")
DEPENDENCY_FIELDS = ("predecessor", "successor")


def read_activities(path: str | Path) -> list[ActivityRecord]:
    """Parse an activities CSV file.

    Raises:
        ScheduleParseError: malformed header, row, date or duplicate id;
            the error carries the 1-based line number.
    """
    path = Path(path)
    records: list[ActivityRecord] = []
    seen: set[str] = set()
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        _expect_header(reader, ACTIVITY_FIELDS, path)
        for line, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue  # blank line
            if len(row) != len(ACTIVITY_FIELDS):
                raise ScheduleParseError(
                    f"expected {len(ACTIVITY_FIELDS)} fields, got {len(row)}",
                    path=str(path),
                    line=line,
                )
            raw = dict(zip(ACTIVITY_FIELDS, (cell.strip() for cell in row)))
            if raw["id"] in seen:
                raise ScheduleParseError(
                    f"duplicate activity id {raw['id']!r}", path=str(path), line=line
                )
            try:
                record = ActivityRecord(
                    id=raw["id"],
                    name=raw["name"],
                    planned_start=_parse_date(raw["planned_start"], "planned_start"),
                    planned_end=_parse_date(raw["planned_end"], "planned_end"),
                    actual_start=_parse_optional_date(raw["actual_start"], "actual_start"),
                    actual_end=_parse_optional_date(raw["actual_end"], "actual_end"),
                )
            except ValueError as exc:
                raise ScheduleParseError(str(exc), path=str(path), line=line) from exc
            seen.add(record.id)
            records.append(record)
    return records


def read_dependencies(
    path: str | Path, known_ids: set[str] | None = None
) -> list[Dependency]:
    """Parse a dependencies CSV file.

    When ``known_ids`` is given, every referenced id is checked against it
    so unknown ids are reported with their line number.
    """
    path = Path(path)
    deps: list[Dependency] = []
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        _expect_header(reader, DEPENDENCY_FIELDS, path)
        for line, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise ScheduleParseError(
                    f"expected 2 fields, got {len(row)}", path=str(path), line=line
                )
            predecessor, successor = (cell.strip() for cell in row)
            if not predecessor or not successor:
                raise ScheduleParseError("empty activity id", path=str(path), line=line)
            if known_ids is not None:
                for node_id in (predecessor, successor):
                    if node_id not in known_ids:
                        raise ScheduleParseError(
                            f"unknown activity id {node_id!r}", path=str(path), line=line
                        )
            deps.append(Dependency(predecessor, successor))
    return deps


def write_activities(path: str | Path, records: Sequence[ActivityRecord]) -> None:
    rows = [
        (
            rec.id,
            rec.name,
            rec.planned_start.isoformat(),
            rec.planned_end.isoformat(),
            rec.actual_start.isoformat() if rec.actual_start else "",
            rec.actual_end.isoformat() if rec.actual_end else "",
        )
        for rec in records
    ]
    _write_csv(path, ACTIVITY_FIELDS, rows)


def write_dependencies(path: str | Path, deps: Sequence[Dependency]) -> None:
    _write_csv(path, DEPENDENCY_FIELDS, [(d.predecessor, d.successor) for d in deps])


def load_network(
    activities_path: str | Path, dependencies_path: str | Path, *, prune: bool = True
) -> ActivityNetwork:
    """Read both schedule files and build the (optionally pruned) network."""
    records = read_activities(activities_path)
    deps = read_dependencies(dependencies_path, known_ids={r.id for r in records})
    network = build_network(records, deps)
    return prune_isolated(network) if prune else network


def network_to_json(network: ActivityNetwork) -> dict[str, Any]:
    nodes = [
        {
            "id": rec.id,
            "name": rec.name,
            "planned_start": rec.planned_start.isoformat(),
            "planned_end": rec.planned_end.isoformat(),
            "actual_start": rec.actual_start.isoformat() if rec.actual_start else None,
            "actual_end": rec.actual_end.isoformat() if rec.actual_end else None,
        }
        for rec in network.nodes
    ]
    return {"nodes": nodes, "edges": [[s, t] for s, t in network.edges]}


def network_from_json(data: dict[str, Any]) -> ActivityNetwork:
    """Rebuild a network from :func:`network_to_json` output (revalidates)."""
    records = [
        ActivityRecord(
            id=node["id"],
            name=node.get("name", ""),
            planned_start=date.fromisoformat(node["planned_start"]),
            planned_end=date.fromisoformat(node["planned_end"]),
            actual_start=_opt_iso(node.get("actual_start")),
            actual_end=_opt_iso(node.get("actual_end")),
        )
        for node in data["nodes"]
    ]
    ids = [rec.id for rec in records]
    deps = [Dependency(ids[s], ids[t]) for s, t in data["edges"]]
    return build_network(records, deps)


def write_network_json(path: str | Path, network: ActivityNetwork) -> None:
    Path(path).write_text(
        json.dumps(network_to_json(network), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )


def _opt_iso(value: str | None) -> date | None:
    return date.fromisoformat(value) if value else None


def _parse_date(text: str, field: str) -> date:
    if not text:
        raise ValueError(f"{field} is required")
    try:
        return date.fromisoformat(text)
    except ValueError:
        raise ValueError(f"{field}: invalid ISO date {text!r}") from None


def _parse_optional_date(text: str, field: str) -> date | None:
    return _parse_date(text, field) if text else None


def _expect_header(reader: Any, expected: Sequence[str], path: Path) -> None:
    try:
        header = next(reader)
    except StopIteration:
        raise ScheduleParseError("file is empty", path=str(path), line=1) from None
    if [cell.strip() for cell in header] != list(expected):
        raise ScheduleParseError(
            f"expected header {','.join(expected)!r}", path=str(path), line=1
        )


def _write_csv(path: str | Path, header: Sequence[str], rows: Sequence[Sequence[str]]) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
