"""Line-oriented text formats for graphs, readings, and reduction maps.

Graph format:
    p flowmon <n> <m>
    e <u> <v> <w>      (m lines; 0-based endpoints, decimal weight)
    c ...              (comment, anywhere)

Edge ids are assigned in file order. Readings files hold one
`r <edge_id> <signed-int>` line per monitored edge.
"""

from __future__ import annotations

from typing import Mapping

from .errors import ParseError
from .graph import EdgeRecord, Graph
from .weights import Weight

MAX_FLOW = 2**63 - 1


def parse_graph(text: str) -> Graph:
    n = m = None
    records: list[EdgeRecord] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if n is None:
            if fields[0] != "p" or len(fields) != 4 or fields[1] != "flowmon":
                raise ParseError(f"line {lineno}: expected header 'p flowmon <n> <m>'")
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex or edge count") from None
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: counts must be non-negative")
            continue
        if fields[0] != "e" or len(fields) != 4:
            raise ParseError(f"line {lineno}: expected 'e <u> <v> <w>'")
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: endpoint out of range [0, {n})")
        try:
            w = Weight.parse(fields[3])
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if len(records) >= m:
            raise ParseError(f"line {lineno}: more than the declared {m} edges")
        records.append(EdgeRecord(len(records), u, v, w))
    if n is None:
        raise ParseError("line 1: missing 'p flowmon <n> <m>' header")
    if len(records) != m:
        raise ParseError(f"declared {m} edges but found {len(records)}")
    return Graph(n, records)


def format_graph(g: Graph) -> str:
    lines = [f"p flowmon {g.vertex_count} {len(g.edges)}"]
    lines.extend(f"e {e.u} {e.v} {e.weight}" for e in g.edges)
    return "\n".join(lines) + "\n"


def parse_readings(text: str) -> dict[int, int]:
    readings: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] != "r" or len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 'r <edge_id> <value>'")
        try:
            eid, value = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field") from None
        if eid < 0:
            raise ParseError(f"line {lineno}: negative edge id")
        if abs(value) > MAX_FLOW:
            raise ParseError(f"line {lineno}: reading outside signed 64-bit range")
        if eid in readings:
            raise ParseError(f"line {lineno}: duplicate reading for edge {eid}")
        readings[eid] = value
    return readings


def format_readings(readings: Mapping[int, int]) -> str:
    return "".join(f"r {e} {readings[e]}\n" for e in sorted(readings))


def parse_edge_id_list(text: str) -> frozenset[int]:
    """Comma-separated edge ids, e.g. '0,3,5'. Empty string means none."""
    text = text.strip()
    if not text:
        return frozenset()
    ids = set()
    for part in text.split(","):
        try:
            eid = int(part)
        except ValueError:
            raise ParseError(f"bad edge id {part!r} in list") from None
        if eid < 0:
            raise ParseError(f"negative edge id {eid} in list")
        ids.add(eid)
    return frozenset(ids)


def format_reduction_map(rmap, vertex_count: int, edge_count: int) -> str:
    """Sidecar map: `v <orig> <reduced>` per vertex, `g <orig_edge> <group>
    <deputy_orig_edge>` per surviving edge, `zb <orig_edge>` per stripped
    bridge."""
    lines = [f"v {v} {rmap.vertex_map[v]}" for v in range(vertex_count)]
    for e in range(edge_count):
        if e in rmap.stripped_bridges:
            continue
        grp = rmap.group_of[e]
        deputy_orig = rmap.orig_edge_of_reduced[rmap.deputy_of_group[grp]]
        lines.append(f"g {e} {grp} {deputy_orig}")
    lines.extend(f"zb {e}" for e in sorted(rmap.stripped_bridges))
    return "\n".join(lines) + "\n" if lines else ""
