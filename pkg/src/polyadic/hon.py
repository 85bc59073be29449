"""Fixed-order higher-order networks built from observed paths.

A HON node is a unit together with the units visited just before it
(at most ``order - 1`` of them, fewer near the start of a path). Splitting
nodes by context keeps walks from stitching together path fragments that
never occurred in a single path.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

# context is oldest-first internally; rendering shows most recent first
HonNode = tuple[tuple[str, ...], str]


def render_node(node: HonNode) -> str:
    context, unit = node
    return f"{unit}|{','.join(reversed(context))}"


def parse_node(text: str) -> HonNode:
    unit, _, ctx = text.partition("|")
    context = tuple(reversed(ctx.split(","))) if ctx else ()
    return context, unit


@dataclass(frozen=True)
class Hon:
    order: int
    nodes: frozenset[HonNode]
    edges: dict[tuple[HonNode, HonNode], int]

    @property
    def units(self) -> frozenset[str]:
        return frozenset(u for _, u in self.nodes)

    def successors(self) -> dict[HonNode, list[HonNode]]:
        out: dict[HonNode, list[HonNode]] = {}
        for src, dst in self.edges:
            out.setdefault(src, []).append(dst)
        return out

    def edge_lines(self) -> list[str]:
        """``src TAB dst TAB count`` lines, sorted."""
        return sorted(f"{render_node(s)}\t{render_node(d)}\t{c}" for (s, d), c in self.edges.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hon):
            return NotImplemented
        return (self.order, self.nodes, self.edges) == (other.order, other.nodes, other.edges)


def build_hon(paths: Iterable[Sequence[str]], order: int = 2) -> Hon:
    if order < 1:
        raise ValueError("order must be at least 1")
    keep = order - 1
    nodes: set[HonNode] = set()
    counts: Counter = Counter()
    n_paths = 0
    for i, path in enumerate(paths):
        path = tuple(path)
        if len(path) < 2:
            raise ValueError(f"path {i} has fewer than 2 entries")
        n_paths += 1
        prev = None
        for pos, unit in enumerate(path):
            node = (path[max(0, pos - keep):pos], unit)
            nodes.add(node)
            if prev is not None:
                counts[prev, node] += 1
            prev = node
    if not n_paths:
        raise ValueError("empty path set")
    return Hon(order, frozenset(nodes), dict(counts))


def hon_reachable(h: Hon, src: str, dst: str) -> bool:
    """Is there a walk of length >= 1 from some ``src`` node to some ``dst`` node?"""
    units = h.units
    for label in (src, dst):
        if label not in units:
            raise KeyError(f"unknown label {label!r}")
    succ = h.successors()
    queue = deque(node for node in h.nodes if node[1] == src)
    seen: set[HonNode] = set()
    while queue:
        for nxt in succ.get(queue.popleft(), ()):
            if nxt[1] == dst:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def project_first_order(h: Hon) -> Hon:
    """Merge nodes sharing a unit, summing transition counts."""
    counts: Counter = Counter()
    for (s, d), c in h.edges.items():
        counts[((), s[1]), ((), d[1])] += c
    nodes = frozenset(((), u) for u in h.units)
    return Hon(1, nodes, dict(counts))


def parse_paths(text: str) -> list[list[str]]:
    """One path per line, whitespace-separated unit labels; blank lines skipped."""
    return [line.split() for line in text.splitlines() if line.strip()]
