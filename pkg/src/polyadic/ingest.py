"""Readers for timestamped relation data and the filters applied to it.

Two text formats are understood:

* the triple-file layout ``<name>-nverts.txt``, ``<name>-simplices.txt``,
  ``<name>-times.txt`` (one integer per line each);
* relation lines: one relation per line, whitespace-separated labels,
  optionally led by a ``t=<int>`` timestamp token.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator

import numpy as np

from polyadic.core import Hypergraph, LabelMap, Relation
from polyadic.errors import ParseError

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TimedRelationTable:
    """Rows of ``(timestamp, relation)`` in file order, stored as CSR arrays.

    Members of each row are ascending node ids into ``labels``.
    """

    labels: LabelMap
    times: np.ndarray
    indptr: np.ndarray
    members: np.ndarray
    duplicates_collapsed: int = field(default=0, compare=False)

    def __len__(self) -> int:
        return int(self.times.size)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def sizes(self) -> np.ndarray:
        return np.diff(self.indptr)

    def relation(self, i: int) -> Relation:
        return tuple(self.members[self.indptr[i]:self.indptr[i + 1]].tolist())

    @property
    def rows(self) -> list[tuple[int, Relation]]:
        return list(self)

    def __iter__(self) -> Iterator[tuple[int, Relation]]:
        times = self.times.tolist()
        for i, t in enumerate(times):
            yield t, self.relation(i)

    def take(self, idx: np.ndarray) -> TimedRelationTable:
        """Sub-table of the given row indices (in that order); labels unchanged."""
        idx = np.asarray(idx, dtype=np.int64)
        sizes = self.sizes[idx]
        indptr = np.zeros(idx.size + 1, dtype=np.int64)
        np.cumsum(sizes, out=indptr[1:])
        starts = np.repeat(self.indptr[idx] - indptr[:-1], sizes)
        members = self.members[np.arange(indptr[-1]) + starts]
        return TimedRelationTable(self.labels, self.times[idx], indptr, members)

    def hypergraph(self) -> Hypergraph:
        return Hypergraph.from_csr(self.n, self.indptr, self.members)

    def active_nodes(self) -> np.ndarray:
        return np.unique(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimedRelationTable):
            return NotImplemented
        return (self.labels == other.labels and np.array_equal(self.times, other.times)
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.members, other.members))


def _lines(text: str) -> list[str]:
    # trailing blank lines are tolerated, interior ones are not
    return text.rstrip("\r\n\t ").splitlines() if text.strip() else []


def _parse_ints(text: str, name: str) -> np.ndarray:
    lines = _lines(text)
    try:
        return np.array(lines, dtype=np.int64)
    except ValueError:
        for i, line in enumerate(lines, 1):
            try:
                int(line)
            except ValueError:
                raise ParseError(f"{name} line {i}: not an integer: {line.strip()!r}") from None
        raise


def _first_appearance(raw: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Dense ids by first appearance, plus the raw value of each id."""
    uniq, first, inverse = np.unique(raw, return_index=True, return_inverse=True)
    order = np.argsort(first, kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    return rank[inverse].ravel(), uniq[order]


def _normalise_rows(sizes: np.ndarray, ids: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Sort members within rows and drop repeats; returns (indptr, members, dropped)."""
    row_of = np.repeat(np.arange(sizes.size), sizes)
    order = np.lexsort((ids, row_of))
    row_of, ids = row_of[order], ids[order]
    keep = np.ones(ids.size, dtype=bool)
    keep[1:] = (row_of[1:] != row_of[:-1]) | (ids[1:] != ids[:-1])
    dropped = int(ids.size - keep.sum())
    indptr = np.zeros(sizes.size + 1, dtype=np.int64)
    np.cumsum(np.bincount(row_of[keep], minlength=sizes.size), out=indptr[1:])
    return indptr, ids[keep], dropped


def parse_triple_files(nverts_text: str, simplices_text: str, times_text: str) -> TimedRelationTable:
    nverts = _parse_ints(nverts_text, "nverts")
    simplices = _parse_ints(simplices_text, "simplices")
    times = _parse_ints(times_text, "times")
    bad = np.flatnonzero(nverts <= 0)
    if bad.size:
        raise ParseError(f"nverts line {bad[0] + 1}: relation size must be positive, got {nverts[bad[0]]}")
    if times.size != nverts.size:
        raise ParseError(f"times has {times.size} lines but nverts has {nverts.size}")
    ends = np.cumsum(nverts)
    if ends.size and ends[-1] > simplices.size:
        row = int(np.searchsorted(ends, simplices.size, side="right"))
        raise ParseError(
            f"simplices file exhausted at nverts line {row + 1}: "
            f"needs {int(ends[row])} vertices, file has {simplices.size}")
    total = int(ends[-1]) if ends.size else 0
    if simplices.size > total:
        raise ParseError(f"simplices line {total + 1}: {simplices.size - total} lines beyond the last relation")
    ids, raw = _first_appearance(simplices)
    indptr, members, dropped = _normalise_rows(nverts, ids)
    if dropped:
        log.warning("collapsed %d repeated vertices within relations", dropped)
    labels = LabelMap(tuple(str(x) for x in raw.tolist()))
    return TimedRelationTable(labels, times, indptr, members, dropped)


def triple_paths(prefix: str | Path) -> tuple[Path, Path, Path]:
    p = str(prefix)
    return Path(f"{p}-nverts.txt"), Path(f"{p}-simplices.txt"), Path(f"{p}-times.txt")


def read_triple_files(prefix: str | Path) -> TimedRelationTable:
    texts = [path.read_text(encoding="utf-8") for path in triple_paths(prefix)]
    return parse_triple_files(*texts)


def write_triple_files(t: TimedRelationTable) -> tuple[str, str, str]:
    """Serialise to ``(nverts, simplices, times)`` texts; labels must be integers."""
    for lab in t.labels.labels:
        try:
            int(lab)
        except ValueError:
            raise ValueError(f"label {lab!r} is not an integer; triple files need integer labels") from None
    raw = np.array([int(x) for x in t.labels.labels], dtype=np.int64)

    def text(a):
        return "".join(f"{x}\n" for x in a.tolist())

    return text(t.sizes), text(raw[t.members]), text(t.times)


def parse_relation_lines(text: str) -> TimedRelationTable:
    label_ids: dict[str, int] = {}
    times: list[int] = []
    rows: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens:
            continue
        t = 0
        if tokens[0].startswith("t="):
            try:
                t = int(tokens[0][2:])
            except ValueError:
                raise ParseError(f"line {lineno}: bad timestamp {tokens[0]!r}") from None
            tokens = tokens[1:]
        if not tokens:
            raise ParseError(f"line {lineno}: timestamp without any members")
        rows.append([label_ids.setdefault(tok, len(label_ids)) for tok in tokens])
        times.append(t)
    sizes = np.array([len(r) for r in rows], dtype=np.int64)
    ids = np.array([x for r in rows for x in r], dtype=np.int64)
    indptr, members, dropped = _normalise_rows(sizes, ids)
    if dropped:
        log.warning("collapsed %d repeated labels within relations", dropped)
    return TimedRelationTable(LabelMap(tuple(label_ids)), np.array(times, dtype=np.int64),
                              indptr, members, dropped)


def write_relation_lines(t: TimedRelationTable, with_times: bool = False) -> str:
    labs = t.labels.labels
    out = []
    for ts, rel in t:
        body = " ".join(labs[x] for x in rel)
        out.append(f"t={ts} {body}\n" if with_times else f"{body}\n")
    return "".join(out)


@dataclass(frozen=True)
class FilterSpec:
    """Inclusive time window and cardinality band; ``None`` leaves a side open."""

    time_min: int | None = None
    time_max: int | None = None
    card_min: int | None = None
    card_max: int | None = None
    dedup: bool = False

    def __post_init__(self):
        if None not in (self.time_min, self.time_max) and self.time_min > self.time_max:
            raise ValueError("time_min > time_max")
        if None not in (self.card_min, self.card_max) and self.card_min > self.card_max:
            raise ValueError("card_min > card_max")

    def intersect(self, other: FilterSpec) -> FilterSpec:
        """Both filters at once; disjoint bounds give a spec that matches no row."""
        def tighter(a, b, pick):
            return b if a is None else a if b is None else pick(a, b)

        lo_t = tighter(self.time_min, other.time_min, max)
        hi_t = tighter(self.time_max, other.time_max, min)
        lo_c = tighter(self.card_min, other.card_min, max)
        hi_c = tighter(self.card_max, other.card_max, min)
        dedup = self.dedup or other.dedup
        if (None not in (lo_t, hi_t) and lo_t > hi_t) or (None not in (lo_c, hi_c) and lo_c > hi_c):
            # relations are nonempty, so a zero-cardinality band is empty
            return FilterSpec(card_min=0, card_max=0, dedup=dedup)
        return replace(self, time_min=lo_t, time_max=hi_t, card_min=lo_c, card_max=hi_c, dedup=dedup)


def apply_filter(t: TimedRelationTable, f: FilterSpec) -> TimedRelationTable:
    """Restrict rows to the window and band, then optionally keep first copies."""
    keep = np.ones(len(t), dtype=bool)
    sizes = t.sizes
    if f.time_min is not None:
        keep &= t.times >= f.time_min
    if f.time_max is not None:
        keep &= t.times <= f.time_max
    if f.card_min is not None:
        keep &= sizes >= f.card_min
    if f.card_max is not None:
        keep &= sizes <= f.card_max
    idx = np.flatnonzero(keep)
    if f.dedup:
        seen: set[Relation] = set()
        first = []
        for i in idx.tolist():
            rel = t.relation(i)
            if rel not in seen:
                seen.add(rel)
                first.append(i)
        idx = np.array(first, dtype=np.int64)
    return t.take(idx)


def yearly_slices(t: TimedRelationTable) -> list[tuple[int, TimedRelationTable]]:
    """One sub-table per distinct timestamp, ascending; row order kept."""
    if not len(t):
        return []
    order = np.argsort(t.times, kind="stable")
    years, starts = np.unique(t.times[order], return_index=True)
    bounds = list(starts[1:]) + [order.size]
    return [(int(y), t.take(order[s:e])) for y, s, e in zip(years, starts, bounds)]
