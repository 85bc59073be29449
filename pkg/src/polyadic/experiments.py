"""Degree-correlation (coauthorship) and clustering (email) experiments."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from polyadic.convert import hypergraph_to_simplicial
from polyadic.ingest import FilterSpec, TimedRelationTable, apply_filter, yearly_slices
from polyadic.metrics import (
    SpearmanResult,
    clustering_all,
    fill_coefficients,
    hyperdegrees,
    hypergraph_clustering_all,
    maximal_participation_all,
    spearman,
)

log = logging.getLogger(__name__)

PAIRS = (("graph-sc", "graph_degree", "sc_degree"),
         ("graph-hg", "graph_degree", "hg_degree"),
         ("sc-hg", "sc_degree", "hg_degree"))


@dataclass(frozen=True)
class DegreeComparisonRow:
    node: int
    label: str
    graph_degree: int
    sc_degree: int
    hg_degree: int


@dataclass(frozen=True)
class CorrelationRow:
    year: int
    pair: str
    rho: float | None
    p_value: float | None
    n: int
    status: str = "ok"


@dataclass(frozen=True)
class EmailExperimentRow:
    email: int
    cardinality: int
    avg_graph_cc: float
    avg_hg_cc: float
    fill: float


def degree_comparison(table: TimedRelationTable, dedup: bool = False) -> list[DegreeComparisonRow]:
    """Degrees of every node with at least one relation, in three formalisms.

    Graph degree is taken on the 2-section, simplicial degree is the number
    of maximal simplices holding the node, hypergraph degree counts hyperedges.
    """
    if dedup:
        table = apply_filter(table, FilterSpec(dedup=True))
    hg = table.hypergraph()
    gd = hg.two_section.degrees()
    sd = maximal_participation_all(hypergraph_to_simplicial(hg))
    hd = hyperdegrees(hg)
    labels = table.labels.labels
    return [DegreeComparisonRow(v, labels[v], int(gd[v]), int(sd[v]), int(hd[v]))
            for v in table.active_nodes().tolist()]


def degree_correlations(year: int, rows: list[DegreeComparisonRow]) -> list[CorrelationRow]:
    out = []
    for name, a, b in PAIRS:
        xs = [getattr(r, a) for r in rows]
        ys = [getattr(r, b) for r in rows]
        if len(rows) < 3:
            out.append(CorrelationRow(year, name, None, None, len(rows),
                                      "skipped: fewer than 3 active nodes"))
            continue
        try:
            res = spearman(xs, ys)
        except ValueError as exc:
            out.append(CorrelationRow(year, name, None, None, len(rows), f"skipped: {exc}"))
            continue
        out.append(CorrelationRow(year, name, res.rho, res.p_value, res.n))
    return out


def coauthor_experiment(table: TimedRelationTable, year_min: int | None = None,
                        year_max: int | None = None, dedup: bool = False):
    """Per-year degree tables and the pairwise Spearman correlations.

    Returns ``(degrees_by_year, correlation_rows)``.
    """
    window = apply_filter(table, FilterSpec(time_min=year_min, time_max=year_max))
    by_year: dict[int, list[DegreeComparisonRow]] = {}
    corr: list[CorrelationRow] = []
    for year, part in yearly_slices(window):
        rows = degree_comparison(part, dedup)
        by_year[year] = rows
        year_corr = degree_correlations(year, rows)
        for c in year_corr:
            if c.status != "ok":
                log.warning("year %d, %s: %s", year, c.pair, c.status)
        corr.extend(year_corr)
    return by_year, corr


@dataclass(frozen=True)
class NodeMeasures:
    """Per-node clustering in both formalisms plus per-row fill coefficients."""

    graph_cc: np.ndarray
    hg_cc: np.ndarray
    fill: np.ndarray

    @classmethod
    def of(cls, table: TimedRelationTable) -> NodeMeasures:
        hg = table.hypergraph()
        return cls(clustering_all(hg.two_section), hypergraph_clustering_all(hg),
                   fill_coefficients(hg))


def email_experiment(table: TimedRelationTable, card_min: int = 5, card_max: int = 25,
                     dedup_teams: bool = False, band_only_graph: bool = False,
                     measures: NodeMeasures | None = None,
                     ) -> tuple[list[EmailExperimentRow], SpearmanResult | None]:
    """One row per email in the cardinality band.

    Clustering is measured on the whole dataset unless ``band_only_graph``,
    in which case both the 2-section and the hypergraph are rebuilt from
    the band alone. ``measures`` may be passed to reuse whole-dataset work.
    """
    band = np.flatnonzero((table.sizes >= card_min) & (table.sizes <= card_max))
    if band.size == 0:
        raise ValueError(f"no relations with cardinality in [{card_min}, {card_max}]")
    if dedup_teams:
        seen = set()
        band = np.array([i for i in band.tolist()
                         if not (table.relation(i) in seen or seen.add(table.relation(i)))],
                        dtype=np.int64)
    if band_only_graph:
        sub = table.take(band)
        m = NodeMeasures.of(sub)
        fill_of = dict(zip(band.tolist(), m.fill.tolist()))
    else:
        m = measures or NodeMeasures.of(table)
        fill_of = {i: float(m.fill[i]) for i in band.tolist()}
    rows = []
    for i in band.tolist():
        rel = list(table.relation(i))
        rows.append(EmailExperimentRow(i, len(rel), float(m.graph_cc[rel].mean()),
                                       float(m.hg_cc[rel].mean()), fill_of[i]))
    try:
        res = spearman([r.avg_graph_cc for r in rows], [r.avg_hg_cc for r in rows])
    except ValueError as exc:
        log.warning("band [%d, %d]: no correlation: %s", card_min, card_max, exc)
        res = None
    return rows, res
