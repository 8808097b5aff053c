"""Threshold network over the catalog and its statistics.

Nodes are catalog labels; an edge joins two rows when their squared
voice-leading distance is positive and at most the threshold (inclusive).
Components, degrees, communities, cliques and the degree-distribution fit
all operate on this graph.
"""

from __future__ import annotations

import csv
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

import networkx as nx
import numpy as np

from .catalog import CatalogEntry
from .distances import distance_matrix

DEFAULT_THRESHOLD_SQ = 20
WEIGHT_MODES = ("inverse_d2", "inverse_d")


class EmptyGraphError(ValueError):
    """Graph has no edges; the statistic is undefined."""


class InsufficientDataError(ValueError):
    """Too few support points to fit the degree distribution."""


class UnknownLabelError(KeyError):
    """Label does not name a catalog node."""


def edge_weight(d_squared: int, weight_mode: str) -> float:
    if weight_mode == "inverse_d2":
        return 1.0 / d_squared
    if weight_mode == "inverse_d":
        return 1.0 / math.sqrt(d_squared)
    raise ValueError(f"unknown weight mode {weight_mode!r}")


def build_network(
    entries: Sequence[CatalogEntry],
    threshold_sq: int = DEFAULT_THRESHOLD_SQ,
    weight_mode: str = "inverse_d2",
    dmat: np.ndarray | None = None,
) -> nx.Graph:
    """Threshold graph on the catalog: edges where 0 < d^2 <= threshold."""
    if threshold_sq < 0:
        raise ValueError("threshold_sq must be nonnegative")
    if dmat is None:
        dmat = distance_matrix([e.row for e in entries])
    g = nx.Graph(threshold_sq=threshold_sq, weight_mode=weight_mode)
    for e in entries:
        g.add_node(
            e.label,
            index=e.index,
            row=" ".join(str(p) for p in e.row),
            s=int(e.is_s),
            p=int(e.is_p),
            l=int(e.is_l),
        )
    ii, jj = np.nonzero((dmat > 0) & (dmat <= threshold_sq))
    for i, j in zip(ii.tolist(), jj.tolist()):
        if i < j:
            d2 = int(dmat[i, j])
            g.add_edge(
                entries[i].label,
                entries[j].label,
                d_squared=d2,
                weight=edge_weight(d2, weight_mode),
            )
    return g


def connected_components(g: nx.Graph) -> list[set[str]]:
    """Maximal connected node sets, largest first (ties by smallest index)."""
    comps = list(nx.connected_components(g))
    return sorted(
        comps, key=lambda c: (-len(c), min(g.nodes[n]["index"] for n in c))
    )


def hermits(g: nx.Graph) -> list[str]:
    """Zero-degree nodes, in catalog order."""
    iso = [n for n in g.nodes if g.degree(n) == 0]
    return sorted(iso, key=lambda n: g.nodes[n]["index"])


@dataclass(frozen=True)
class DegreeStats:
    degrees: dict[str, int]
    average: float
    histogram: dict[int, int]


def degree_stats(g: nx.Graph) -> DegreeStats:
    """Exact node degrees, their average over all nodes, and the histogram."""
    degrees = {n: int(d) for n, d in g.degree()}
    hist: dict[int, int] = {}
    for d in degrees.values():
        hist[d] = hist.get(d, 0) + 1
    average = sum(degrees.values()) / len(degrees) if degrees else 0.0
    return DegreeStats(degrees=degrees, average=average, histogram=dict(sorted(hist.items())))


@dataclass(frozen=True)
class CommunityAssignment:
    partition: dict[str, int]
    modularity: float
    seed: int


def louvain_communities(g: nx.Graph, seed: int) -> CommunityAssignment:
    """Seeded Louvain partition (resolution 1.0) with its Newman modularity.

    The optimizer runs on an integer-relabeled twin of the graph: set
    iteration over string labels depends on per-process hash randomization,
    which would leak into float summation order and break byte-identical
    reruns. Community ids are renumbered by each community's smallest
    catalog index, so equal seeds yield identical, export-stable results.
    """
    if g.number_of_edges() == 0:
        raise EmptyGraphError("modularity is undefined on an edgeless graph")
    order = sorted(g.nodes, key=lambda n: g.nodes[n]["index"])
    to_int = {n: i for i, n in enumerate(order)}
    h = nx.Graph()
    h.add_nodes_from(range(len(order)))
    h.add_weighted_edges_from(
        (to_int[a], to_int[b], g.edges[a, b]["weight"]) for a, b in g.edges
    )
    communities = nx.community.louvain_communities(
        h, weight="weight", resolution=1.0, seed=seed
    )
    q = nx.community.modularity(h, communities, weight="weight")
    ordered = sorted(communities, key=min)
    partition = {
        order[i]: cid for cid, members in enumerate(ordered) for i in members
    }
    return CommunityAssignment(partition=partition, modularity=float(q), seed=seed)


def assign_community_attrs(g: nx.Graph, assignment: CommunityAssignment) -> None:
    for n, cid in assignment.partition.items():
        g.nodes[n]["community"] = cid


@dataclass(frozen=True)
class PowerLawFit:
    alpha: float
    lam: float
    goodness: float


def _log_space_fit(histogram: Mapping[int, float], with_cutoff: bool) -> PowerLawFit:
    ks = sorted(k for k, c in histogram.items() if k >= 1 and c > 0)
    if len(ks) < 3:
        raise InsufficientDataError(
            f"need at least 3 nonzero-frequency degrees >= 1, got {len(ks)}"
        )
    counts = np.array([histogram[k] for k in ks], dtype=float)
    logp = np.log(counts / counts.sum())
    karr = np.array(ks, dtype=float)
    cols = [np.ones_like(karr), -np.log(karr)]
    if with_cutoff:
        cols.append(-karr)
    design = np.column_stack(cols)
    coef, *_ = np.linalg.lstsq(design, logp, rcond=None)
    resid = logp - design @ coef
    ss_tot = float(((logp - logp.mean()) ** 2).sum())
    goodness = 1.0 - float((resid**2).sum()) / ss_tot if ss_tot > 0 else 1.0
    lam = float(coef[2]) if with_cutoff else 0.0
    return PowerLawFit(alpha=float(coef[1]), lam=lam, goodness=goodness)


def fit_truncated_power_law(histogram: Mapping[int, float]) -> PowerLawFit:
    """Fit log p(k) = c - alpha*log(k) - lambda*k over observed degrees >= 1.

    Least squares in log space; if the unconstrained cutoff rate comes out
    negative the fit falls back to the pure power law (lambda = 0).
    """
    fit = _log_space_fit(histogram, with_cutoff=True)
    if fit.lam < 0:
        return fit_pure_power_law(histogram)
    return fit


def fit_pure_power_law(histogram: Mapping[int, float]) -> PowerLawFit:
    """Same fit with the exponential cutoff forced off (lambda = 0)."""
    return _log_space_fit(histogram, with_cutoff=False)


def verify_clique(g: nx.Graph, labels: Sequence[str]) -> bool:
    """True iff every two distinct given nodes are adjacent."""
    for lbl in labels:
        if lbl not in g:
            raise UnknownLabelError(lbl)
    return all(
        g.has_edge(a, b) for i, a in enumerate(labels) for b in labels[i + 1 :]
    )


def maximal_cliques(g: nx.Graph, min_size: int = 1) -> list[list[str]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), deterministic order."""
    idx = {n: g.nodes[n]["index"] for n in g.nodes}
    cliques = [
        sorted(c, key=idx.__getitem__)
        for c in nx.find_cliques(g)
        if len(c) >= min_size
    ]
    return sorted(cliques, key=lambda c: (-len(c), [idx[n] for n in c]))


def neighbor_distances(g: nx.Graph, label: str) -> list[tuple[str, int]]:
    """Adjacent labels with their d^2, ascending by distance then label index."""
    if label not in g:
        raise UnknownLabelError(label)
    rows = [(nbr, int(g.edges[label, nbr]["d_squared"])) for nbr in g.neighbors(label)]
    return sorted(rows, key=lambda t: (t[1], g.nodes[t[0]]["index"]))


def write_gexf(g: nx.Graph, path: Path | str) -> None:
    """GEXF export with the volatile modification-date stamp removed."""
    text = "\n".join(nx.generate_gexf(g))
    text = re.sub(r'\s+lastmodifieddate="[^"]*"', "", text)
    Path(path).write_text(text + "\n")


def write_graphml(g: nx.Graph, path: Path | str) -> None:
    nx.write_graphml(g, str(path))


def write_edge_list_csv(g: nx.Graph, path: Path | str) -> None:
    """Edge list CSV: label_a,label_b,d_squared,weight in catalog order."""
    idx = {n: g.nodes[n]["index"] for n in g.nodes}
    edges = sorted(
        ((a, b) if idx[a] < idx[b] else (b, a) for a, b in g.edges),
        key=lambda ab: (idx[ab[0]], idx[ab[1]]),
    )
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label_a", "label_b", "d_squared", "weight"])
        for a, b in edges:
            data = g.edges[a, b]
            writer.writerow([a, b, data["d_squared"], data["weight"]])
