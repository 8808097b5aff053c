"""Summary statistics report and its figures.

Every number in the report is recomputed from the corpus on each run;
nothing is hard-coded. The figure renderers write PNG files next to the
delimited outputs.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx
import numpy as np

from .catalog import CatalogEntry
from .corpus import Corpus
from .distances import close_coupled_pairs
from .graph import (
    CommunityAssignment,
    EmptyGraphError,
    InsufficientDataError,
    PowerLawFit,
    connected_components,
    degree_stats,
    fit_pure_power_law,
    fit_truncated_power_law,
    hermits,
    louvain_communities,
)

FIT_METHOD = "log-log least squares over observed degrees >= 1"


@dataclass(frozen=True)
class StatsReport:
    threshold_sq: int
    weight_mode: str
    louvain_seed: int
    normal_forms: int
    inversion_reduced: int
    primes: int
    s_rows: int
    p_rows: int
    l_rows: int
    link_instances: int
    edges: int
    giant_component: int
    isolated: int
    average_degree: float
    giant_average_degree: float
    max_d_squared: int
    modularity: float | None
    communities: int | None
    fit_alpha: float | None
    fit_lambda: float | None
    fit_goodness: float | None
    fit_method: str
    close_coupled_pairs: int

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"


def compute_stats(
    corpus: Corpus,
    entries: Sequence[CatalogEntry],
    g: nx.Graph,
    dmat: np.ndarray,
    louvain_seed: int,
) -> tuple[StatsReport, CommunityAssignment | None, PowerLawFit | None, PowerLawFit | None]:
    """Assemble the report; returns the partition and fits for reuse.

    Partition and fits come back as None when the graph is too sparse to
    define them (no edges, or fewer than three occupied degrees).
    """
    comps = connected_components(g)
    giant = comps[0] if comps else set()
    giant_edges = g.subgraph(giant).number_of_edges()
    stats = degree_stats(g)
    try:
        assignment = louvain_communities(g, seed=louvain_seed)
    except EmptyGraphError:
        assignment = None
    try:
        truncated = fit_truncated_power_law(stats.histogram)
        pure = fit_pure_power_law(stats.histogram)
    except InsufficientDataError:
        truncated = pure = None
    report = StatsReport(
        threshold_sq=g.graph["threshold_sq"],
        weight_mode=g.graph["weight_mode"],
        louvain_seed=louvain_seed,
        normal_forms=len(corpus.normal_forms),
        inversion_reduced=len(corpus.inversion_reduced),
        primes=len(corpus.primes),
        s_rows=sum(e.is_s for e in entries),
        p_rows=sum(e.is_p for e in entries),
        l_rows=sum(e.is_l for e in entries),
        link_instances=sum(len(e.link_window_starts) for e in entries),
        edges=g.number_of_edges(),
        giant_component=len(giant),
        isolated=len(hermits(g)),
        average_degree=stats.average,
        giant_average_degree=2 * giant_edges / len(giant) if giant else 0.0,
        max_d_squared=int(dmat.max()),
        modularity=assignment.modularity if assignment else None,
        communities=len(set(assignment.partition.values())) if assignment else None,
        fit_alpha=truncated.alpha if truncated else None,
        fit_lambda=truncated.lam if truncated else None,
        fit_goodness=truncated.goodness if truncated else None,
        fit_method=FIT_METHOD,
        close_coupled_pairs=len(close_coupled_pairs(entries, dmat)),
    )
    return report, assignment, truncated, pure


def write_stats_json(report: StatsReport, path: Path | str) -> None:
    Path(path).write_text(report.to_json())


def plot_degree_distribution(
    histogram: Mapping[int, int],
    truncated: PowerLawFit,
    pure: PowerLawFit,
    path: Path | str,
) -> None:
    """Log-log degree distribution with both fitted models."""
    ks = np.array(sorted(k for k, c in histogram.items() if k >= 1 and c > 0))
    counts = np.array([histogram[k] for k in ks], dtype=float)
    p = counts / counts.sum()

    def model(fit: PowerLawFit) -> np.ndarray:
        shape = ks.astype(float) ** (-fit.alpha) * np.exp(-fit.lam * ks)
        # anchor the display curve through the observed mass
        return shape * p.sum() / shape.sum()

    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.loglog(ks, p, "o", color="tab:blue", label="observed")
    ax.loglog(ks, model(truncated), "--", color="tab:red",
              label=f"power law with cutoff (R$^2$={truncated.goodness:.3f})")
    ax.loglog(ks, model(pure), ":", color="tab:gray",
              label=f"pure power law (R$^2$={pure.goodness:.3f})")
    ax.set_xlabel("degree k")
    ax.set_ylabel("p(k)")
    ax.set_title("Degree distribution of the row network")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_community_sizes(assignment: CommunityAssignment, path: Path | str) -> None:
    """Bar chart of community sizes, largest first."""
    sizes = sorted(Counter(assignment.partition.values()).values(), reverse=True)
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.bar(range(1, len(sizes) + 1), sizes, color="tab:blue")
    ax.set_xlabel("community (by size rank)")
    ax.set_ylabel("nodes")
    ax.set_title(
        f"{len(sizes)} communities, modularity {assignment.modularity:.3f} "
        f"(seed {assignment.seed})"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
