"""Parsimonious voice-leading distance and swap analysis.

The squared distance between two rows is the sum over the 12 order
positions of the squared circular pitch-class difference. Squared values
are kept as exact integers; take the square root only for display.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .catalog import CatalogEntry
from .rows import Row, TET, as_row


def circular_distance(a: int, b: int) -> int:
    """Shortest way round the pitch-class circle between two pcs."""
    d = abs(a - b) % TET
    return min(d, TET - d)


def vl_distance_sq(a: Sequence[int], b: Sequence[int]) -> int:
    """Squared voice-leading distance between two rows, position-wise.

    >>> vl_distance_sq((0, 3, 4, 11, 5, 2, 10, 8, 7, 9, 1, 6),
    ...                (0, 3, 4, 11, 5, 1, 10, 8, 7, 9, 2, 6))
    2
    """
    a = as_row(a)
    b = as_row(b)
    return sum(circular_distance(x, y) ** 2 for x, y in zip(a, b))


def distance_matrix(rows: Sequence[Row]) -> np.ndarray:
    """Exact all-pairs matrix of squared distances (symmetric, zero diagonal)."""
    arr = np.asarray(rows, dtype=np.int64)
    diff = np.abs(arr[:, None, :] - arr[None, :, :])
    circ = np.minimum(diff, TET - diff)
    return (circ**2).sum(axis=2)


@dataclass(frozen=True)
class SwapProfile:
    """Where two rows differ and which pitch classes trade places."""

    differing_positions: frozenset[int]
    exchanged_pairs: frozenset[frozenset[int]]
    is_pure_swap: bool


def swap_profile(a: Sequence[int], b: Sequence[int]) -> SwapProfile:
    """Detect exchanged pitch-class pairs between two rows.

    Positions i, j count as an exchange when a[i] = b[j] and a[j] = b[i];
    a pure swap is exactly two differing positions forming one exchange.
    """
    a = as_row(a)
    b = as_row(b)
    differing = [i for i in range(TET) if a[i] != b[i]]
    pos_of_b = {p: i for i, p in enumerate(b)}
    exchanged = set()
    for i in differing:
        j = pos_of_b[a[i]]
        if j != i and a[j] == b[i]:
            exchanged.add(frozenset((a[i], a[j])))
    return SwapProfile(
        differing_positions=frozenset(differing),
        exchanged_pairs=frozenset(exchanged),
        is_pure_swap=len(differing) == 2 and len(exchanged) == 1,
    )


def close_coupled_pairs(
    entries: Sequence[CatalogEntry], dmat: np.ndarray | None = None
) -> set[tuple[str, str]]:
    """All unordered label pairs a single semitone swap apart (d^2 = 2)."""
    if dmat is None:
        dmat = distance_matrix([e.row for e in entries])
    ii, jj = np.nonzero(dmat == 2)
    return {
        (entries[min(i, j)].label, entries[max(i, j)].label)
        for i, j in zip(ii.tolist(), jj.tolist())
        if i != j
    }


def write_pair_distances_csv(
    entries: Sequence[CatalogEntry],
    path: Path | str,
    cap_sq: int,
    dmat: np.ndarray | None = None,
) -> int:
    """Dump (label_a, label_b, d_squared) for all pairs with 0 < d^2 <= cap.

    Returns the number of pairs written.
    """
    if dmat is None:
        dmat = distance_matrix([e.row for e in entries])
    n = 0
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label_a", "label_b", "d_squared"])
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                d2 = int(dmat[i, j])
                if 0 < d2 <= cap_sq:
                    writer.writerow([entries[i].label, entries[j].label, d2])
                    n += 1
    return n
