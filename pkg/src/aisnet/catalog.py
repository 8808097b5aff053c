"""Catalog assembly: S/P/L flags, labels, and catalog file formats.

Flags on a generator row:
  S - symmetrical inverted (non-retrogradable): the row equals its own
      normalized retrograde.
  P - parallel inverted: the second hexachord's step pattern inverts the
      first's, interval by interval.
  L - link chord: some run of six consecutive pitches is a transposition
      of the all-trichord hexachord [0 1 2 4 7 8].
"""

from __future__ import annotations

import csv
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .rows import Row, TET, cyclic_intervals, format_row, linear_intervals, require_normal_form
from .ops import retrograde_normal

logger = logging.getLogger(__name__)

ALL_TRICHORD_HEXACHORD = (0, 1, 2, 4, 7, 8)

# the hexachord is chiral: only plain transpositions count as occurrences
_ATH_TRANSPOSITIONS = frozenset(
    frozenset((p + t) % TET for p in ALL_TRICHORD_HEXACHORD) for t in range(TET)
)

WINDOW_SIZE = 6
WINDOW_STARTS = range(TET - WINDOW_SIZE + 1)  # 7 linear windows


def setclass_prime_form(pcs: Iterable[int]) -> tuple[int, ...]:
    """Canonical form of a pitch-class set under transposition/inversion.

    Most-packed-to-the-left normal order, compared against the inversion's,
    transposed to start at 0.

    >>> setclass_prime_form({1, 2, 3, 5, 8, 9})
    (0, 1, 2, 4, 7, 8)
    >>> setclass_prime_form({0})
    (0,)
    """
    members = sorted({p % TET for p in pcs})
    if not members:
        raise ValueError("empty pitch-class set")

    def packed(sorted_pcs: list[int]) -> tuple[int, ...]:
        n = len(sorted_pcs)
        best = None
        for i in range(n):
            rot = sorted_pcs[i:] + [p + TET for p in sorted_pcs[:i]]
            key = (rot[-1] - rot[0], tuple(p - rot[0] for p in rot[1:]))
            if best is None or key < best:
                best = key
        return (0, *best[1])

    inverse = sorted({(-p) % TET for p in members})
    return min(packed(members), packed(inverse))


def is_symmetric_inverted(row: Sequence[int]) -> bool:
    """True iff the row is its own normalized retrograde."""
    row = require_normal_form(row)
    return retrograde_normal(row) == row


def symmetric_by_interval_palindrome(row: Sequence[int]) -> bool:
    """Equivalent S test: steps complement-palindromic about the mid tritone."""
    steps = linear_intervals(require_normal_form(row))
    return steps[5] == 6 and all(steps[k] + steps[10 - k] == TET for k in range(5))


def is_parallel_inverted(row: Sequence[int]) -> bool:
    """True iff each second-hexachord step inverts the matching first-hexachord step."""
    steps = linear_intervals(require_normal_form(row))
    return all(steps[k + 6] == TET - steps[k] for k in range(5))


def parallel_by_hexachord(row: Sequence[int]) -> bool:
    """Equivalent P test: second hexachord is a transposed inversion of the first."""
    row = require_normal_form(row)
    t = (row[6] + row[0]) % TET
    return all(row[6 + j] == (t - row[j]) % TET for j in range(6))


def link_window_starts(row: Sequence[int]) -> frozenset[int]:
    """Start indices of six-pitch windows that transpose the all-trichord hexachord."""
    row = require_normal_form(row)
    return frozenset(
        k for k in WINDOW_STARTS if frozenset(row[k : k + WINDOW_SIZE]) in _ATH_TRANSPOSITIONS
    )


def is_link(row: Sequence[int]) -> tuple[bool, frozenset[int]]:
    """Link-chord flag plus the matching window start indices.

    >>> is_link((0, 1, 3, 8, 2, 5, 9, 7, 4, 11, 10, 6))
    (True, frozenset({1}))
    """
    starts = link_window_starts(row)
    return bool(starts), starts


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog line: a labeled generator row with its flags."""

    index: int
    label: str
    row: Row
    intervals: tuple[int, ...]
    is_s: bool
    is_p: bool
    is_l: bool
    link_window_starts: frozenset[int]


def label_suffix(is_s: bool, is_p: bool, is_l: bool) -> str:
    return ("S" if is_s else "P" if is_p else "") + ("L" if is_l else "")


def build_catalog(primes: Sequence[Row]) -> list[CatalogEntry]:
    """Label the generator rows sequentially and attach their flags."""
    entries = []
    for i, row in enumerate(primes):
        s = is_symmetric_inverted(row)
        p = is_parallel_inverted(row)
        if s and p:
            # impossible for distinct interval rows; report rather than pick silently
            logger.warning("row %s is both S and P; labeling as S", format_row(row))
        starts = link_window_starts(row)
        entries.append(
            CatalogEntry(
                index=i,
                label=f"12-{i}{label_suffix(s, p, bool(starts))}",
                row=row,
                intervals=cyclic_intervals(row),
                is_s=s,
                is_p=p,
                is_l=bool(starts),
                link_window_starts=starts,
            )
        )
    return entries


def format_intervals(intervals: Sequence[int]) -> str:
    return "[" + " ".join(str(i) for i in intervals) + "]"


def write_catalog_csv(entries: Sequence[CatalogEntry], path: Path | str) -> None:
    """Catalog CSV: label,row,intervals,s,p,l,link_windows (bracketed fields quoted)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, quoting=csv.QUOTE_NONNUMERIC)
        writer.writerow(["label", "row", "intervals", "s", "p", "l", "link_windows"])
        for e in entries:
            writer.writerow(
                [
                    e.label,
                    format_row(e.row),
                    format_intervals(e.intervals),
                    int(e.is_s),
                    int(e.is_p),
                    int(e.is_l),
                    ";".join(str(k) for k in sorted(e.link_window_starts)),
                ]
            )


def catalog_to_records(entries: Sequence[CatalogEntry]) -> list[dict]:
    return [
        {
            "label": e.label,
            "row": list(e.row),
            "intervals": list(e.intervals),
            "s": e.is_s,
            "p": e.is_p,
            "l": e.is_l,
            "link_windows": sorted(e.link_window_starts),
        }
        for e in entries
    ]


def write_catalog_json(entries: Sequence[CatalogEntry], path: Path | str) -> None:
    with open(path, "w") as fh:
        json.dump(catalog_to_records(entries), fh, indent=2)
        fh.write("\n")
