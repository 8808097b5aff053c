"""Twelve-tone rows, their interval vectors, and the all-interval predicate.

A row is a plain tuple of 12 distinct pitch classes (integers 0..11). The
interval vectors are always derived from the pitch sequence, never stored,
so the two can't drift apart.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Row = tuple[int, ...]

TET = 12
ROW_LENGTH = 12


class DuplicatePitchError(ValueError):
    """An interval sequence revisits a pitch class."""


class NotNormalFormError(ValueError):
    """Operation requires an all-interval row in normal form."""


class RowParseError(ValueError):
    """Text does not parse as a twelve-tone row."""


def as_row(pitches: Iterable[int]) -> Row:
    """Validate and freeze a pitch sequence into a Row.

    >>> as_row([0, 1, 3, 7, 2, 5, 11, 10, 8, 4, 9, 6])[0]
    0
    """
    row = tuple(int(p) for p in pitches)
    if len(row) != ROW_LENGTH:
        raise ValueError(f"row must have {ROW_LENGTH} pitches, got {len(row)}")
    if sorted(row) != list(range(TET)):
        raise ValueError(f"row must be a permutation of 0..{TET - 1}: {row}")
    return row


def linear_intervals(row: Sequence[int]) -> tuple[int, ...]:
    """The 11 successive mod-12 steps of a row (no wrap)."""
    return tuple((row[k + 1] - row[k]) % TET for k in range(ROW_LENGTH - 1))


def cyclic_intervals(row: Sequence[int]) -> tuple[int, ...]:
    """All 12 successive mod-12 steps, including the wrap back to the start.

    >>> cyclic_intervals((0, 1, 3, 7, 2, 5, 11, 10, 8, 4, 9, 6))
    (1, 2, 4, 7, 3, 6, 11, 10, 8, 5, 9, 6)
    """
    return tuple((row[(k + 1) % ROW_LENGTH] - row[k]) % TET for k in range(ROW_LENGTH))


def row_from_linear_intervals(intervals: Sequence[int]) -> Row:
    """Rebuild the row starting at 0 by cumulative mod-12 summation.

    The interval entries need not be distinct; only pitch-class collisions
    are rejected. All-interval validity is a separate predicate.

    >>> row_from_linear_intervals([1, 2, 4, 7, 3, 6, 11, 10, 8, 5, 9])
    (0, 1, 3, 7, 2, 5, 11, 10, 8, 4, 9, 6)
    """
    if len(intervals) != ROW_LENGTH - 1:
        raise ValueError(f"need {ROW_LENGTH - 1} intervals, got {len(intervals)}")
    row = [0]
    seen = 1  # bitmask over pitch classes, bit 0 already used
    for step in intervals:
        if not 1 <= step <= TET - 1:
            raise ValueError(f"interval out of range [1, {TET - 1}]: {step}")
        nxt = (row[-1] + step) % TET
        bit = 1 << nxt
        if seen & bit:
            raise DuplicatePitchError(
                f"pitch class {nxt} revisited at position {len(row)}"
            )
        seen |= bit
        row.append(nxt)
    return tuple(row)


def is_ais_normal_form(row: Sequence[int]) -> bool:
    """True iff the row starts at 0 and its 11 steps exhaust all intervals.

    Such a row necessarily ends on pitch class 6: the steps sum to
    1 + 2 + ... + 11 = 66 = 6 mod 12.

    >>> is_ais_normal_form((0, 1, 3, 7, 2, 5, 11, 10, 8, 4, 9, 6))
    True
    >>> is_ais_normal_form(tuple(range(12)))
    False
    """
    if row[0] != 0:
        return False
    steps = linear_intervals(row)
    return len(set(steps)) == ROW_LENGTH - 1 and 0 not in steps


def require_normal_form(row: Sequence[int]) -> Row:
    """Validate a row as an all-interval normal form, or raise."""
    row = as_row(row)
    if not is_ais_normal_form(row):
        raise NotNormalFormError(f"not an all-interval normal form: {format_row(row)}")
    return row


def format_row(row: Sequence[int]) -> str:
    """Render a row as bracketed space-separated pitch classes.

    >>> format_row((0, 1, 3, 7, 2, 5, 11, 10, 8, 4, 9, 6))
    '[0 1 3 7 2 5 11 10 8 4 9 6]'
    """
    return "[" + " ".join(str(p) for p in row) + "]"


def parse_row(text: str) -> Row:
    """Parse a bracketed space- or comma-separated row literal."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    parts = body.replace(",", " ").split()
    try:
        pitches = [int(p) for p in parts]
    except ValueError as exc:
        raise RowParseError(f"not a row literal: {text!r}") from exc
    try:
        return as_row(pitches)
    except ValueError as exc:
        raise RowParseError(str(exc)) from exc
