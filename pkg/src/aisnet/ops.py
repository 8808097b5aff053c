"""Closed symmetry operations on all-interval rows in normal form.

Inversion (I), normalized retrograde (R), multiplication by 5 (M) and the
tritone rotation (Q) each map normal forms to normal forms and are
involutions. Star, constellation and orbit collect their images.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rows import (
    Row,
    TET,
    format_row,
    linear_intervals,
    require_normal_form,
)

STAR_OPS = ("P", "I", "R", "Q", "M")
CONSTELLATION_ROW_OPS = ("P", "R", "QR", "Q")
CONSTELLATION_COL_OPS = ("P", "I", "IM", "M")


def transpose(row: Sequence[int], t: int) -> Row:
    """Shift every pitch class by t mod 12."""
    return tuple((p + t) % TET for p in row)


def invert(row: Sequence[int]) -> Row:
    """Negate every pitch class mod 12 (pivot 0)."""
    row = require_normal_form(row)
    return tuple((-p) % TET for p in row)


def retrograde_normal(row: Sequence[int]) -> Row:
    """Reverse the row, then transpose back to start at 0.

    Normal forms end on 6, so the required transposition is always +6.
    """
    row = require_normal_form(row)
    rev = row[::-1]
    return transpose(rev, (-rev[0]) % TET)


def multiply_m5(row: Sequence[int]) -> Row:
    """Multiply every pitch class by 5 mod 12."""
    row = require_normal_form(row)
    return tuple((5 * p) % TET for p in row)


def q_rotate(row: Sequence[int]) -> Row:
    """Rotate the pitch cycle to just past the internal tritone step.

    A normal form has exactly two tritone steps in its 12-interval cycle:
    one internal and the wrap. Cutting after the internal one is the unique
    rotation that lands back on a normal form; the two tritones swap roles,
    which also makes the operation an involution.
    """
    row = require_normal_form(row)
    k = linear_intervals(row).index(6)
    rotated = row[k + 1 :] + row[: k + 1]
    return transpose(rotated, (-rotated[0]) % TET)


_BASIC_OPS = {
    "I": invert,
    "R": retrograde_normal,
    "M": multiply_m5,
    "Q": q_rotate,
}


def _apply_named(name: str, row: Row) -> Row:
    """Apply a composite op name like "QR" or "IM", rightmost letter first."""
    for letter in reversed(name):
        if letter != "P":
            row = _BASIC_OPS[letter](row)
    return row


def star(row: Sequence[int]) -> dict[str, Row]:
    """The row and its four single-operation images, keyed P/I/R/Q/M.

    Images may coincide (for some rows Q equals I); the labeling keeps all
    five entries regardless.
    """
    row = require_normal_form(row)
    return {name: _apply_named(name, row) for name in STAR_OPS}


@dataclass(frozen=True)
class Constellation:
    """4x4 grid of images under composite operations.

    Cell (a, b) holds the column operation b applied first, then the row
    operation a, i.e. cell ("QR", "I") = Q(R(I(source))).
    """

    source: Row
    cells: dict[tuple[str, str], Row]

    def cell(self, row_op: str, col_op: str) -> Row:
        return self.cells[(row_op, col_op)]

    def distinct_rows(self) -> frozenset[Row]:
        return frozenset(self.cells.values())


def constellation(row: Sequence[int]) -> Constellation:
    """All 16 composite images {P,R,QR,Q} x {P,I,IM,M} of a normal form."""
    row = require_normal_form(row)
    cells = {
        (row_op, col_op): _apply_named(row_op, _apply_named(col_op, row))
        for row_op in CONSTELLATION_ROW_OPS
        for col_op in CONSTELLATION_COL_OPS
    }
    return Constellation(source=row, cells=cells)


@dataclass(frozen=True)
class Orbit:
    """Closure of a row under {I, R, M, Q}, with its canonical member."""

    members: frozenset[Row]
    representative: Row


def orbit(row: Sequence[int]) -> Orbit:
    """Breadth-first closure of a normal form under the four operations.

    The closure must equal the distinct constellation cells of the seed
    row; that is verified on every call, not assumed.
    """
    row = require_normal_form(row)
    members = {row}
    frontier = [row]
    while frontier:
        nxt = []
        for r in frontier:
            for op in (invert, retrograde_normal, multiply_m5, q_rotate):
                image = op(r)
                if image not in members:
                    members.add(image)
                    nxt.append(image)
        frontier = nxt
    cells = constellation(row).distinct_rows()
    if members != cells:
        raise AssertionError(
            f"orbit closure of {format_row(row)} differs from its "
            f"constellation cells ({len(members)} vs {len(cells)} rows)"
        )
    return Orbit(members=frozenset(members), representative=min(members))
