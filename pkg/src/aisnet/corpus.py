"""Enumeration of the all-interval row corpus.

Three tiers: the 3,856 normal forms, the 1,928 left after discarding
inversions, and the 918 canonical generators that head the catalog. The
corpus is kept in interval-sequence (lexicographic) order throughout; the
catalog's sequential labels are positions in that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .ops import invert, multiply_m5, q_rotate, retrograde_normal
from .rows import Row, TET, linear_intervals


def interval_sort_key(row: Sequence[int]) -> tuple[int, ...]:
    """Corpus ordering: lexicographic on the 11 linear intervals."""
    return linear_intervals(row)


def generate_normal_forms() -> list[Row]:
    """All 3,856 all-interval normal forms, in interval-sequence order.

    Depth-first search over interval prefixes, pruning on revisited pitch
    classes. Ascending interval choice at each level makes the output order
    the interval-lexicographic one directly.
    """
    return list(_normal_forms_cached())


@lru_cache(maxsize=1)
def _normal_forms_cached() -> tuple[Row, ...]:
    out: list[Row] = []
    prefix = [0]

    def extend(cur: int, seen: int, used: int) -> None:
        if len(prefix) == TET:
            out.append(tuple(prefix))
            return
        for step in range(1, TET):
            if used & (1 << step):
                continue
            nxt = (cur + step) % TET
            if seen & (1 << nxt):
                continue
            prefix.append(nxt)
            extend(nxt, seen | (1 << nxt), used | (1 << step))
            prefix.pop()

    extend(0, 1, 0)
    return tuple(out)


def enumerate_by_permutation_filter() -> list[Row]:
    """Independent generator: filter all 11! interval permutations.

    Every ordering of the interval values 1..11 is materialized (wrap
    interval 6 implied) and kept iff its cumulative sums visit 12 distinct
    pitch classes. No pruning; the work is batched as vectorized array ops.
    Orderings that share a two-value prefix differ only by a permutation of
    the nine remaining values, so each batch is one fancy-indexing gather
    through a precomputed 9!-permutation index template.
    """
    values = np.arange(1, TET, dtype=np.int8)
    template = np.array(list(itertools.permutations(range(9))), dtype=np.int8)
    popcount = np.array([bin(i).count("1") for i in range(1 << TET)], dtype=np.uint8)
    kept = []
    for i, j in itertools.permutations(range(TET - 1), 2):
        rest = np.delete(values, [i, j])
        block = np.empty((template.shape[0], TET - 1), dtype=np.int8)
        block[:, 0] = values[i]
        block[:, 1] = values[j]
        block[:, 2:] = rest[template]
        # partial sums stay <= 66, safe in int8
        pitches = np.cumsum(block, axis=1, dtype=np.int8) % TET
        masks = np.bitwise_or.reduce(1 << pitches.astype(np.int16), axis=1)
        ok = (popcount[masks] == TET - 1) & ((masks & 1) == 0)
        kept.append(pitches[ok])
    rows = np.vstack(kept)
    full = [(0, *map(int, r)) for r in rows]
    return sorted(full, key=interval_sort_key)


def reduce_by_inversion(normal_forms: Iterable[Row]) -> list[Row]:
    """Keep the smaller of each {row, inversion} pair; 1,928 survive.

    The first linear intervals of a row and its inversion always differ
    (they sum to 12 and neither can be 6), so "smaller" is unambiguous
    across pitch or interval ordering.
    """
    keep = [r for r in normal_forms if interval_sort_key(r) < interval_sort_key(invert(r))]
    return sorted(keep, key=interval_sort_key)


def is_catalog_prime(row: Row) -> bool:
    """True iff the row heads its star in interval-sequence order.

    A normal form is a catalog generator when none of its four images
    I/R/M/Q precedes it; the purge of a sequentially scanned corpus keeps
    exactly these rows, since every operation is an involution.
    """
    key = interval_sort_key(row)
    return all(
        key <= interval_sort_key(op(row))
        for op in (invert, retrograde_normal, multiply_m5, q_rotate)
    )


def generate_primes(normal_forms: Iterable[Row] | None = None) -> list[Row]:
    """The 918 catalog generators, in interval-sequence (label) order."""
    if normal_forms is None:
        normal_forms = generate_normal_forms()
    return [r for r in normal_forms if is_catalog_prime(r)]


@dataclass(frozen=True)
class Corpus:
    """The three corpus tiers, each in interval-sequence order."""

    normal_forms: tuple[Row, ...]
    inversion_reduced: tuple[Row, ...]
    primes: tuple[Row, ...]

    @classmethod
    def build(cls) -> "Corpus":
        nfs = generate_normal_forms()
        return cls(
            normal_forms=tuple(nfs),
            inversion_reduced=tuple(reduce_by_inversion(nfs)),
            primes=tuple(generate_primes(nfs)),
        )
