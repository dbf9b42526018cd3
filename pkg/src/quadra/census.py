"""Exhaustive census of strongly quadrangular matrices of small degree.

Generation walks row multisets in nondecreasing order (every equivalence class
has such a representative), prunes partial matrices whose completed rows
already violate quadrangularity, and deduplicates survivors by canonical form.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field

from .binmat import BinMatrix, is_indecomposable, _row_sq
from .equivalence import ClassRecord, build_class_record, canonical_rows
from .forbidden import detect_cond, detect_newcond


@dataclass(frozen=True)
class CensusFilter:
    indecomposable: bool = False
    symmetric: bool = False
    regular: bool = False
    sigma: int | None = None

    def to_json(self) -> dict:
        return {
            "indecomposable": self.indecomposable,
            "symmetric": self.symmetric,
            "regular": self.regular,
            "sigma": self.sigma,
        }


@dataclass(frozen=True)
class CensusTable:
    degree: int
    filter: CensusFilter
    entries: tuple[ClassRecord, ...] = field(default_factory=tuple)

    @property
    def total_classes(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "filter": self.filter.to_json(),
            "total_classes": self.total_classes,
            "classes": [r.to_json() for r in self.entries],
        }


def _columns(rows, n):
    cols = []
    for j in range(n):
        c = 0
        for i in range(n):
            c = (c << 1) | ((rows[i] >> (n - 1 - j)) & 1)
        cols.append(c)
    return cols


def _survivor_chunk(n, sigma, first_indices):
    """SQ matrices with no zero line, rows nondecreasing, first row from the given pool slice."""
    full = (1 << n) - 1
    pool = [r for r in range(1, full + 1) if sigma is None or r.bit_count() == sigma]
    suffix_or = [0] * (len(pool) + 1)
    for i in range(len(pool) - 1, -1, -1):
        suffix_or[i] = suffix_or[i + 1] | pool[i]

    out = []

    def extend(start, chosen, cover):
        depth = len(chosen)
        if depth == n:
            if cover != full:
                return
            cols = _columns(chosen, n)
            if sigma is not None and any(c.bit_count() != sigma for c in cols):
                return
            if _row_sq(chosen, n) and _row_sq(cols, n):
                out.append(chosen)
            return
        if cover | suffix_or[start] != full:
            return
        for idx in range(start, len(pool)):
            r = pool[idx]
            if any((r & c).bit_count() == 1 for c in chosen):
                continue
            extend(idx, chosen + (r,), cover | r)

    for i0 in first_indices:
        if i0 < len(pool):
            extend(i0, (pool[i0],), pool[i0])
    return out


def _canonical_set(n, sigma, jobs):
    pool_size = (1 << n) - 1
    if jobs > 1:
        chunks = [range(k, pool_size, jobs) for k in range(jobs)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_survivor_chunk, [n] * jobs, [sigma] * jobs, chunks))
        survivors = [rows for part in parts for rows in part]
    else:
        survivors = _survivor_chunk(n, sigma, range(pool_size))
    return {canonical_rows(rows, n) for rows in survivors}


_full_cache: dict[int, tuple[ClassRecord, ...]] = {}
_regular_cache: dict[int, tuple[ClassRecord, ...]] = {}


def _records_from_canon(n, canon_set):
    records = []
    for rows in sorted(canon_set):
        m = BinMatrix(n, rows)
        no_unitary = detect_cond(m) is not None or detect_newcond(m) is not None
        records.append(build_class_record(m, no_unitary))
    return tuple(records)


def _full_census(n, jobs=1):
    if n not in _full_cache:
        _full_cache[n] = _records_from_canon(n, _canonical_set(n, None, jobs))
    return _full_cache[n]


def _regular_census(n, jobs=1):
    """All regular SQ classes (constant line sum sigma), generated per sigma."""
    if n not in _regular_cache:
        canon = set()
        for sigma in range(1, n + 1):
            canon |= _canonical_set(n, sigma, jobs)
        _regular_cache[n] = _records_from_canon(n, canon)
    return _regular_cache[n]


def enumerate_classes(n: int, filt: CensusFilter = CensusFilter(), jobs: int = 1) -> CensusTable:
    """Equivalence classes of degree-n SQ matrices with no zero line, under the filter.

    A matrix and its (inequivalent) transpose count as two classes. Degree 6 is
    supported only for the regular sub-census.
    """
    if filt.sigma is not None and not filt.regular:
        raise ValueError("sigma is only meaningful together with the regular filter")
    if filt.regular:
        if not 1 <= n <= 6:
            raise ValueError(f"regular census supports degrees 1..6, got {n}")
        if filt.sigma is not None and filt.sigma > n:
            raise ValueError(f"sigma {filt.sigma} exceeds degree {n}")
        records = _regular_census(n, jobs)
    else:
        if not 1 <= n <= 5:
            raise ValueError(f"full census supports degrees 1..5, got {n}")
        records = _full_census(n, jobs)

    entries = []
    for rec in records:
        if filt.indecomposable and not is_indecomposable(rec.matrix):
            continue
        if filt.symmetric and not rec.symmetric:
            continue
        if filt.sigma is not None and rec.matrix.rows[0].bit_count() != filt.sigma:
            continue
        entries.append(rec)
    return CensusTable(n, filt, tuple(entries))


def enumerate_regular_classes(n: int, sigma: int | None = None, jobs: int = 1) -> CensusTable:
    return enumerate_classes(n, CensusFilter(regular=True, sigma=sigma), jobs=jobs)


SEQUENCE_NAMES = (
    "indecomposable SQ",
    "SQ",
    "indecomposable symmetric SQ",
    "symmetric SQ",
    "indecomposable regular SQ",
    "regular SQ",
)


def count_table(max_n: int, jobs: int = 1) -> dict[str, list[int]]:
    """The six census count sequences, keyed by SEQUENCE_NAMES.

    Regular sequences extend to degree 6 whenever max_n >= 5; the other four
    stop at degree min(max_n, 5).
    """
    if not 1 <= max_n <= 6:
        raise ValueError(f"max degree must be in 1..6, got {max_n}")
    full_to = min(max_n, 5)
    regular_to = 6 if max_n >= 5 else max_n

    counts: dict[str, list[int]] = {name: [] for name in SEQUENCE_NAMES}
    for n in range(1, full_to + 1):
        records = _full_census(n, jobs)
        counts["SQ"].append(len(records))
        counts["indecomposable SQ"].append(
            sum(1 for r in records if is_indecomposable(r.matrix))
        )
        counts["symmetric SQ"].append(sum(1 for r in records if r.symmetric))
        counts["indecomposable symmetric SQ"].append(
            sum(1 for r in records if r.symmetric and is_indecomposable(r.matrix))
        )
    for n in range(1, regular_to + 1):
        records = _regular_census(n, jobs)
        counts["regular SQ"].append(len(records))
        counts["indecomposable regular SQ"].append(
            sum(1 for r in records if is_indecomposable(r.matrix))
        )
    return counts
