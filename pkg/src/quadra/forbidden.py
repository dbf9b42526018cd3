"""Detection of the two block substructures that rule out unitary support.

Both certificates embed the 3x2 block Q = [[1,0],[0,1],[1,1]] next to an
all-ones 3xk block, with disjointness side conditions on the remaining blocks.
Orthogonality of (0,1)-vectors means disjoint supports (bitwise AND empty).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .binmat import BinMatrix, transpose


class EmbeddingKind(Enum):
    COND_K = "CondK"
    NEW_COND = "NewCond"


@dataclass(frozen=True)
class BlockEmbedding:
    """Row/column selections certifying a forbidden block embedding.

    rows = (r1, r2, r3) carry the Q block in columns q_cols = (c1, c2), with
    r3 the (1,1) row; j_cols are the all-ones columns of the 3xk block.
    Indices refer to the transpose of the matrix when `transposed` is set.
    """

    kind: EmbeddingKind
    transposed: bool
    rows: tuple[int, int, int]
    q_cols: tuple[int, int]
    j_cols: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "transposed": self.transposed,
            "rows": list(self.rows),
            "q_cols": list(self.q_cols),
            "j_cols": list(self.j_cols),
        }


def _entry(rows, n, i, j):
    return (rows[i] >> (n - 1 - j)) & 1


def _q_block_ok(rows, n, r1, r2, r3, c1, c2):
    return (
        _entry(rows, n, r1, c1) == 1
        and _entry(rows, n, r1, c2) == 0
        and _entry(rows, n, r2, c1) == 0
        and _entry(rows, n, r2, c2) == 1
        and _entry(rows, n, r3, c1) == 1
        and _entry(rows, n, r3, c2) == 1
    )


def _other_col_masks(rows, n, triple):
    """Column occupancy restricted to the rows outside the triple, as bitmasks."""
    cols = [0] * n
    for i in range(n):
        if i in triple:
            continue
        for j in range(n):
            if _entry(rows, n, i, j):
                cols[j] |= 1 << i
    return cols


def _cond_in(rows, n, exhaustive):
    full = (1 << n) - 1
    for r1, r2, r3 in itertools.permutations(range(n), 3):
        triple = (r1, r2, r3)
        colmasks = None
        for c1, c2 in itertools.permutations(range(n), 2):
            if not _q_block_ok(rows, n, r1, r2, r3, c1, c2):
                continue
            j_all = [
                j
                for j in range(n)
                if j not in (c1, c2)
                and _entry(rows, n, r1, j)
                and _entry(rows, n, r2, j)
                and _entry(rows, n, r3, j)
            ]
            if not j_all:
                continue
            if colmasks is None:
                colmasks = _other_col_masks(rows, n, triple)
            y_mask = colmasks[c1] | colmasks[c2]

            def x_rows_disjoint(j_cols):
                xmask = full
                for c in (c1, c2, *j_cols):
                    xmask &= ~(1 << (n - 1 - c))
                return (
                    rows[r1] & rows[r2] & xmask == 0
                    and rows[r1] & rows[r3] & xmask == 0
                    and rows[r2] & rows[r3] & xmask == 0
                )

            if exhaustive:
                for size in range(1, len(j_all) + 1):
                    for j_cols in itertools.combinations(j_all, size):
                        if any(colmasks[z] & y_mask for z in j_cols):
                            continue
                        if x_rows_disjoint(j_cols):
                            return triple, (c1, c2), tuple(j_cols)
            else:
                # Columns clashing with Y can never be in J; among the rest,
                # taking all of them only shrinks X, so the maximal good set
                # decides feasibility.
                good = tuple(j for j in j_all if colmasks[j] & y_mask == 0)
                if good and x_rows_disjoint(good):
                    return triple, (c1, c2), good
    return None


def _newcond_in(rows, n):
    for r1, r2, r3 in itertools.permutations(range(n), 3):
        triple = (r1, r2, r3)
        colmasks = None
        for c1, c2 in itertools.permutations(range(n), 2):
            if not _q_block_ok(rows, n, r1, r2, r3, c1, c2):
                continue
            j_all = [
                j
                for j in range(n)
                if j not in (c1, c2)
                and _entry(rows, n, r1, j)
                and _entry(rows, n, r2, j)
                and _entry(rows, n, r3, j)
            ]
            if len(j_all) < 2:
                continue
            if colmasks is None:
                colmasks = _other_col_masks(rows, n, triple)
            x_mask = colmasks[c1] | colmasks[c2]
            for j1, j2 in itertools.combinations(j_all, 2):
                if colmasks[j1] & colmasks[j2]:
                    continue
                if x_mask & (colmasks[j1] | colmasks[j2]):
                    continue
                return triple, (c1, c2), (j1, j2)
    return None


def detect_cond(m: BinMatrix, exhaustive: bool = False) -> BlockEmbedding | None:
    """First forbidden structure: disjoint X rows, Y columns orthogonal to Z columns.

    Searches m and its transpose. `exhaustive` quantifies over every nonempty
    subset of the all-ones columns instead of the maximal admissible set; the
    two variants accept exactly the same matrices and the flag exists only so
    tests can compare them.
    """
    for transposed, mat in ((False, m), (True, transpose(m))):
        hit = _cond_in(mat.rows, mat.n, exhaustive)
        if hit is not None:
            rows, q_cols, j_cols = hit
            return BlockEmbedding(EmbeddingKind.COND_K, transposed, rows, q_cols, j_cols)
    return None


def detect_newcond(m: BinMatrix) -> BlockEmbedding | None:
    """Second forbidden structure: the two Y columns disjoint, X columns orthogonal to Y."""
    for transposed, mat in ((False, m), (True, transpose(m))):
        hit = _newcond_in(mat.rows, mat.n)
        if hit is not None:
            rows, q_cols, j_cols = hit
            return BlockEmbedding(EmbeddingKind.NEW_COND, transposed, rows, q_cols, j_cols)
    return None


def verify_embedding(m: BinMatrix, e: BlockEmbedding) -> bool:
    """Re-check every hypothesis of a claimed certificate against m."""
    n = m.n
    indices = list(e.rows) + list(e.q_cols) + list(e.j_cols)
    if any(not 0 <= i < n for i in indices):
        raise ValueError(f"embedding indices out of range for degree {n}")
    if len(set(e.rows)) != 3 or len(set(e.q_cols)) != 2 or len(set(e.j_cols)) != len(e.j_cols):
        return False
    if set(e.q_cols) & set(e.j_cols):
        return False
    if not e.j_cols:
        return False
    if e.kind is EmbeddingKind.NEW_COND and len(e.j_cols) != 2:
        return False

    mat = transpose(m) if e.transposed else m
    rows = mat.rows
    r1, r2, r3 = e.rows
    c1, c2 = e.q_cols
    if not _q_block_ok(rows, n, r1, r2, r3, c1, c2):
        return False
    for j in e.j_cols:
        if not (_entry(rows, n, r1, j) and _entry(rows, n, r2, j) and _entry(rows, n, r3, j)):
            return False

    colmasks = _other_col_masks(rows, n, e.rows)
    if e.kind is EmbeddingKind.COND_K:
        full = (1 << n) - 1
        xmask = full
        for c in (c1, c2, *e.j_cols):
            xmask &= ~(1 << (n - 1 - c))
        if rows[r1] & rows[r2] & xmask or rows[r1] & rows[r3] & xmask or rows[r2] & rows[r3] & xmask:
            return False
        y_mask = colmasks[c1] | colmasks[c2]
        return all(colmasks[z] & y_mask == 0 for z in e.j_cols)
    else:
        j1, j2 = e.j_cols
        if colmasks[j1] & colmasks[j2]:
            return False
        x_mask = colmasks[c1] | colmasks[c2]
        return x_mask & (colmasks[j1] | colmasks[j2]) == 0


def zero_lower_bound(kind: EmbeddingKind, n: int) -> int:
    """Minimum zero count forced on an SQ matrix carrying the given embedding."""
    if kind is EmbeddingKind.COND_K:
        if n < 6:
            raise ValueError(f"the first forbidden structure needs degree >= 6, got {n}")
        return 3 * n - 6
    if kind is EmbeddingKind.NEW_COND:
        if n < 5:
            raise ValueError(f"the second forbidden structure needs degree >= 5, got {n}")
        return 2 * n - 4
    raise ValueError(f"unknown embedding kind: {kind!r}")
