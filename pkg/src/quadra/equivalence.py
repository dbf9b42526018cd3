"""Permutation equivalence: canonical forms, automorphism order, S/T flags.

Two matrices are equivalent when P*M1*Q = M2 for permutation matrices P, Q.
Everything here is exact brute force over column permutations, which is cheap
for the degrees this package targets (n <= 6 in the census, n <= 10 overall).
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

from .binmat import (
    BinMatrix,
    col_sum_multiset,
    is_regular,
    row_sum_multiset,
    transpose,
    zero_count,
)


def _permute_cols(row, perm, n):
    out = 0
    for p in perm:
        out = (out << 1) | ((row >> (n - 1 - p)) & 1)
    return out


def canonical_rows(rows, n):
    """Lexicographically least row tuple over all row and column permutations.

    For a fixed column permutation the least row arrangement is the sorted one,
    so minimizing sorted images over all column permutations is exact.
    """
    best = None
    for perm in itertools.permutations(range(n)):
        img = sorted(_permute_cols(r, perm, n) for r in rows)
        if best is None or img < best:
            best = img
    return tuple(best)


def canonical_form(m: BinMatrix) -> BinMatrix:
    return BinMatrix(m.n, canonical_rows(m.rows, m.n))


def are_equivalent(m1: BinMatrix, m2: BinMatrix) -> bool:
    if m1.n != m2.n:
        raise ValueError(f"degree mismatch: {m1.n} vs {m2.n}")
    if zero_count(m1) != zero_count(m2):
        return False
    if row_sum_multiset(m1) != row_sum_multiset(m2):
        return False
    if col_sum_multiset(m1) != col_sum_multiset(m2):
        return False
    return canonical_rows(m1.rows, m1.n) == canonical_rows(m2.rows, m2.n)


def aut_group_order(m: BinMatrix) -> int:
    """Number of pairs (P, Q) of permutation matrices with P*M*Q = M.

    For each column permutation Q, the row permutations P with P*(M*Q) = M
    number prod(mult!) over row multiplicities, provided M*Q has the same row
    multiset as M, and zero otherwise.
    """
    n, rows = m.n, m.rows
    target = sorted(rows)
    base = math.prod(math.factorial(c) for c in Counter(rows).values())
    count = 0
    for perm in itertools.permutations(range(n)):
        if sorted(_permute_cols(r, perm, n) for r in rows) == target:
            count += 1
    return base * count


def class_size(m: BinMatrix) -> int:
    """Orbit size under equivalence: (n!)^2 / |Aut M|."""
    total = math.factorial(m.n) ** 2
    aut = aut_group_order(m)
    assert total % aut == 0, f"aut order {aut} does not divide ({m.n}!)^2"
    return total // aut


def is_symmetric_equivalent(m: BinMatrix) -> bool:
    """True when some P*M*Q is symmetric.

    M is equivalent to a symmetric matrix exactly when some row permutation of
    M is symmetric: a permutation R with R*M*R = M^T is the same thing as a row
    permutation sigma with M[sigma(i)][j] symmetric in (i, j), and R*M is then
    itself a symmetric matrix equivalent to M.
    """
    n = m.n
    for perm in itertools.permutations(range(n)):
        rows_p = [m.rows[p] for p in perm]
        if all(
            ((rows_p[i] >> (n - 1 - j)) & 1) == ((rows_p[j] >> (n - 1 - i)) & 1)
            for i in range(n)
            for j in range(i + 1, n)
        ):
            return True
    return False


def is_transpose_equivalent(m: BinMatrix) -> bool:
    return are_equivalent(m, transpose(m))


@dataclass(frozen=True)
class ClassRecord:
    """One equivalence class: canonical representative plus census flags."""

    matrix: BinMatrix
    aut_order: int
    symmetric: bool  # S: equivalent to a symmetric matrix
    transpose_inequivalent: bool  # T: not equivalent to its transpose
    regular: bool  # R: constant row and column sums
    no_unitary: bool  # N: a forbidden block embedding certifies no unitary support
    zeros: int

    def flag_string(self) -> str:
        flags = ""
        if self.no_unitary:
            flags += "N"
        if self.regular:
            flags += "R"
        if self.symmetric:
            flags += "S"
        if self.transpose_inequivalent:
            flags += "T"
        return flags

    def to_json(self) -> dict:
        return {
            "degree": self.matrix.n,
            "canonical": list(self.matrix.row_strings()),
            "aut_order": self.aut_order,
            "flags": {
                "S": self.symmetric,
                "T": self.transpose_inequivalent,
                "R": self.regular,
                "N": self.no_unitary,
            },
            "zeros": self.zeros,
        }


def build_class_record(m: BinMatrix, no_unitary: bool) -> ClassRecord:
    """Canonicalize m and compute every flag except N, which the caller supplies."""
    canon = canonical_form(m)
    return ClassRecord(
        matrix=canon,
        aut_order=aut_group_order(canon),
        symmetric=is_symmetric_equivalent(canon),
        transpose_inequivalent=not is_transpose_equivalent(canon),
        regular=is_regular(canon),
        no_unitary=no_unitary,
        zeros=zero_count(canon),
    )
