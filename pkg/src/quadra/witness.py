"""Numerical unitary witnesses for (0,1) zero patterns.

A witness for a pattern M is a unitary whose support (entries above a
magnitude threshold) equals M. Witnesses are built directly via the block
composition of smaller unitaries, or searched for by alternating projections:
zero out the forbidden entries, then retract to the nearest unitary through
the polar factor of an SVD.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .binmat import BinMatrix, has_zero_line
from .forbidden import BlockEmbedding, detect_cond, detect_newcond

DEFAULT_RESTARTS = 200
DEFAULT_ITERATIONS = 2000
DEFAULT_SUPPORT_TOL = 1e-8
DEFAULT_UNITARY_TOL = 1e-9
_PATTERN_RESIDUAL = 1e-12
_SINGULAR_FLOOR = 1e-13


class WitnessStatus(Enum):
    WITNESS = "Witness"
    CERTIFIED_IMPOSSIBLE = "CertifiedImpossible"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class WitnessResult:
    status: WitnessStatus
    witness: np.ndarray | None
    certificate: BlockEmbedding | None
    restarts_used: int
    final_residual: float


def fourier_matrix(k: int) -> np.ndarray:
    """The unitary (1/sqrt(k)) * [exp(2*pi*i*a*b/k)]_{a,b}."""
    if k < 1:
        raise ValueError(f"order must be >= 1, got {k}")
    a = np.arange(k)
    return np.exp(2j * np.pi * np.outer(a, a) / k) / np.sqrt(k)


def is_unitary(u: np.ndarray, tol: float) -> bool:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    n = u.shape[0]
    if u.shape != (n, n):
        return False
    return np.abs(u.conj().T @ u - np.eye(n)).max() < tol


def support(u: np.ndarray, tol: float) -> BinMatrix:
    """(0,1)-pattern of entries with magnitude above tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return BinMatrix.from_rows((np.abs(u) > tol).astype(int).tolist())


def dita_compose(h: np.ndarray, blocks, tol: float = DEFAULT_UNITARY_TOL) -> np.ndarray:
    """Block composition: (i,j) block of the output is h[i,j] * blocks[j].

    The output is unitary of degree n*k whenever h (degree k) and every block
    (degree n) are unitary.
    """
    h = np.asarray(h, dtype=complex)
    k = h.shape[0]
    if not is_unitary(h, tol):
        raise ValueError("mixing matrix is not unitary within tolerance")
    blocks = [np.asarray(b, dtype=complex) for b in blocks]
    if len(blocks) != k:
        raise ValueError(f"expected {k} blocks, got {len(blocks)}")
    n = blocks[0].shape[0]
    for i, b in enumerate(blocks):
        if b.shape != (n, n):
            raise ValueError(f"block {i} has shape {b.shape}, expected {(n, n)}")
        if not is_unitary(b, tol):
            raise ValueError(f"block {i} is not unitary within tolerance")
    out = np.zeros((n * k, n * k), dtype=complex)
    for i in range(k):
        for j in range(k):
            out[i * n : (i + 1) * n, j * n : (j + 1) * n] = h[i, j] * blocks[j]
    return out


def dita_row_compose(
    patterns,
    witnesses,
    support_tol: float = DEFAULT_SUPPORT_TOL,
    unitary_tol: float = DEFAULT_UNITARY_TOL,
) -> np.ndarray:
    """Combine verified witnesses into one of degree k*n with block-row-repeated support.

    Mixing with the Fourier unitary keeps every block support intact, since all
    Fourier entries are nonzero.
    """
    if len(patterns) != len(witnesses):
        raise ValueError("need one witness per pattern")
    for i, (pat, wit) in enumerate(zip(patterns, witnesses)):
        if not verify_witness(pat, wit, support_tol, unitary_tol):
            raise ValueError(f"witness {i} does not realize its pattern")
    k = len(witnesses)
    return dita_compose(fourier_matrix(k), witnesses, tol=unitary_tol)


def verify_witness(
    m: BinMatrix,
    u: np.ndarray,
    support_tol: float = DEFAULT_SUPPORT_TOL,
    unitary_tol: float = DEFAULT_UNITARY_TOL,
) -> bool:
    """Unitary within tolerance, support equal to m, and no required entry drifting to zero."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (m.n, m.n):
        raise ValueError(f"degree mismatch: pattern {m.n}, matrix {u.shape}")
    if not is_unitary(u, unitary_tol):
        return False
    if support(u, support_tol) != m:
        return False
    mask = _pattern_mask(m)
    return float(np.abs(u[mask]).min()) >= 10 * support_tol


def _pattern_mask(m: BinMatrix) -> np.ndarray:
    return np.array(
        [[m.entry(i, j) == 1 for j in range(m.n)] for i in range(m.n)], dtype=bool
    )


def find_witness(
    m: BinMatrix,
    restarts: int = DEFAULT_RESTARTS,
    iterations: int = DEFAULT_ITERATIONS,
    support_tol: float = DEFAULT_SUPPORT_TOL,
    unitary_tol: float = DEFAULT_UNITARY_TOL,
    seed: int = 0,
) -> WitnessResult:
    """Decide unitary support for m, within a randomized search budget.

    Runs the forbidden-structure detectors first; a hit is a proof of
    impossibility. Otherwise alternates pattern projection with polar
    retraction from random starts. Deterministic for a fixed seed: restart r
    draws from a generator seeded by (seed, r), and the first verified witness
    wins. An exhausted budget is reported as inconclusive, never as
    impossibility.
    """
    if has_zero_line(m):
        raise ValueError("a matrix with a zero line cannot support a unitary")
    cert = detect_cond(m) or detect_newcond(m)
    if cert is not None:
        return WitnessResult(WitnessStatus.CERTIFIED_IMPOSSIBLE, None, cert, 0, 0.0)

    n = m.n
    mask = _pattern_mask(m)
    forbidden = ~mask
    best = float("inf")
    for r in range(restarts):
        rng = np.random.default_rng((seed, r))
        x = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) * mask
        for _ in range(iterations):
            left, sv, right = np.linalg.svd(x)
            if sv[-1] < _SINGULAR_FLOOR:
                break
            u = left @ right
            residual = float(np.linalg.norm(u[forbidden])) if forbidden.any() else 0.0
            best = min(best, residual)
            if residual < _PATTERN_RESIDUAL:
                if verify_witness(m, u, support_tol, unitary_tol):
                    return WitnessResult(WitnessStatus.WITNESS, u, None, r + 1, residual)
                break
            x = u * mask
    return WitnessResult(WitnessStatus.INCONCLUSIVE, None, None, restarts, best)
