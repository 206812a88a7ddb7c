"""Spectral radius of nonnegative matrices by power iteration.

Each nontrivial strongly connected component is handled separately, and
iterated with ``A + I`` so that periodic components converge. The
Collatz-Wielandt quotients ``min_i (Ax)_i / x_i <= rho <= max_i (Ax)_i / x_i``
bracket the answer at every step and give the stopping rule.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

__all__ = ["SpectralResult", "spectral_radius"]


@dataclass(frozen=True)
class SpectralResult:
    lambda_: float
    log_lambda: float
    iterations: int
    converged: bool
    lower: float
    upper: float
    empty: bool = False

    def as_dict(self) -> dict:
        return {
            "lambda": self.lambda_,
            "log_lambda": self.log_lambda,
            "iterations": self.iterations,
            "converged": self.converged,
            "lower": self.lower,
            "upper": self.upper,
            "empty": self.empty,
        }


def _as_sparse(m) -> sp.csr_matrix:
    entries = getattr(m, "entries", m)
    if sp.issparse(entries):
        a = sp.csr_matrix(entries, dtype=np.float64)
    else:
        a = sp.csr_matrix(np.asarray(entries, dtype=np.float64))
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got {a.shape}")
    if a.nnz and a.data.min() < 0:
        raise ValueError("matrix must be nonnegative")
    a.eliminate_zeros()
    return a


def _component_radius(a: sp.csr_matrix, tol: float, max_iter: int) -> tuple[float, float, int, bool]:
    n = a.shape[0]
    rows = np.asarray(a.sum(axis=1)).ravel()
    if rows.min() == rows.max():
        return float(rows[0]), float(rows[0]), 0, True
    x = np.ones(n)
    lo, hi = float(rows.min()), float(rows.max())
    for it in range(1, max_iter + 1):
        y = a @ x
        q = y / x
        lo, hi = max(lo, float(q.min())), min(hi, float(q.max()))
        if hi - lo <= tol * max(1.0, hi):
            return lo, hi, it, True
        x = y + x
        x /= x.max()
    return lo, hi, max_iter, False


def spectral_radius(m, tol: float = 1e-10, max_iter: int = 10**6) -> SpectralResult:
    """Perron root of a nonnegative square matrix (dense, sparse or :class:`TransitionMatrix`).

    ``lambda_`` is the midpoint of the final bracket ``[lower, upper]``.
    A nilpotent matrix (no cycles) gives ``lambda_ = 0`` with ``empty`` set
    and ``log_lambda`` reported as 0.
    """
    a = _as_sparse(m)
    n = a.shape[0]
    if n == 0 or a.nnz == 0:
        return SpectralResult(0.0, 0.0, 0, True, 0.0, 0.0, empty=True)
    ncomp, labels = connected_components(a, directed=True, connection="strong")
    order = np.argsort(labels, kind="stable")
    bounds = np.searchsorted(labels[order], np.arange(ncomp + 1))
    best_lo = best_hi = 0.0
    iterations = 0
    converged = True
    for k in range(ncomp):
        idx = order[bounds[k] : bounds[k + 1]]
        sub = a[idx][:, idx]
        if sub.nnz == 0:
            continue
        rows = np.asarray(sub.sum(axis=1)).ravel()
        if rows.max() <= best_lo:
            continue
        lo, hi, it, ok = _component_radius(sub.tocsr(), tol, max_iter)
        iterations += it
        converged &= ok
        if hi > best_hi:
            best_hi = hi
        if lo > best_lo:
            best_lo = lo
    if best_hi == 0.0:
        return SpectralResult(0.0, 0.0, iterations, True, 0.0, 0.0, empty=True)
    lam = 0.5 * (best_lo + best_hi)
    return SpectralResult(lam, math.log(lam), iterations, converged, best_lo, best_hi)
