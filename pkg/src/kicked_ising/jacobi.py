"""Cyclic Jacobi eigensolver for small complex Hermitian matrices.

Self-contained kernel for the 2x2 and 4x4 spectra behind the concurrence.
Each rotation annihilates one off-diagonal pivot with a phased Givens
rotation (the diagonal phase that makes the pivot real is fused into the
rotation coefficients).  Quadratic convergence makes a handful of sweeps
enough at these sizes; the hot loops run on plain Python complex numbers,
which beat numpy scalars by an order of magnitude at n = 4.
"""

from __future__ import annotations

import math

import numpy as np


def eigh_small(matrix, vectors: bool = False, tol: float = 1e-14, max_sweeps: int = 60):
    """Eigenvalues (ascending) of a small Hermitian matrix, optionally vectors.

    Returns ``(w, v)`` with ``w`` a float ndarray and ``v`` either ``None`` or
    a unitary ndarray whose columns are the eigenvectors in the order of ``w``.
    The input is symmetrized as ``(A + A^dagger)/2`` to shed rounding noise.
    """
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    raw = m.tolist()
    a = [[0.5 * (raw[i][j] + raw[j][i].conjugate()) for j in range(n)] for i in range(n)]
    v = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)] if vectors else None

    scale = max(max(abs(x) for x in row) for row in a)
    if scale == 0.0:
        w = np.zeros(n)
        return (w, np.eye(n, dtype=complex)) if vectors else (w, None)

    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    threshold = tol * scale
    for _ in range(max_sweeps):
        off = 0.0
        for p, q in pairs:
            x = a[p][q]
            off += x.real * x.real + x.imag * x.imag
        if math.sqrt(off) <= threshold:
            break
        for p, q in pairs:
            apq = a[p][q]
            r = abs(apq)
            if r <= 1e-300:
                continue
            w_pq = apq / r
            diff = (a[q][q].real - a[p][p].real) / (2.0 * r)
            t = (1.0 if diff >= 0.0 else -1.0) / (abs(diff) + math.hypot(1.0, diff))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            # fused coefficients of R = diag(1, conj(w)) . Givens(c, s)
            swc = s * w_pq.conjugate()
            cwc = c * w_pq.conjugate()
            sw = s * w_pq
            cw = c * w_pq
            for row in a:
                rip, riq = row[p], row[q]
                row[p] = c * rip - swc * riq
                row[q] = s * rip + cwc * riq
            rp, rq = a[p], a[q]
            for j in range(n):
                apj, aqj = rp[j], rq[j]
                rp[j] = c * apj - sw * aqj
                rq[j] = s * apj + cw * aqj
            if v is not None:
                for row in v:
                    rip, riq = row[p], row[q]
                    row[p] = c * rip - swc * riq
                    row[q] = s * rip + cwc * riq

    w = np.array([a[i][i].real for i in range(n)])
    order = np.argsort(w, kind="stable")
    w = w[order]
    if vectors:
        vm = np.array(v, dtype=complex)[:, order]
        return w, vm
    return w, None
