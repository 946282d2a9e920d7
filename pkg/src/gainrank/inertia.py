"""Hermitian adjacency matrices and two independent inertia algorithms.

``inertia_congruence`` counts pivot signs of a pivoted LDL* elimination;
by Sylvester's law of inertia the counts equal the numbers of positive
and negative eigenvalues.  ``inertia_eigen`` takes a completely separate
route: it embeds the complex Hermitian matrix as a real symmetric matrix
of twice the size and diagonalizes that with cyclic Jacobi rotations.
The two must agree; the harness checks they do on thousands of inputs.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import InternalInconsistency, NoConvergence, NotHermitian
from .gaingraph import GainGraph

DEFAULT_TOL = 1e-9

#: Pivot-choice constant for the 2x2 pivot rule; the classical value
#: bounding element growth in symmetric indefinite factorization.
_ALPHA = (1.0 + math.sqrt(17.0)) / 8.0

_JACOBI_MAX_SWEEPS = 30


class InertiaTriple(NamedTuple):
    """Counts of positive, negative and zero eigenvalues."""

    pos: int
    neg: int
    zero: int

    @property
    def rank(self) -> int:
        return self.pos + self.neg

    def __add__(self, other):  # type: ignore[override]
        return InertiaTriple(
            self.pos + other.pos, self.neg + other.neg, self.zero + other.zero
        )


def adjacency(g: GainGraph) -> np.ndarray:
    """Hermitian adjacency matrix of a gain graph (zero diagonal)."""
    a = np.zeros((g.n, g.n), dtype=np.complex128)
    for (u, v), z in g.gain_items():
        a[u - 1, v - 1] = z
        a[v - 1, u - 1] = z.conjugate()
    return a


def _checked_hermitian(m, tol: float) -> tuple[np.ndarray, float]:
    a = np.array(m, dtype=np.complex128, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotHermitian(f"need a square matrix, got shape {a.shape}")
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    defect = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if defect > tol * max(scale, 1.0):
        raise NotHermitian(f"Hermitian defect {defect:g} exceeds tolerance")
    a = (a + a.conj().T) / 2.0
    return a, scale


def _swap(a: np.ndarray, i: int, j: int) -> None:
    if i != j:
        a[[i, j], :] = a[[j, i], :]
        a[:, [i, j]] = a[:, [j, i]]


def inertia_congruence(m, tol: float = DEFAULT_TOL) -> InertiaTriple:
    """Inertia by sign-counting a pivoted congruence elimination.

    Uses a 1x1 pivot whenever the largest remaining diagonal entry is at
    least _ALPHA times the largest off-diagonal entry, and otherwise an
    indefinite 2x2 pivot contributing one positive and one negative count.
    Entries below ``tol * n * scale`` are treated as zero.
    """
    a, scale = _checked_hermitian(m, tol)
    n = a.shape[0]
    if scale == 0.0:
        return InertiaTriple(0, 0, n)
    thr = tol * n * scale
    pos = neg = zero = 0
    k = 0
    while k < n:
        b = a[k:, k:]
        diag = np.abs(np.real(np.diag(b)))
        i = int(np.argmax(diag))
        dmax = float(diag[i])
        absb = np.abs(b)
        np.fill_diagonal(absb, 0.0)
        flat = int(np.argmax(absb))
        r, c = divmod(flat, n - k)
        omax = float(absb[r, c])
        if dmax <= thr and omax <= thr:
            zero += n - k
            break
        if dmax >= _ALPHA * omax:
            _swap(a, k, k + i)
            piv = float(a[k, k].real)
            if piv > 0:
                pos += 1
            else:
                neg += 1
            if k + 1 < n:
                col = a[k + 1 :, k]
                a[k + 1 :, k + 1 :] -= np.outer(col, col.conj()) / piv
            k += 1
        else:
            rr, cc = k + r, k + c
            _swap(a, k, rr)
            if cc == k:
                cc = rr
            _swap(a, k + 1, cc)
            p11 = float(a[k, k].real)
            p22 = float(a[k + 1, k + 1].real)
            p12 = complex(a[k, k + 1])
            det = p11 * p22 - abs(p12) ** 2
            pos += 1
            neg += 1
            if k + 2 < n:
                v = a[k + 2 :, k : k + 2]
                pinv = (
                    np.array([[p22, -p12], [-p12.conjugate(), p11]]) / det
                )
                a[k + 2 :, k + 2 :] -= v @ pinv @ v.conj().T
            k += 2
        if k < n:
            t = a[k:, k:]
            a[k:, k:] = (t + t.conj().T) / 2.0
    return InertiaTriple(pos, neg, zero)


def _real_embedding(a: np.ndarray) -> np.ndarray:
    """[[Re, -Im], [Im, Re]]: symmetric, each eigenvalue of ``a`` doubled."""
    x, y = a.real, a.imag
    b = np.block([[x, -y], [y, x]])
    return (b + b.T) / 2.0


def _round_robin_rounds(m: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pair schedule covering all index pairs once per sweep.

    Each round consists of disjoint pairs, so all of a round's rotations
    can be applied in one vectorized step.
    """
    arr = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps = np.array([arr[i] for i in range(m // 2)])
        qs = np.array([arr[m - 1 - i] for i in range(m // 2)])
        rounds.append((ps, qs))
        arr = [arr[0]] + [arr[-1]] + arr[1:-1]
    return rounds


def _offdiag_norm(b: np.ndarray) -> float:
    # summing the masked entries directly avoids the cancellation that
    # ||B||^2 - ||diag||^2 would suffer near convergence
    off = b.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def _jacobi_diagonal(
    b: np.ndarray, stop: float, max_sweeps: int
) -> np.ndarray:
    """Diagonal after cyclic Jacobi sweeps; raises NoConvergence."""
    m = b.shape[0]
    if m < 2:
        return np.diag(b).copy()
    rounds = _round_robin_rounds(m)
    # skipping pairs this small cannot keep the off-norm above `stop`
    skip = stop / (2.0 * m)
    for _ in range(max_sweeps):
        if _offdiag_norm(b) <= stop:
            return np.diag(b).copy()
        for ps, qs in rounds:
            apq = b[ps, qs]
            live = np.abs(apq) > skip
            if not np.any(live):
                continue
            app = b[ps, ps]
            aqq = b[qs, qs]
            tau = np.zeros_like(apq)
            with np.errstate(over="ignore", divide="ignore"):
                tau[live] = (aqq[live] - app[live]) / (2.0 * apq[live])
            t = np.zeros_like(apq)
            small = live & (np.abs(tau) <= 1e8)
            t[small] = np.sign(tau[small]) / (
                np.abs(tau[small]) + np.sqrt(1.0 + tau[small] ** 2)
            )
            # sign(0) is 0; recover the tau == 0 rotations (t = 1)
            t[small & (tau == 0.0)] = 1.0
            big = live & ~small
            t[big] = 1.0 / (2.0 * tau[big])
            c = 1.0 / np.sqrt(1.0 + t**2)
            s = t * c
            c[~live] = 1.0
            s[~live] = 0.0
            rp = b[ps, :].copy()
            rq = b[qs, :].copy()
            b[ps, :] = c[:, None] * rp - s[:, None] * rq
            b[qs, :] = s[:, None] * rp + c[:, None] * rq
            cp = b[:, ps].copy()
            cq = b[:, qs].copy()
            b[:, ps] = cp * c - cq * s
            b[:, qs] = cp * s + cq * c
            b[ps, qs] = 0.0
            b[qs, ps] = 0.0
    if _offdiag_norm(b) <= stop:
        return np.diag(b).copy()
    raise NoConvergence(
        f"Jacobi iteration did not reach {stop:g} in {max_sweeps} sweeps"
    )


def _halve_counts(pos2: int, neg2: int, zero2: int) -> InertiaTriple:
    if pos2 % 2 or neg2 % 2 or zero2 % 2:
        raise InternalInconsistency(
            f"real embedding produced odd multiplicities "
            f"({pos2}, {neg2}, {zero2})"
        )
    return InertiaTriple(pos2 // 2, neg2 // 2, zero2 // 2)


def inertia_eigen(
    m, tol: float = DEFAULT_TOL, max_sweeps: int = _JACOBI_MAX_SWEEPS
) -> InertiaTriple:
    """Inertia via Jacobi eigenvalues of the real symmetric embedding.

    Every eigenvalue of the input appears twice in the embedding; the
    doubled sign counts are checked for even parity before halving.
    """
    a, scale = _checked_hermitian(m, tol)
    n = a.shape[0]
    if scale == 0.0:
        return InertiaTriple(0, 0, n)
    b = _real_embedding(a)
    d = _jacobi_diagonal(b, tol * scale, max_sweeps)
    thr = tol * n * scale
    pos2 = int(np.sum(d > thr))
    neg2 = int(np.sum(d < -thr))
    return _halve_counts(pos2, neg2, 2 * n - pos2 - neg2)


def graph_inertia(
    g: GainGraph, tol: float = DEFAULT_TOL, cross_check: bool = False
) -> InertiaTriple:
    """Inertia of a gain graph's adjacency matrix.

    The pivot-counting route is authoritative.  With ``cross_check`` the
    Jacobi route is run as well and any disagreement raises
    ``InternalInconsistency``; the verification harness performs this
    comparison systematically, the flag is for one-off desk use.
    """
    a = adjacency(g)
    tri = inertia_congruence(a, tol)
    if cross_check:
        other = inertia_eigen(a, tol)
        if other != tri:
            raise InternalInconsistency(
                f"inertia mismatch: congruence {tri} vs eigen {other}"
            )
    return tri


def rank(
    g: GainGraph, tol: float = DEFAULT_TOL, cross_check: bool = False
) -> int:
    """Rank of the adjacency matrix (positive plus negative counts)."""
    return graph_inertia(g, tol, cross_check).rank
