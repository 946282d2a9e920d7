"""Shared test helpers: independent brute-force oracles.

These deliberately avoid the library's two inertia algorithms so the
expected values they produce are computed by a third route:
characteristic polynomials expanded term-by-term over permutations
(Leibniz), then rooted numerically.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


def char_poly_leibniz(a: np.ndarray) -> np.ndarray:
    """Coefficients of det(xI - A), highest degree first, via the
    permutation expansion.  Exponential in n; intended for n <= 7."""
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    m = -a  # det(xI - A) entries: x on the diagonal, -a off it
    total = np.zeros(n + 1, dtype=complex)
    for perm in itertools.permutations(range(n)):
        sign = _parity(perm)
        poly = np.array([1.0 + 0.0j])
        for i, j in enumerate(perm):
            factor = np.array([1.0, m[i, j]]) if i == j else np.array([0.0, m[i, j]])
            poly = np.convolve(poly, factor)
        total += sign * np.pad(poly, (n + 1 - len(poly), 0))
    return total


def _parity(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def spectrum_brute(a: np.ndarray) -> np.ndarray:
    """Sorted eigenvalues of a Hermitian matrix from the Leibniz char poly."""
    coeffs = char_poly_leibniz(a)
    assert np.max(np.abs(coeffs.imag)) < 1e-8, "char poly should be real"
    roots = np.roots(coeffs.real)
    assert np.max(np.abs(roots.imag)) < 1e-6, "Hermitian spectrum should be real"
    return np.sort(roots.real)


def inertia_brute(a: np.ndarray, tol: float = 1e-7) -> tuple[int, int, int]:
    ev = spectrum_brute(a)
    scale = max(float(np.max(np.abs(a))), 1.0)
    thr = tol * len(ev) * scale
    pos = int(np.sum(ev > thr))
    neg = int(np.sum(ev < -thr))
    return pos, neg, len(ev) - pos - neg


def cycle_spectrum_closed_form(n: int, theta: float) -> np.ndarray:
    """Eigenvalues 2*cos((theta + 2*pi*k) / n) of a gain cycle whose gains
    multiply to exp(i*theta) around the cycle."""
    return np.sort(
        [2.0 * math.cos((theta + 2.0 * math.pi * k) / n) for k in range(n)]
    )


def is_isomorphic(g1, g2) -> bool:
    """Brute-force underlying-graph isomorphism for small graphs."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degree(v) for v in range(1, g1.n + 1)) != sorted(
        g2.degree(v) for v in range(1, g2.n + 1)
    ):
        return False
    e2 = {frozenset(e) for e in g2.edges()}
    for perm in itertools.permutations(range(1, g2.n + 1)):
        mapping = dict(zip(range(1, g1.n + 1), perm))
        if all(
            frozenset((mapping[u], mapping[v])) in e2 for u, v in g1.edges()
        ):
            return True
    return False
