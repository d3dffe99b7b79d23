"""Linear algebra over the prime field F_q with int64 numpy arrays (q < 2^31)."""

from __future__ import annotations

import math

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def dixon_prime(exponent: int, order: int) -> int:
    """Smallest prime ``q = 1 (mod exponent)`` with ``q > order``."""
    q = (order // exponent + 1) * exponent + 1
    while not is_prime(q):
        q += exponent
    return q


def primitive_root(q: int) -> int:
    factors = {p for p in range(2, q) if (q - 1) % p == 0 and is_prime(p)}
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in factors):
            return g
    return 1  # q == 2


def rref(A: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = np.array(A, dtype=np.int64) % q
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if len(nz) == 0:
            continue
        p = r + nz[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, q) % q
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if len(hit):
            A[hit] = (A[hit] - col[hit, None] * A[r][None, :]) % q
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace(A: np.ndarray, q: int) -> np.ndarray:
    """Basis (as rows) of ``{x : A x = 0}``."""
    n = A.shape[1]
    R, piv = rref(A, q)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, p in enumerate(piv):
            basis[i, p] = (-R[r, f]) % q
    return basis


def charpoly(M: np.ndarray, q: int) -> list[int]:
    """Characteristic polynomial ``det(xI - M)``, constant term first, via Hessenberg reduction."""
    H = np.array(M, dtype=np.int64) % q
    n = H.shape[0]
    for m in range(1, n - 1):
        nz = np.flatnonzero(H[m:, m - 1])
        if len(nz) == 0:
            continue
        i = m + nz[0]
        if i != m:
            H[[i, m]] = H[[m, i]]
            H[:, [i, m]] = H[:, [m, i]]
        inv = pow(int(H[m, m - 1]), -1, q)
        for j in range(m + 1, n):
            u = H[j, m - 1] * inv % q
            if u:
                H[j] = (H[j] - u * H[m]) % q
                H[:, m] = (H[:, m] + u * H[:, j]) % q
    # p_k = characteristic polynomial of the leading k x k block
    polys: list[list[int]] = [[1]]
    for k in range(1, n + 1):
        a = int(H[k - 1, k - 1])
        prev = polys[k - 1]
        pk = [0] + prev  # x * p_{k-1}
        for i, c in enumerate(prev):
            pk[i] = (pk[i] - a * c) % q
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * int(H[i, i - 1]) % q
            if prod == 0:
                break
            coef = prod * int(H[i - 1, k - 1]) % q
            for j, c in enumerate(polys[i - 1]):
                pk[j] = (pk[j] - coef * c) % q
        polys.append(pk)
    return polys[n]


def roots_in_field(poly: list[int], q: int) -> list[int]:
    """All roots in F_q (without multiplicity), by evaluating at every field element."""
    xs = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + c) % q
    return np.flatnonzero(acc == 0).tolist()
