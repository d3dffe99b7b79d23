"""Exact arithmetic in cyclotomic fields.

A value is stored at its smallest conductor ``N`` as a coefficient vector
over the power basis ``1, z, ..., z^(phi(N)-1)`` of ``Q(z)``, ``z = exp(2 pi i/N)``,
reduced modulo the cyclotomic polynomial.  Conductors are never 2 mod 4
(``Q(z_2m) = Q(z_m)`` for odd ``m``) and rationals have conductor 1, so the
pair (conductor, coefficients) is a canonical form.

Arithmetic goes through dense vectors indexed by ``z_L^j`` for ``j < L``
(``L`` a common multiple of the conductors).  Those are not unique but are
cheap to add, multiply and permute; one reduction at the end restores the
canonical form.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

import numpy as np

Rational = Union[int, Fraction]


# -- number theory helpers ----------------------------------------------------


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of ``Phi_n``, constant term first."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in divisors(n)[:-1]:
        num = _poly_div_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_div_exact(a: list[int], b: list[int]) -> list[int]:
    a = a[:]
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    assert not any(a), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def _reduction_matrix(L: int) -> np.ndarray:
    """Row ``j`` holds the power-basis coefficients of ``z_L^j`` (``0 <= j < L``)."""
    phi = cyclotomic_poly(L)
    d = len(phi) - 1
    R = np.zeros((L, d), dtype=np.int64)
    cur = np.zeros(d, dtype=np.int64)
    cur[0] = 1
    low = np.array(phi[:-1], dtype=np.int64)
    for j in range(L):
        R[j] = cur
        top = cur[-1]
        cur = np.concatenate(([0], cur[:-1]))
        if top:
            cur = cur - top * low
    R.setflags(write=False)
    return R


@lru_cache(maxsize=None)
def _galois_gather(L: int) -> tuple[np.ndarray, np.ndarray]:
    """Units ``a`` of ``Z/L`` and ``idx[u, k] = a_u^-1 k mod L``.

    ``num[idx[u]]`` is the dense vector of ``sigma_a(num)``.
    """
    units = np.array([a for a in range(1, L + 1) if math.gcd(a, L) == 1], dtype=np.int64)
    inv = np.array([pow(int(a), -1, L) for a in units], dtype=np.int64)
    return units % L, (inv[:, None] * np.arange(L)[None, :]) % L


@lru_cache(maxsize=None)
def _candidate_conductors(L: int) -> tuple[int, ...]:
    return tuple(m for m in divisors(L) if m % 4 != 2 or m == L)


def _fraction_inverse(M: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    A = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        f = A[c][c]
        A[c] = [x / f for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                g = A[r][c]
                A[r] = [x - g * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


@lru_cache(maxsize=None)
def _descent(L: int, m: int) -> tuple[np.ndarray, np.ndarray, int]:
    """How to read ``Q(z_m)`` coordinates off ``Q(z_L)`` coordinates.

    Returns pivot columns ``S``, an integer matrix ``T`` and a denominator
    ``D`` with ``c = w[S] @ T / D`` for any ``w`` that lies in ``Q(z_m)``.
    """
    R = _reduction_matrix(L)
    step = L // m
    dm = totient(m)
    E = np.array([R[i * step] for i in range(dm)], dtype=np.int64)  # dm x dL
    # greedy choice of dm independent columns (rank checked exactly)
    cols: list[int] = []
    for c in range(E.shape[1]):
        trial = cols + [c]
        sub = [[Fraction(int(x)) for x in E[:, trial][i]] for i in range(dm)]
        if _rank(sub) == len(trial):
            cols = trial
            if len(cols) == dm:
                break
    sq = [[Fraction(int(E[i, c])) for c in cols] for i in range(dm)]
    inv = _fraction_inverse(sq)  # c @ sq = w[S]  =>  c = w[S] @ inv
    D = math.lcm(*(x.denominator for row in inv for x in row))
    T = np.array([[int(x * D) for x in row] for row in inv], dtype=object)
    return np.array(cols, dtype=np.int64), T, D


def _rank(M: list[list[Fraction]]) -> int:
    A = [row[:] for row in M]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][c] != 0:
                f = A[r][c] / A[rank][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


# -- dense vectors ------------------------------------------------------------


def _normalise_scalar(x: Fraction) -> Rational:
    return x.numerator if x.denominator == 1 else x


def _as_int_array(values: Iterable[Rational]) -> tuple[np.ndarray, int]:
    vals = list(values)
    den = math.lcm(*(Fraction(v).denominator for v in vals)) if vals else 1
    nums = [int(Fraction(v) * den) for v in vals]
    big = max((abs(x) for x in nums), default=0) >= 2**40
    return np.array(nums, dtype=object if big else np.int64), den


def _reduce_dense(num: np.ndarray, L: int) -> np.ndarray:
    R = _reduction_matrix(L)
    if num.dtype == object:
        return num.dot(R.astype(object))
    return num @ R


def from_dense(num: np.ndarray, den: int, L: int) -> CyclotomicValue:
    """Canonical value of ``(sum_j num[j] z_L^j) / den``."""
    if L % 4 == 2 and L > 2:
        # z_L = -z_{L/2}^{(L/2+1)/2}: fold onto the odd half conductor
        half = L // 2
        k = (half + 1) // 2
        idx = (np.arange(L) * k) % half
        sign = np.where(np.arange(L) % 2 == 1, -1, 1)
        folded = np.zeros(half, dtype=num.dtype)
        np.add.at(folded, idx, num * sign)
        return from_dense(folded, den, half)
    if L <= 2:
        total = int(num[0]) - (int(num[1]) if L == 2 else 0)
        return CyclotomicValue._rational(Fraction(total, den))
    w = _reduce_dense(num, L)
    if not np.any(w[1:]):
        return CyclotomicValue._rational(Fraction(int(w[0]), den))
    m = _conductor(num, w, L)
    if m != L:
        cols, T, D = _descent(L, m)
        c = w[cols].astype(object).dot(T)
        coeffs = tuple(_normalise_scalar(Fraction(int(x), D * den)) for x in c)
        return CyclotomicValue._raw(m, coeffs)
    coeffs = tuple(_normalise_scalar(Fraction(int(x), den)) for x in w)
    return CyclotomicValue._raw(L, coeffs)


def _conductor(num: np.ndarray, w: np.ndarray, L: int) -> int:
    """Smallest ``m | L`` such that the value is fixed by every ``sigma_a``, ``a = 1 mod m``."""
    units, gather = _galois_gather(L)
    images = num[gather]
    red = images.dot(_reduction_matrix(L).astype(images.dtype)) if images.dtype == object else images @ _reduction_matrix(L)
    fixed = np.all(red == w[None, :], axis=1)
    fixed_units = set(units[fixed].tolist())
    for m in _candidate_conductors(L):
        if all(int(a) in fixed_units for a in units if a % m == 1 % m):
            return m
    return L


# -- the value type ---------------------------------------------------------


class CyclotomicValue:
    """An exact element of a cyclotomic field.

    >>> z = CyclotomicValue.root_of_unity(3)
    >>> z + z * z
    CyclotomicValue(-1)
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, value: Rational | CyclotomicValue = 0):
        if isinstance(value, CyclotomicValue):
            self.conductor, self.coeffs = value.conductor, value.coeffs
        else:
            self.conductor = 1
            self.coeffs = (_normalise_scalar(Fraction(value)),)
        self._hash: int | None = None

    @classmethod
    def _raw(cls, conductor: int, coeffs: tuple[Rational, ...]) -> CyclotomicValue:
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def _rational(cls, x: Fraction) -> CyclotomicValue:
        return cls._raw(1, (_normalise_scalar(x),))

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> CyclotomicValue:
        """``exp(2 pi i k / n)``."""
        num = np.zeros(n, dtype=np.int64)
        num[k % n] = 1
        return from_dense(num, 1, n)

    @classmethod
    def from_exponents(cls, n: int, multiplicities: Iterable[Rational]) -> CyclotomicValue:
        """``sum_j m_j z_n^j`` for a length-``n`` multiplicity list."""
        num, den = _as_int_array(multiplicities)
        return from_dense(num, den, n)

    @classmethod
    def from_json(cls, doc: dict) -> CyclotomicValue:
        N = int(doc["conductor"])
        coeffs = [Fraction(c) for c in doc["coefficients"]]
        if N == 1:
            return cls._rational(coeffs[0])
        R = _reduction_matrix(N)
        if len(coeffs) != R.shape[1]:
            raise ValueError("coefficient vector has the wrong length for the conductor")
        num, den = _as_int_array(coeffs + [0] * (N - len(coeffs)))
        return from_dense(num, den, N)

    # -- conversions ------------------------------------------------------

    def dense(self, L: int) -> tuple[np.ndarray, int]:
        """Integer vector ``v`` and denominator ``d`` with ``self = sum_j v[j] z_L^j / d``."""
        if L % self.conductor:
            raise ValueError(f"conductor {self.conductor} does not divide {L}")
        num, den = _as_int_array(self.coeffs)
        out = np.zeros(L, dtype=num.dtype)
        step = L // self.conductor
        out[np.arange(len(num)) * step] = num
        return out, den

    def is_rational(self) -> bool:
        return self.conductor == 1

    def is_integer(self) -> bool:
        return self.conductor == 1 and isinstance(self.coeffs[0], int)

    def is_zero(self) -> bool:
        return self.conductor == 1 and self.coeffs[0] == 0

    def to_fraction(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.coeffs[0])

    def __int__(self) -> int:
        f = self.to_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self!r} is not an integer")
        return f.numerator

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(complex(float(c)) * z**i for i, c in enumerate(self.coeffs))

    def encoding(self) -> str:
        return f"{self.conductor}:[{','.join(str(c) for c in self.coeffs)}]"

    def sort_key(self) -> tuple:
        # rationals first, larger coefficients first: puts 1 ahead of -1
        return (self.conductor, tuple(-Fraction(c) for c in self.coeffs))

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coefficients": [str(c) for c in self.coeffs]}

    # -- field operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> CyclotomicValue | None:
        if isinstance(other, CyclotomicValue):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicValue(other)
        return None

    def _binary_dense(self, other: CyclotomicValue):
        L = math.lcm(self.conductor, other.conductor)
        a, da = self.dense(L)
        b, db = other.dense(L)
        return L, a, da, b, db

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return CyclotomicValue._rational(Fraction(self.coeffs[0]) + Fraction(other.coeffs[0]))
        L, a, da, b, db = self._binary_dense(other)
        return from_dense(a * db + b * da, da * db, L)

    __radd__ = __add__

    def __neg__(self) -> CyclotomicValue:
        return CyclotomicValue._raw(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.conductor == 1:
            return self.scale(other.coeffs[0])
        if self.conductor == 1:
            return other.scale(self.coeffs[0])
        L, a, da, b, db = self._binary_dense(other)
        return from_dense(cyclic_convolve(a, b, L), da * db, L)

    __rmul__ = __mul__

    def scale(self, r: Rational) -> CyclotomicValue:
        r = Fraction(r)
        if r == 0:
            return CyclotomicValue(0)
        return CyclotomicValue._raw(
            self.conductor, tuple(_normalise_scalar(Fraction(c) * r) for c in self.coeffs)
        )

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> CyclotomicValue:
        """Multiplicative inverse via the product of the other Galois conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.conductor == 1:
            return CyclotomicValue._rational(1 / Fraction(self.coeffs[0]))
        others = CyclotomicValue(1)
        for a in _galois_gather(self.conductor)[0][1:]:
            others = others * self.galois(int(a))
        norm = (self * others).to_fraction()
        return others.scale(1 / norm)

    def __pow__(self, k: int) -> CyclotomicValue:
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicValue(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, a: int) -> CyclotomicValue:
        """Image under ``z -> z^a`` (``a`` coprime to the conductor)."""
        N = self.conductor
        if N == 1:
            return self
        if math.gcd(a, N) != 1:
            raise ValueError(f"{a} is not a unit mod {N}")
        num, den = self.dense(N)
        out = np.zeros(N, dtype=num.dtype)
        out[(np.arange(N) * a) % N] = num
        return from_dense(out, den, N)

    def conjugate(self) -> CyclotomicValue:
        return self.galois(-1 % self.conductor) if self.conductor > 1 else self

    def reduce_mod(self, q: int, root: int, order: int) -> int:
        """Image in ``F_q`` under ``z_order -> root`` (``root`` of multiplicative order ``order``)."""
        if order % self.conductor:
            raise ValueError("conductor does not divide the root order")
        z = pow(root, order // self.conductor, q)
        total = 0
        zi = 1
        for c in self.coeffs:
            c = Fraction(c)
            total += c.numerator * pow(c.denominator, -1, q) * zi
            zi = zi * z % q
        return total % q

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.conductor == 1:
            return f"CyclotomicValue({self.coeffs[0]})"
        return f"CyclotomicValue(conductor={self.conductor}, coeffs={list(self.coeffs)})"

    def __str__(self) -> str:
        if self.conductor == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if i == 0 else (f"z{self.conductor}" if i == 1 else f"z{self.conductor}^{i}")
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def cyclic_convolve(a: np.ndarray, b: np.ndarray, L: int) -> np.ndarray:
    if a.dtype == object or b.dtype == object:
        full = np.convolve(a.astype(object), b.astype(object))
    else:
        full = np.convolve(a, b)
    out = full[:L].copy()
    out[: len(full) - L] += full[L:]
    return out


class DenseAccumulator:
    """Running sum of ``coefficient * value`` at a fixed common conductor ``L``."""

    def __init__(self, L: int):
        self.L = L
        self.num = np.zeros(L, dtype=object)
        self.den = 1

    def add(self, value: CyclotomicValue, weight: Rational = 1) -> None:
        v, d = value.dense(self.L)
        w = Fraction(weight)
        # bring to the common denominator den * d * w.den
        scale_old = d * w.denominator
        self.num = self.num * scale_old + v.astype(object) * (w.numerator * self.den)
        self.den = self.den * scale_old
        g = math.gcd(self.den, *(int(x) for x in self.num))
        if g > 1:
            self.num = self.num // g
            self.den //= g

    def add_product(self, a: CyclotomicValue, b: CyclotomicValue, weight: Rational = 1) -> None:
        va, da = a.dense(self.L)
        vb, db = b.dense(self.L)
        prod = cyclic_convolve(va.astype(object), vb.astype(object), self.L)
        w = Fraction(weight)
        scale_old = da * db * w.denominator
        self.num = self.num * scale_old + prod * (w.numerator * self.den)
        self.den = self.den * scale_old
        g = math.gcd(self.den, *(int(x) for x in self.num))
        if g > 1:
            self.num = self.num // g
            self.den //= g

    def value(self) -> CyclotomicValue:
        return from_dense(self.num, self.den, self.L)


def common_conductor(values: Iterable[CyclotomicValue]) -> int:
    return math.lcm(1, *(v.conductor for v in values))


def linear_combination(pairs: Iterable[tuple[Rational, CyclotomicValue]]) -> CyclotomicValue:
    pairs = list(pairs)
    acc = DenseAccumulator(common_conductor(v for _, v in pairs))
    for w, v in pairs:
        acc.add(v, w)
    return acc.value()


ZERO = CyclotomicValue(0)
ONE = CyclotomicValue(1)
