"""Sylow subgroups, O_p, O^p and normal p-complements."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..group_core.permgroup import PermGroup
from .subgroup import SubgroupHandle, as_handle, generated_subgroup, subgroup_from_mask


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def p_part(m: int, p: int) -> int:
    """Largest power of ``p`` dividing ``m``."""
    if m < 1:
        raise ValueError("m must be positive")
    _require_prime(p)
    out = 1
    while m % p == 0:
        m //= p
        out *= p
    return out


def is_p_power(m: int, p: int) -> bool:
    return p_part(m, p) == m


def normalizer_mask(H: SubgroupHandle, within: SubgroupHandle) -> np.ndarray:
    """Mask of the elements of ``within`` normalising ``H``."""
    G = H.parent
    gens = np.array(H.generators, dtype=np.int64)
    out = np.zeros(G.order, dtype=bool)
    if len(gens) == 0:
        out[within.members] = True
        return out
    conj = G.conj(gens[:, None], within.members[None, :])
    ok = np.all(H.mask[conj], axis=0)
    out[within.members[ok]] = True
    return out


def sylow_subgroup(N: PermGroup | SubgroupHandle, p: int) -> SubgroupHandle:
    """A Sylow ``p``-subgroup, grown one p-element at a time inside normalisers."""
    _require_prime(p)
    N = as_handle(N)
    G = N.parent
    return G.cached(("sylow", N.key, p), lambda: _sylow(N, p))


def _sylow(N: SubgroupHandle, p: int) -> SubgroupHandle:
    G = N.parent
    target = p_part(N.order, p)
    P = generated_subgroup(G, [])
    orders = G.orders
    while P.order < target:
        norm = normalizer_mask(P, N)
        cand = np.flatnonzero(norm & ~P.mask)
        for x in cand:
            o = int(orders[x])
            y = G.power(int(x), o // p_part(o, p))
            if not P.mask[y]:
                P = generated_subgroup(G, list(P.generators) + [y])
                break
        else:  # pragma: no cover - Sylow's theorem guarantees a candidate
            raise AssertionError("no p-element found in normaliser")
    return P


def o_p(N: PermGroup | SubgroupHandle, p: int) -> SubgroupHandle:
    """Largest normal p-subgroup: the core in ``N`` of one Sylow p-subgroup."""
    N = as_handle(N)
    G = N.parent
    return G.cached(("o_p", N.key, p), lambda: _o_p(N, p))


def _o_p(N: SubgroupHandle, p: int) -> SubgroupHandle:
    G = N.parent
    S = sylow_subgroup(N, p)
    if S.order == 1:
        return S
    conj = G.conj(S.members[:, None], N.members[None, :])
    keep = np.all(S.mask[conj], axis=1)
    mask = np.zeros(G.order, dtype=bool)
    mask[S.members[keep]] = True
    return subgroup_from_mask(G, mask)


def o_p_residual(N: PermGroup | SubgroupHandle, p: int) -> SubgroupHandle:
    """``O^p(N)``: generated by the elements of order prime to ``p``."""
    _require_prime(p)
    N = as_handle(N)
    G = N.parent

    def build() -> SubgroupHandle:
        orders = G.orders[N.members]
        seeds = N.members[orders % p != 0]
        return generated_subgroup(G, seeds)

    return G.cached(("O^p", N.key, p), build)


def has_normal_p_complement(N: PermGroup | SubgroupHandle, p: int) -> tuple[bool, SubgroupHandle | None]:
    """Whether ``N`` has a normal p-complement; the witness is ``O^p(N)``."""
    N = as_handle(N)
    R = o_p_residual(N, p)
    if R.order == N.order // p_part(N.order, p):
        return True, R
    return False, None


def is_p_group(H: SubgroupHandle, p: int) -> bool:
    return is_p_power(H.order, p)
