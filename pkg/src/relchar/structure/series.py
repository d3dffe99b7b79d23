"""Commutator subgroups, derived and lower central series, Fitting subgroup."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from ..errors import RelcharError
from ..group_core.permgroup import PermGroup
from .subgroup import (
    SubgroupHandle,
    as_handle,
    join,
    normal_closure,
    trivial_subgroup,
    whole_group,
)
from .sylow import o_p, prime_factors

NONSOLVABLE = "nonsolvable"

DerivedLength = Union[int, Literal["nonsolvable"]]


@dataclass(frozen=True)
class NormalSeries:
    """Descending chain of subgroups ``terms[0] >= terms[1] >= ...``."""

    terms: tuple[SubgroupHandle, ...]
    kind: str

    def __len__(self) -> int:
        return len(self.terms)

    def orders(self) -> list[int]:
        return [t.order for t in self.terms]

    def factors(self) -> list[tuple[SubgroupHandle, SubgroupHandle]]:
        """Consecutive pairs ``(upper, lower)``."""
        return list(zip(self.terms, self.terms[1:]))


def commutator_subgroup(A: SubgroupHandle, B: SubgroupHandle) -> SubgroupHandle:
    """``[A, B]``: normal closure in ``<A, B>`` of commutators of generators."""
    G = A.parent
    key = ("comm",) + tuple(sorted((A.key, B.key)))

    def build() -> SubgroupHandle:
        ga = np.array(A.generators, dtype=np.int64)
        gb = np.array(B.generators, dtype=np.int64)
        if len(ga) == 0 or len(gb) == 0:
            return trivial_subgroup(G)
        comms = np.unique(np.asarray(G.commutator(ga[:, None], gb[None, :])).ravel())
        return normal_closure(G, comms.tolist(), within=join(A, B))

    return G.cached(key, build)


def derived_subgroup(N: PermGroup | SubgroupHandle) -> SubgroupHandle:
    N = as_handle(N)
    return commutator_subgroup(N, N)


def derived_series(N: PermGroup | SubgroupHandle) -> tuple[NormalSeries, DerivedLength]:
    """``N >= N' >= N'' >= ...`` and the derived length (or ``"nonsolvable"``)."""
    N = as_handle(N)
    G = N.parent

    def build():
        terms = [N]
        while True:
            nxt = derived_subgroup(terms[-1])
            if nxt.order == terms[-1].order:
                break
            terms.append(nxt)
        series = NormalSeries(tuple(terms), "derived")
        if terms[-1].order != 1:
            return series, NONSOLVABLE
        return series, len(terms) - 1

    return G.cached(("derived_series", N.key), build)


def derived_length(N: PermGroup | SubgroupHandle) -> DerivedLength:
    return derived_series(N)[1]


def is_solvable(N: PermGroup | SubgroupHandle) -> bool:
    return derived_length(N) != NONSOLVABLE


def solvability(G: PermGroup | SubgroupHandle) -> bool:
    return is_solvable(G)


def lower_central_series(N: PermGroup | SubgroupHandle) -> tuple[NormalSeries, bool, SubgroupHandle]:
    """``gamma_{k+1} = [gamma_k, N]`` down to the nilpotent residual."""
    N = as_handle(N)
    G = N.parent

    def build():
        terms = [N]
        while True:
            nxt = commutator_subgroup(terms[-1], N)
            if nxt.order == terms[-1].order:
                break
            terms.append(nxt)
        residual = terms[-1]
        if commutator_subgroup(residual, N) != residual:  # pragma: no cover
            raise AssertionError("[N^inf, N] != N^inf")
        return NormalSeries(tuple(terms), "lower-central"), residual.order == 1, residual

    return G.cached(("lower_central", N.key), build)


def nilpotent_residual(N: PermGroup | SubgroupHandle) -> SubgroupHandle:
    return lower_central_series(N)[2]


def is_nilpotent(N: PermGroup | SubgroupHandle) -> bool:
    return lower_central_series(N)[1]


def fitting_subgroup(N: PermGroup | SubgroupHandle) -> SubgroupHandle:
    """Join of ``O_p(N)`` over the primes dividing ``|N|``."""
    N = as_handle(N)
    G = N.parent

    def build() -> SubgroupHandle:
        parts = [o_p(N, p) for p in prime_factors(N.order)]
        if not parts:
            return trivial_subgroup(G)
        return join(*parts)

    return G.cached(("fitting", N.key), build)


def fitting_height(N: PermGroup | SubgroupHandle) -> int:
    """Number of Fitting quotients needed to exhaust a solvable ``N``."""
    from ..group_core.quotient import coset_action

    N = as_handle(N)
    if not is_solvable(N):
        raise RelcharError("Fitting height is defined only for solvable groups")

    def build() -> int:
        height = 0
        cur = N
        while cur.order > 1:
            F = fitting_subgroup(cur)
            height += 1
            if F.order == cur.order:
                break
            Q, _ = coset_action(cur, F)
            cur = whole_group(Q)
        return height

    return N.parent.cached(("fitting_height", N.key), build)
