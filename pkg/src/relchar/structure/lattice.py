"""Normal subgroups, chief series, p-solvability and full subgroup enumeration."""

from __future__ import annotations

import numpy as np

from .. import config
from ..errors import GuardExceeded, NotNormalError, RelcharError
from ..group_core.permgroup import PermGroup
from .series import NormalSeries, commutator_subgroup
from .subgroup import (
    SubgroupHandle,
    _closure,
    generated_subgroup,
    join,
    normal_closure,
    trivial_subgroup,
    whole_group,
)
from .sylow import is_p_power, prime_factors


def sort_key(H: SubgroupHandle) -> tuple[int, tuple[int, ...]]:
    return (H.order, tuple(H.members.tolist()))


def normal_subgroups(G: PermGroup, within: SubgroupHandle | None = None) -> list[SubgroupHandle]:
    """Every normal subgroup of ``G`` (inside ``within`` if given), sorted by order then members.

    Normal subgroups are joins of normal closures of single classes, so we
    close the set of class closures under pairwise joins.
    """
    if within is not None and not within.is_normal():
        raise NotNormalError("'within' must be normal in the group")
    everything = G.cached("normal_subgroups", lambda: _all_normal_subgroups(G))
    if within is None:
        return everything
    return [N for N in everything if N <= within]


def _all_normal_subgroups(G: PermGroup) -> list[SubgroupHandle]:
    from ..characters.classes import conjugacy_classes

    guard = config.current().character_table
    if G.order > guard:
        raise GuardExceeded("normal subgroup enumeration", guard, G.order)
    cd = conjugacy_classes(G)
    closures: dict[bytes, SubgroupHandle] = {}
    for rep in cd.representatives[1:]:
        C = normal_closure(G, [rep])
        closures.setdefault(C.key, C)
    found: dict[bytes, SubgroupHandle] = {}
    triv = trivial_subgroup(G)
    triv._normal = True
    found[triv.key] = triv
    queue = [triv]
    closure_list = sorted(closures.values(), key=sort_key)
    while queue:
        nxt = []
        for S in queue:
            for C in closure_list:
                if C <= S:
                    continue
                J = join(S, C)
                if J.key not in found:
                    J._normal = True
                    found[J.key] = J
                    nxt.append(J)
        queue = nxt
    return sorted(found.values(), key=sort_key)


def minimal_normal_subgroups(G: PermGroup, within: SubgroupHandle | None = None) -> list[SubgroupHandle]:
    normals = [N for N in normal_subgroups(G, within) if N.order > 1]
    return [N for N in normals if not any(M < N for M in normals)]


def chief_factor_pairs(G: PermGroup, within: SubgroupHandle | None = None) -> list[tuple[SubgroupHandle, SubgroupHandle]]:
    """All ``(Y, X)`` with ``Y < X`` normal in ``G`` and nothing normal strictly between."""
    pairs = G.cached("chief_pairs", lambda: _chief_pairs(G))
    if within is None:
        return pairs
    return [(Y, X) for Y, X in pairs if X <= within]


def _chief_pairs(G: PermGroup) -> list[tuple[SubgroupHandle, SubgroupHandle]]:
    normals = normal_subgroups(G)
    out = []
    for X in normals:
        below = [Y for Y in normals if Y < X]
        for Y in below:
            if not any(Y < M and M < X for M in below):
                out.append((Y, X))
    return out


def chief_series(G: PermGroup, through: list[SubgroupHandle] | None = None) -> NormalSeries:
    """A chief series of ``G`` refining the chain ``through`` (descending terms).

    At each step the next term is a minimal normal subgroup of the current
    quotient, smallest order first, then smallest member ids.
    """
    normals = normal_subgroups(G)
    chain = sorted({H.key: H for H in (through or [])}.values(), key=sort_key)
    for H in chain:
        if not H.is_normal():
            raise NotNormalError("chief series chain terms must be normal")
    for A, B in zip(chain, chain[1:]):
        if not A <= B:
            raise RelcharError("chain terms are not totally ordered by inclusion")
    targets = [H for H in chain if H.order > 1] + [whole_group(G)]
    cur = trivial_subgroup(G)
    ascending = [cur]
    for T in targets:
        while cur.order < T.order:
            cands = [K for K in normals if cur < K and K <= T]
            minimal = [K for K in cands if not any(M < K for M in cands)]
            cur = min(minimal, key=sort_key)
            ascending.append(cur)
    return NormalSeries(tuple(reversed(ascending)), "chief")


def is_p_solvable(G: PermGroup, p: int) -> bool:
    """Every chief factor is a p-group or a p'-group."""
    series = chief_series(G)
    for upper, lower in series.factors():
        size = upper.order // lower.order
        if not (is_p_power(size, p) or size % p != 0):
            return False
    return True


def is_chief_factor_abelian(X: SubgroupHandle, Y: SubgroupHandle) -> bool:
    return commutator_subgroup(X, X) <= Y


def enumerate_subgroups(G: PermGroup) -> list[SubgroupHandle]:
    """All subgroups of ``G``, sorted by order then members.

    Cyclic extension: starting from the trivial group, repeatedly adjoin a
    single element of prime-power order (one per cyclic subgroup it
    generates) until no new subgroup appears.  Every subgroup is generated by
    its prime-power elements, so adjoining them one at a time reaches it.
    """
    guard = config.current().subgroup_enumeration
    if G.order > guard:
        raise GuardExceeded("subgroup enumeration", guard, G.order)
    return G.cached("all_subgroups", lambda: _enumerate_subgroups(G))


def _enumerate_subgroups(G: PermGroup) -> list[SubgroupHandle]:
    orders = G.orders
    seen_cyclic: set[bytes] = set()
    adjoin: list[int] = []
    for x in range(1, G.order):
        o = int(orders[x])
        if len(prime_factors(o)) != 1:
            continue
        cyc = _closure(G, [x])
        key = np.flatnonzero(cyc).tobytes()
        if key not in seen_cyclic:
            seen_cyclic.add(key)
            adjoin.append(x)
    triv = trivial_subgroup(G)
    found: dict[bytes, SubgroupHandle] = {triv.key: triv}
    layer = [triv]
    while layer:
        nxt: dict[bytes, SubgroupHandle] = {}
        for H in layer:
            for x in adjoin:
                if H.mask[x]:
                    continue
                mask = _closure(G, list(H.generators) + [x], H.mask)
                key = np.flatnonzero(mask).tobytes()
                if key in found or key in nxt:
                    continue
                nxt[key] = SubgroupHandle(G, sorted(H.generators + (x,)), np.flatnonzero(mask))
        found.update(nxt)
        layer = list(nxt.values())
    return sorted(found.values(), key=sort_key)


__all__ = [
    "chief_factor_pairs",
    "chief_series",
    "enumerate_subgroups",
    "generated_subgroup",
    "is_chief_factor_abelian",
    "is_p_solvable",
    "minimal_normal_subgroups",
    "normal_subgroups",
]
