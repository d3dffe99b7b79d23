"""Coset actions and epimorphisms between permutation groups."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import config
from ..errors import GuardExceeded, NotASubgroupError
from ..structure.subgroup import SubgroupHandle, as_handle, subgroup_from_mask
from .permgroup import PermGroup
from .permutation import Permutation


@dataclass(eq=False)
class Epimorphism:
    """A surjective homomorphism given by its action on element ids."""

    source: PermGroup
    target: PermGroup
    image_of: np.ndarray
    kernel: SubgroupHandle

    def __call__(self, x):
        res = self.image_of[x]
        return int(res) if np.ndim(res) == 0 else res

    def image(self, H: SubgroupHandle) -> SubgroupHandle:
        from ..structure.subgroup import generated_subgroup

        return generated_subgroup(self.target, self.image_of[list(H.generators)])

    def preimage(self, H: SubgroupHandle) -> SubgroupHandle:
        mask = H.mask[self.image_of]
        return subgroup_from_mask(self.source, mask)

    def check_homomorphism(self) -> bool:
        """Exhaustive check of ``f(xy) = f(x) f(y)``."""
        S, T = self.source, self.target
        ids = np.arange(S.order)
        lhs = self.image_of[S.mul(ids[:, None], ids[None, :])]
        rhs = T.mul(self.image_of[:, None], self.image_of[None, :])
        return bool(np.array_equal(lhs, rhs))


def right_cosets(G: PermGroup, H: SubgroupHandle) -> tuple[np.ndarray, np.ndarray]:
    """Label every element by its right coset ``Hx``; cosets ordered by least member.

    Returns ``(labels, representatives)``.
    """
    labels = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for x in range(G.order):
        if labels[x] < 0:
            labels[G.mul(H.members, x)] = len(reps)
            reps.append(x)
    return labels, np.array(reps, dtype=np.int64)


def coset_action(G: PermGroup | SubgroupHandle, H: SubgroupHandle) -> tuple[PermGroup, Epimorphism]:
    """Action of ``G`` on the right cosets of ``H`` by right multiplication.

    ``G`` may also be a handle whose parent contains ``H``; the action is
    then that of the subgroup (converted with :meth:`SubgroupHandle.as_group`).
    When ``H`` is normal the image is a faithful model of ``G/H``.
    """
    if isinstance(G, SubgroupHandle) and G.is_whole():
        G = G.parent
    if isinstance(G, SubgroupHandle):
        ambient = G
        G = ambient.as_group()
        if not bool(np.all(ambient.mask[H.members])):
            raise NotASubgroupError("subgroup is not contained in the acting group")
        H = subgroup_from_mask(G, np.isin(ambient.members, H.members), ambient.local_ids(np.array(H.generators, dtype=np.int64)))
    if H.parent is not G:
        raise NotASubgroupError("subgroup belongs to a different group")
    index = G.order // H.order
    guard = config.current().enumeration
    if index > guard:
        raise GuardExceeded("coset enumeration", guard, index)
    labels, reps = right_cosets(G, H)
    # action[x, c] = label of (rep_c * x)
    ids = np.arange(G.order)
    action = labels[G.mul(reps[None, :], ids[:, None])]
    gens = [Permutation(action[g] + 1) for g in G.generator_ids]
    name = f"{G.name or 'G'}/{H.order}"
    Q = PermGroup(max(1, index), gens, name=name)
    dtype = Q.elements.dtype
    image_of = Q.lookup_rows(action.astype(dtype))
    kernel = subgroup_from_mask(G, image_of == 0)
    return Q, Epimorphism(G, Q, image_of, kernel)


def quotient(G: PermGroup, N: SubgroupHandle) -> tuple[PermGroup, Epimorphism]:
    """``G/N`` for a normal subgroup, cached per ``N``."""
    N = as_handle(N)
    return G.cached(("quotient", N.key), lambda: coset_action(G, N))
