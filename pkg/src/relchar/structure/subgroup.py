"""Subgroups of a fixed parent group, stored as sorted member-id sets."""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from ..errors import NotASubgroupError
from ..group_core.permgroup import PermGroup


class SubgroupHandle:
    """A subgroup of ``parent``: generator ids plus the sorted member ids.

    Two handles are equal iff they have the same parent object and the same
    members.  Use :func:`generated_subgroup` rather than the constructor
    unless ``members`` is already known to be closed.
    """

    __slots__ = ("parent", "generators", "members", "mask", "_key", "_normal", "_group")

    def __init__(self, parent: PermGroup, generators: Iterable[int], members: np.ndarray):
        self.parent = parent
        self.generators = tuple(int(g) for g in generators)
        self.members = np.asarray(members, dtype=np.int64)
        mask = np.zeros(parent.order, dtype=bool)
        mask[self.members] = True
        self.mask = mask
        self._key = self.members.tobytes()
        self._normal: bool | None = None
        self._group: PermGroup | None = None

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return self.order

    @property
    def key(self) -> bytes:
        return self._key

    def __contains__(self, idx: int) -> bool:
        return bool(self.mask[idx])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubgroupHandle)
            and other.parent is self.parent
            and other._key == self._key
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self._key))

    def __le__(self, other: SubgroupHandle) -> bool:
        return self.order <= other.order and bool(np.all(other.mask[self.members]))

    def __lt__(self, other: SubgroupHandle) -> bool:
        return self.order < other.order and self <= other

    def contains_all(self, ids) -> bool:
        return bool(np.all(self.mask[np.asarray(ids, dtype=np.int64)]))

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def is_normal(self) -> bool:
        """Verified normality in the parent: ``g^-1 h g`` in H for generators g, h."""
        if self._normal is None:
            G = self.parent
            gens = np.array(G.generator_ids, dtype=np.int64)
            hs = np.array(self.generators or (0,), dtype=np.int64)
            if len(gens) == 0:
                self._normal = True
            else:
                conj = G.conj(hs[:, None], gens[None, :])
                self._normal = bool(np.all(self.mask[conj]))
        return self._normal

    def is_abelian(self) -> bool:
        G = self.parent
        gs = np.array(self.generators, dtype=np.int64)
        if len(gs) < 2:
            return True
        return bool(np.all(G.mul(gs[:, None], gs[None, :]) == G.mul(gs[None, :], gs[:, None])))

    def as_group(self) -> PermGroup:
        """This subgroup as a standalone :class:`PermGroup`.

        Its element ids are positions in ``members`` (both orders are
        lexicographic), and ``parent_ids`` maps them back.
        """
        if self._group is None:
            self._group = self.parent.cached(("as_group", self._key), self._build_group)
        return self._group

    def _build_group(self) -> PermGroup:
        G = self.parent
        gens = [G.perm(g) for g in self.generators]
        table = None
        full = G.table
        if full is not None:
            pos = np.full(G.order, -1, dtype=np.int32)
            pos[self.members] = np.arange(self.order, dtype=np.int32)
            table = pos[full[np.ix_(self.members, self.members)]]
        name = f"{G.name or 'G'}[{self.order}]"
        grp = PermGroup._from_sorted_elements(
            G.degree, gens, G.elements[self.members], name=name, table=table
        )
        grp.parent_ids = self.members
        grp.parent_group = G
        return grp

    def local_ids(self, parent_ids) -> np.ndarray:
        """Translate parent ids of members into ids of :meth:`as_group`."""
        return np.searchsorted(self.members, parent_ids)

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.parent!r}>"


def whole_group(G: PermGroup) -> SubgroupHandle:
    return G.cached("whole", lambda: SubgroupHandle(G, G.generator_ids, np.arange(G.order)))


def trivial_subgroup(G: PermGroup) -> SubgroupHandle:
    return G.cached("trivial", lambda: SubgroupHandle(G, (), np.zeros(1, dtype=np.int64)))


def as_handle(X: PermGroup | SubgroupHandle) -> SubgroupHandle:
    return whole_group(X) if isinstance(X, PermGroup) else X


def _closure(G: PermGroup, gens: list[int], start: np.ndarray | None = None) -> np.ndarray:
    """Member mask of the subgroup generated by ``gens`` (plus a known subgroup mask)."""
    mask = np.zeros(G.order, dtype=bool) if start is None else start.copy()
    mask[0] = True
    frontier = np.flatnonzero(mask)
    g_arr = np.array(gens, dtype=np.int64)
    if len(g_arr) == 0:
        return mask
    # right-multiplying by generators closes any finite subgroup
    while len(frontier):
        prod = np.asarray(G.mul(frontier[:, None], g_arr[None, :])).ravel()
        prod = np.unique(prod)
        new = prod[~mask[prod]]
        mask[new] = True
        frontier = new
    return mask


def generated_subgroup(G: PermGroup, seeds: Iterable[int]) -> SubgroupHandle:
    """Smallest subgroup of ``G`` containing the seed ids."""
    seeds = [int(s) for s in seeds]
    for s in seeds:
        if not 0 <= s < G.order:
            raise NotASubgroupError(f"invalid element id {s}")
    gens = sorted({s for s in seeds if s != 0})
    return SubgroupHandle(G, gens, np.flatnonzero(_closure(G, gens)))


def subgroup_from_mask(G: PermGroup, mask: np.ndarray, generators: Iterable[int] | None = None) -> SubgroupHandle:
    """Handle for a member set already known to be a subgroup."""
    members = np.flatnonzero(mask)
    gens = list(generators) if generators is not None else _small_generating_set(G, members)
    return SubgroupHandle(G, gens, members)


def _small_generating_set(G: PermGroup, members: np.ndarray) -> list[int]:
    """Greedy generating set: add the first member not yet generated."""
    have = np.zeros(G.order, dtype=bool)
    have[0] = True
    gens: list[int] = []
    count = len(members)
    # prefer elements of large order: fewer generators
    orders = G.orders[members]
    ranked = members[np.lexsort((members, -orders))]
    for x in ranked:
        if have.sum() == count:
            break
        if not have[x]:
            gens.append(int(x))
            have = _closure(G, gens, have)
    return sorted(gens)


def join(*subs: SubgroupHandle) -> SubgroupHandle:
    G = subs[0].parent
    mask = subs[0].mask.copy()
    gens = list(subs[0].generators)
    for H in subs[1:]:
        extra = [g for g in H.generators if not mask[g]]
        if extra:
            gens.extend(extra)
            mask = _closure(G, gens, mask)
    return SubgroupHandle(G, sorted(set(gens)), np.flatnonzero(mask))


def intersection(A: SubgroupHandle, B: SubgroupHandle) -> SubgroupHandle:
    return subgroup_from_mask(A.parent, A.mask & B.mask)


def conjugate_mask(H: SubgroupHandle, g: int) -> np.ndarray:
    G = H.parent
    mask = np.zeros(G.order, dtype=bool)
    mask[G.conj(H.members, g)] = True
    return mask


def normal_closure(G: PermGroup | SubgroupHandle, seeds: Iterable[int], within: SubgroupHandle | None = None) -> SubgroupHandle:
    """Smallest subgroup containing ``seeds`` and normalised by ``within`` (default: all of G).

    ``G`` may be a handle, in which case conjugation runs over its generators.
    """
    if isinstance(G, SubgroupHandle):
        within = G if within is None else within
        G = G.parent
    conjugators = np.array((within.generators if within is not None else G.generator_ids), dtype=np.int64)
    H = generated_subgroup(G, seeds)
    mask = H.mask.copy()
    gens = list(H.generators)
    if len(conjugators) == 0 or not gens:
        if within is None:
            H._normal = True
        return H
    pending = list(gens)
    while pending:
        c = np.unique(np.asarray(G.conj(np.array(pending)[:, None], conjugators[None, :])).ravel())
        pending = []
        for x in c:
            if not mask[x]:
                gens.append(int(x))
                pending.append(int(x))
                mask = _closure(G, gens, mask)
    out = SubgroupHandle(G, sorted(gens), np.flatnonzero(mask))
    if within is None:
        out._normal = True
    return out
