"""Conjugacy classes, power maps and class multiplication coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import config
from ..errors import GuardExceeded
from ..group_core.permgroup import PermGroup


@dataclass(eq=False)
class ClassData:
    """Conjugacy classes of a group, ordered by their least element id."""

    group: PermGroup
    classes: tuple[np.ndarray, ...]
    representatives: tuple[int, ...]
    sizes: tuple[int, ...]
    class_of: np.ndarray
    element_orders: tuple[int, ...]
    inverse_map: tuple[int, ...]
    power_maps: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def exponent(self) -> int:
        return int(np.lcm.reduce(np.array(self.element_orders))) if self.element_orders else 1

    def centralizer_order(self, k: int) -> int:
        return self.order // self.sizes[k]

    def power_class(self, k: int, m: int) -> int:
        """Class of ``g_k ** m``."""
        G = self.group
        return int(self.class_of[G.power(self.representatives[k], m)])

    def power_orbit(self, k: int) -> list[int]:
        """Classes of ``g^0, g^1, ..., g^(n-1)`` for ``g`` the representative of class k."""
        return self.group.cached(("power_orbit", k), lambda: self._power_orbit(k))

    def _power_orbit(self, k: int) -> list[int]:
        G = self.group
        g = self.representatives[k]
        out = []
        x = 0
        for _ in range(self.element_orders[k]):
            out.append(int(self.class_of[x]))
            x = G.mul(x, g)
        return out

    def class_mult_coefficient(self, i: int, j: int, k: int) -> int:
        return int(class_mult_matrix(self, k)[i, j])


def conjugacy_classes(G: PermGroup) -> ClassData:
    """Classes by orbit closure under conjugation by the generators."""
    return G.cached("classes", lambda: _conjugacy_classes(G))


def _conjugacy_classes(G: PermGroup) -> ClassData:
    guard = config.current().character_table
    if G.order > max(guard, config.current().enumeration):
        raise GuardExceeded("conjugacy classes", guard, G.order)
    n = G.order
    ids = np.arange(n)
    conj_maps = [np.asarray(G.conj(ids, g)) for g in G.generator_ids]
    label = np.full(n, -1, dtype=np.int64)
    classes = []
    for x in range(n):
        if label[x] >= 0:
            continue
        c = len(classes)
        label[x] = c
        members = [x]
        frontier = np.array([x])
        while len(frontier):
            new = []
            for cm in conj_maps:
                img = cm[frontier]
                fresh = np.unique(img[label[img] < 0])
                label[fresh] = c
                new.append(fresh)
            frontier = np.concatenate(new) if new else frontier[:0]
            members.extend(frontier.tolist())
        classes.append(np.array(sorted(members), dtype=np.int64))
    reps = tuple(int(c[0]) for c in classes)
    orders = tuple(int(G.orders[r]) for r in reps)
    inverse_map = tuple(int(label[G.inv(r)]) for r in reps)
    cd = ClassData(
        group=G,
        classes=tuple(classes),
        representatives=reps,
        sizes=tuple(len(c) for c in classes),
        class_of=label,
        element_orders=orders,
        inverse_map=inverse_map,
    )
    exponent = cd.exponent
    for q in range(2, exponent + 1):
        if all(q % d for d in range(2, int(q**0.5) + 1)):
            cd.power_maps[q] = tuple(int(label[G.power(r, q)]) for r in reps)
    return cd


def class_mult_matrix(cd: ClassData, k: int) -> np.ndarray:
    """``M[i, j] = a_ijk``: pairs ``(x, y)`` in ``C_i x C_j`` with ``xy = z_k``."""
    return cd.group.cached(("class_mult", k), lambda: _class_mult_matrix(cd, k))


def _class_mult_matrix(cd: ClassData, k: int) -> np.ndarray:
    G = cd.group
    r = len(cd)
    z = cd.representatives[k]
    xs = np.arange(G.order)
    ys = G.mul(G.inv(xs), z)
    out = np.zeros((r, r), dtype=np.int64)
    np.add.at(out, (cd.class_of[xs], cd.class_of[ys]), 1)
    return out


def class_mult_coefficient(cd: ClassData, i: int, j: int, k: int) -> int:
    return cd.class_mult_coefficient(i, j, k)


def class_fusion(sub: ClassData, parent: ClassData) -> tuple[int, ...]:
    """Parent class of each class of a subgroup built by ``SubgroupHandle.as_group``."""
    ids = sub.group.parent_ids
    if ids is None:
        raise ValueError("group was not cut out of a parent")
    return tuple(int(parent.class_of[ids[r]]) for r in sub.representatives)
