"""Operations on characters: restriction, induction, kernels, determinants, inertia."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from ..errors import ImplementationDefect, NotASubgroupError, NotNormalError
from ..group_core.permgroup import PermGroup
from ..group_core.quotient import Epimorphism
from ..structure.subgroup import SubgroupHandle, as_handle, normal_closure, subgroup_from_mask
from .classes import class_fusion, conjugacy_classes
from .cyclotomic import CyclotomicValue, DenseAccumulator, common_conductor, from_dense
from .dixon import character_table
from .table import Character, CharacterTable, ClassFunction, inner_products

# Above this order induction uses the class-fusion formula instead of summing over G.
BRUTE_INDUCTION_LIMIT = 2000


def group_of(H: PermGroup | SubgroupHandle) -> PermGroup:
    """The group whose classes carry characters of ``H``: the parent itself for whole handles."""
    if isinstance(H, PermGroup):
        return H
    return H.parent if H.is_whole() else H.as_group()


def table_of(H: PermGroup | SubgroupHandle) -> CharacterTable:
    return character_table(group_of(H))


def _handle_in_parent(sub: PermGroup) -> SubgroupHandle:
    """Rebuild the handle for a group made by ``SubgroupHandle.as_group``."""
    parent = sub.parent_group
    if parent is None:
        raise NotASubgroupError("group was not cut out of a parent")
    gens = sub.parent_ids[list(sub.generator_ids)] if sub.generators else []
    return SubgroupHandle(parent, gens, sub.parent_ids)


def _fusion(sub_group: PermGroup, G: PermGroup) -> tuple[int, ...]:
    if sub_group is G:
        return tuple(range(len(conjugacy_classes(G))))
    if sub_group.parent_group is not G:
        raise NotASubgroupError("class function does not live on a subgroup of this group")
    return class_fusion(conjugacy_classes(sub_group), conjugacy_classes(G))


# -- restriction and decomposition ----------------------------------------------


def restrict(chi: ClassFunction, H: SubgroupHandle) -> ClassFunction:
    """``chi`` restricted to ``H`` (a class function on :func:`group_of` ``H``)."""
    if H.parent is not chi.group:
        raise NotASubgroupError("subgroup belongs to a different group")
    target = group_of(H)
    fusion = _fusion(target, chi.group)
    return ClassFunction(conjugacy_classes(target), [chi.values[k] for k in fusion])


def constituents(f: ClassFunction) -> list[tuple[Character, int | Fraction]]:
    """Irreducible constituents of ``f`` with nonzero multiplicity, in row order."""
    table = character_table(f.group)
    mults = inner_products([f], list(table.rows))[0]
    out = []
    for row, m in zip(table.rows, mults):
        if isinstance(m, CyclotomicValue):
            raise ValueError("class function has a non-rational multiplicity")
        if m != 0:
            out.append((row, m))
    if all(isinstance(m, int) and m > 0 for _, m in out) and f.values[0].is_rational():
        if sum(m * row.degree for row, m in out) != f.values[0].to_fraction():
            raise ImplementationDefect("constituent degrees do not add up to f(1)")
    return out


def constituent_degrees(chi: Character, H: SubgroupHandle) -> list[int]:
    """Sorted distinct degrees of the irreducible constituents of ``chi_H``.

    For normal ``H`` all constituents have one degree (Clifford); a violation
    is reported as a defect.
    """
    key = ("constituent_degrees", chi.index, H.key)
    G = chi.group

    def build() -> list[int]:
        degs = sorted({row.degree for row, _ in constituents(restrict(chi, H))})
        if H.is_normal() and len(degs) > 1:
            raise ImplementationDefect(f"Clifford degree equality fails on a normal subgroup: {degs}")
        return degs

    if chi.table is not character_table(G):
        return build()
    return G.cached(key, build)


# -- induction ---------------------------------------------------------------------


def induce(theta: ClassFunction, G: PermGroup, method: str = "auto") -> ClassFunction:
    """``theta^G`` for a class function on a subgroup group of ``G``.

    ``method`` is ``"brute"`` (sum over all of G), ``"fusion"`` (class-fusion
    formula) or ``"auto"`` (brute up to :data:`BRUTE_INDUCTION_LIMIT`).
    """
    H = theta.group
    if H is G:
        return theta
    if H.parent_group is not G:
        raise NotASubgroupError("class function does not live on a subgroup of this group")
    if method == "auto":
        method = "brute" if G.order <= BRUTE_INDUCTION_LIMIT else "fusion"
    if method == "brute":
        return _induce_brute(theta, G)
    if method == "fusion":
        return _induce_fusion(theta, G)
    raise ValueError(f"unknown induction method {method!r}")


def _induce_brute(theta: ClassFunction, G: PermGroup) -> ClassFunction:
    H = theta.group
    Hcd = theta.classes
    Gcd = conjugacy_classes(G)
    members = H.parent_ids
    mask = np.zeros(G.order, dtype=bool)
    mask[members] = True
    ids = np.arange(G.order)
    L = common_conductor(theta.values)
    values = []
    for g in Gcd.representatives:
        ys = np.asarray(G.conj(g, ids))  # x^-1 g x over all x
        inside = ys[mask[ys]]
        if len(inside) == 0:
            values.append(CyclotomicValue(0))
            continue
        local = np.searchsorted(members, inside)
        counts = np.bincount(Hcd.class_of[local], minlength=len(Hcd))
        acc = DenseAccumulator(L)
        for c in np.flatnonzero(counts):
            acc.add(theta.values[c], Fraction(int(counts[c]), H.order))
        values.append(acc.value())
    return ClassFunction(Gcd, values)


def _induce_fusion(theta: ClassFunction, G: PermGroup) -> ClassFunction:
    H = theta.group
    Hcd = theta.classes
    Gcd = conjugacy_classes(G)
    fusion = class_fusion(Hcd, Gcd)
    L = common_conductor(theta.values)
    accs = [DenseAccumulator(L) for _ in range(len(Gcd))]
    touched = [False] * len(Gcd)
    for c, k in enumerate(fusion):
        w = Fraction(G.order * Hcd.sizes[c], Gcd.sizes[k] * H.order)
        accs[k].add(theta.values[c], w)
        touched[k] = True
    return ClassFunction(Gcd, [a.value() if t else CyclotomicValue(0) for a, t in zip(accs, touched)])


# -- kernels and vanishing-off subgroups ---------------------------------------------


def _union_mask(cd, ks) -> np.ndarray:
    mask = np.zeros(cd.order, dtype=bool)
    for k in ks:
        mask[cd.classes[k]] = True
    return mask


def kernel_of(chi: ClassFunction) -> SubgroupHandle:
    """``{g : chi(g) = chi(1)}`` as a normal subgroup."""
    G = chi.group
    deg = chi.values[0]
    key = ("kernel", chi.values)

    def build() -> SubgroupHandle:
        ks = [k for k, v in enumerate(chi.values) if v == deg]
        K = subgroup_from_mask(G, _union_mask(chi.classes, ks))
        if not K.is_normal():
            raise ImplementationDefect("kernel is not normal")
        return K

    return G.cached(key, build)


def vanishing_off(chi: ClassFunction) -> SubgroupHandle:
    """``V(chi)``: generated by the elements where ``chi`` does not vanish."""
    G = chi.group
    key = ("vanishing_off", chi.values)

    def build() -> SubgroupHandle:
        cd = chi.classes
        reps = [cd.representatives[k] for k, v in enumerate(chi.values) if not v.is_zero()]
        V = normal_closure(G, reps)
        if not kernel_of(chi) <= V:
            raise ImplementationDefect("kernel is not contained in the vanishing-off subgroup")
        return V

    return G.cached(key, build)


# -- determinantal order ----------------------------------------------------------------


def eigenvalue_multiplicities(chi: ClassFunction, k: int) -> list[int]:
    """Multiplicity of ``z_n^j`` as an eigenvalue of a representation affording ``chi`` at ``g_k``."""
    cd = chi.classes
    n = cd.element_orders[k]
    orbit = cd.power_orbit(k)
    D = np.zeros((n, n), dtype=object)
    den = 1
    for l, c in enumerate(orbit):
        num, d = chi.values[c].dense(n)
        if d != 1:
            raise ImplementationDefect("character value is not an algebraic integer")
        D[l] = num
    j = np.arange(n)
    idx = (j[None, None, :] + j[:, None, None] * j[None, :, None]) % n  # [jj, l, t]
    S = D[j[None, :, None], idx].sum(axis=1)  # S[jj, t] = sum_l D[l, t + jj*l]
    out = []
    for jj in range(n):
        m = from_dense(np.array(S[jj], dtype=object), n * den, n)
        if not m.is_integer() or int(m) < 0:
            raise ImplementationDefect(f"non-integral eigenvalue multiplicity {m}")
        out.append(int(m))
    return out


def det_order(chi: Character) -> tuple[Character, int]:
    """Determinant character ``lambda`` of ``chi`` and its order ``o(chi)``."""
    table = chi.table
    cd = chi.classes
    vals = []
    o = 1
    for k in range(len(cd)):
        n = cd.element_orders[k]
        m = eigenvalue_multiplicities(chi, k)
        s = sum(j * mj for j, mj in enumerate(m)) % n
        vals.append(CyclotomicValue.root_of_unity(n, s))
        o = math.lcm(o, n // math.gcd(n, s))
    lam = table.find_row(ClassFunction(cd, vals))
    if lam is None or lam.degree != 1:
        raise ImplementationDefect("determinant is not a linear character of the table")
    return lam, o


# -- inertia, lifting, products --------------------------------------------------------


def conjugation_action_on_classes(G: PermGroup, N: SubgroupHandle) -> np.ndarray:
    """``M[c, g]`` = class (of :func:`group_of` ``N``) of ``g^-1 h_c g``."""
    key = ("class_action", N.key)

    def build() -> np.ndarray:
        Ng = group_of(N)
        Ncd = conjugacy_classes(Ng)
        ids = np.arange(G.order)
        members = N.members
        rows = []
        for rep in Ncd.representatives:
            h = int(members[rep]) if Ng is not G else rep
            conj = np.asarray(G.conj(h, ids))
            local = np.searchsorted(members, conj) if Ng is not G else conj
            rows.append(Ncd.class_of[local])
        return np.array(rows, dtype=np.int64)

    return G.cached(key, build)


def inertia_group(G: PermGroup, N: SubgroupHandle, theta: ClassFunction) -> SubgroupHandle:
    """Stabiliser in ``G`` of a class function ``theta`` of the normal subgroup ``N``."""
    if N.parent is not G:
        raise NotASubgroupError("normal subgroup belongs to a different group")
    if not N.is_normal():
        raise NotNormalError("inertia group needs a normal subgroup")
    if theta.group is not group_of(N):
        raise ValueError("theta is not a class function of N")
    M = conjugation_action_on_classes(G, N)
    labels: dict[CyclotomicValue, int] = {}
    lab = np.array([labels.setdefault(v, len(labels)) for v in theta.values], dtype=np.int64)
    stable = np.all(lab[M] == lab[:, None], axis=0)
    T = subgroup_from_mask(G, stable)
    if not N <= T:
        raise ImplementationDefect("inertia group does not contain N")
    return T


def conjugate_by(theta: ClassFunction, G: PermGroup, N: SubgroupHandle, g: int) -> ClassFunction:
    """``theta^g`` with ``theta^g(h) = theta(g h g^-1)``."""
    M = conjugation_action_on_classes(G, N)
    # M[c, g^-1] is the class of g h_c g^-1
    ginv = G.inv(g)
    return ClassFunction(theta.classes, [theta.values[M[c, ginv]] for c in range(len(theta.values))])


def lift_character(chibar: ClassFunction, phi: Epimorphism) -> Character:
    """Inflate a character of ``phi.target`` to ``phi.source`` and find its row."""
    if chibar.group is not phi.target:
        raise ValueError("character does not live on the epimorphism's target")
    src = character_table(phi.source)
    cd = src.class_data
    vals = [chibar.at(phi(rep)) for rep in cd.representatives]
    row = src.find_row(ClassFunction(cd, vals))
    if row is None:
        raise ImplementationDefect("inflated character is not irreducible")
    return row


def product(chi: ClassFunction, psi: ClassFunction) -> ClassFunction:
    return chi * psi


def conjugate(chi: Character) -> Character:
    row = chi.table.find_row(chi.conjugate())
    if row is None:
        raise ImplementationDefect("complex conjugate of a row is not a row")
    return row


def orbit_size(G: PermGroup, N: SubgroupHandle, theta: ClassFunction) -> int:
    """Number of distinct ``G``-conjugates of ``theta``."""
    M = conjugation_action_on_classes(G, N)
    seen = {tuple(theta.values[M[c, g]] for c in range(len(theta.values))) for g in range(G.order)}
    return len(seen)


def is_invariant(G: PermGroup, N: SubgroupHandle, theta: ClassFunction) -> bool:
    return inertia_group(G, N, theta).is_whole()


def regular_decomposition_ok(table: CharacterTable) -> bool:
    """``[rho, chi] = chi(1)`` for the regular character ``rho``."""
    mults = inner_products([table.regular_character()], list(table.rows))[0]
    return all(m == row.degree for m, row in zip(mults, table.rows))


__all__ = [
    "constituent_degrees",
    "constituents",
    "conjugate",
    "det_order",
    "group_of",
    "induce",
    "inertia_group",
    "is_invariant",
    "conjugate_by",
    "conjugation_action_on_classes",
    "eigenvalue_multiplicities",
    "orbit_size",
    "regular_decomposition_ok",
    "kernel_of",
    "lift_character",
    "product",
    "restrict",
    "table_of",
    "vanishing_off",
]
