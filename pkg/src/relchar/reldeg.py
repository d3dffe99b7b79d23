"""Relative character sets Irr(G|N), degree sets cd(G|N) and reducing sections."""

from __future__ import annotations

from dataclasses import dataclass

from .characters.dixon import character_table
from .characters.ops import constituent_degrees, kernel_of
from .characters.table import Character, CharacterTable
from .errors import ImplementationDefect, NotASubgroupError, NotNormalError
from .group_core.permgroup import PermGroup
from .group_core.quotient import quotient
from .structure.lattice import chief_factor_pairs, is_chief_factor_abelian
from .structure.series import commutator_subgroup
from .structure.subgroup import SubgroupHandle
from .structure.sylow import is_p_power, prime_factors


@dataclass(frozen=True, eq=False)
class RelativeDegreeData:
    """``Irr(G|N)`` as row indices of the table of G, and its degree set."""

    table: CharacterTable
    normal: SubgroupHandle
    members: tuple[int, ...]
    degrees: tuple[int, ...]

    @property
    def min(self) -> int | None:
        return self.degrees[0] if self.degrees else None

    @property
    def max(self) -> int | None:
        return self.degrees[-1] if self.degrees else None

    @property
    def characters(self) -> list[Character]:
        return [self.table.rows[i] for i in self.members]

    def __len__(self) -> int:
        return len(self.degrees)

    def of_degree(self, d: int) -> list[Character]:
        return [chi for chi in self.characters if chi.degree == d]


def _require_normal(table: CharacterTable, *subs: SubgroupHandle) -> None:
    for H in subs:
        if H.parent is not table.group:
            raise NotASubgroupError("subgroup belongs to a different group")
        if not H.is_normal():
            raise NotNormalError("subgroup is not normal in the group")


def contains_in_kernel(chi: Character, N: SubgroupHandle) -> bool:
    return N <= kernel_of(chi)


def irr_rel(table: CharacterTable, N: SubgroupHandle) -> RelativeDegreeData:
    """Rows of ``table`` whose kernel does not contain ``N``."""
    _require_normal(table, N)
    G = table.group

    def build() -> RelativeDegreeData:
        members = tuple(chi.index for chi in table.rows if not contains_in_kernel(chi, N))
        degrees = tuple(sorted({table.rows[i].degree for i in members}))
        return RelativeDegreeData(table, N, members, degrees)

    return G.cached(("irr_rel", N.key), build)


def relative_degrees(G: PermGroup, N: SubgroupHandle) -> RelativeDegreeData:
    return irr_rel(character_table(G), N)


def cd_rel_mod(table: CharacterTable, N: SubgroupHandle, M: SubgroupHandle) -> tuple[int, ...]:
    """``cd(G/M | N/M)``: degrees of ``chi`` in Irr(G|N) with ``M`` inside ``ker chi``."""
    _require_normal(table, N, M)
    if not M <= N:
        raise NotASubgroupError("M must be contained in N")
    rel = irr_rel(table, N)
    return tuple(sorted({chi.degree for chi in rel.characters if contains_in_kernel(chi, M)}))


def cd_rel_quotient(G: PermGroup, N: SubgroupHandle, M: SubgroupHandle) -> tuple[int, ...]:
    """The same set computed on the character table of the coset-action model of ``G/M``."""
    if not M <= N:
        raise NotASubgroupError("M must be contained in N")
    Q, phi = quotient(G, M)
    Nbar = phi.image(N)
    Nbar._normal = None
    return relative_degrees(Q, Nbar).degrees


# -- reducing sections -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SectionRecord:
    """A chief factor ``X/Y`` of G inside N, seen through one character."""

    X: SubgroupHandle
    Y: SubgroupHandle
    abelian: bool
    p: int | None
    degree_on_X: int
    degree_on_Y: int
    central_in_N: bool

    @property
    def reducing(self) -> bool:
        return self.abelian and self.degree_on_Y < self.degree_on_X

    @property
    def exceptional(self) -> bool:
        return self.reducing and not self.central_in_N

    def to_json(self) -> dict:
        return {
            "X_order": self.X.order,
            "Y_order": self.Y.order,
            "abelian": self.abelian,
            "prime": self.p,
            "degree_on_X": self.degree_on_X,
            "degree_on_Y": self.degree_on_Y,
            "reducing": self.reducing,
            "central_in_N": self.central_in_N,
            "exceptional": self.exceptional,
        }


def section_central_in(N: SubgroupHandle, X: SubgroupHandle, Y: SubgroupHandle) -> bool:
    """``[X, N] <= Y``."""
    if not (Y < X and X <= N):
        raise NotASubgroupError("need Y < X <= N")
    return commutator_subgroup(X, N) <= Y


def reducing_sections(table: CharacterTable, N: SubgroupHandle, chi: Character) -> list[SectionRecord]:
    """Every chief factor ``X/Y`` of G with ``X <= N``, with constituent degrees of ``chi``.

    All pairs of normal subgroups are scanned, not just one chief series.
    """
    _require_normal(table, N)
    if chi.table is not table:
        raise ValueError("character is not a row of this table")
    if N <= kernel_of(chi):
        raise ValueError("character does not lie in Irr(G|N)")
    G = table.group
    out = []
    for Y, X in chief_factor_pairs(G, N):
        abelian = is_chief_factor_abelian(X, Y)
        size = X.order // Y.order
        primes = prime_factors(size)
        p = primes[0] if abelian else None
        if abelian and (len(primes) != 1 or not is_p_power(size, p)):
            raise ImplementationDefect("abelian chief factor is not a p-group")
        if chi.degree == 1:
            dX = dY = 1
        else:
            dX = constituent_degrees(chi, X)[0]
            dY = constituent_degrees(chi, Y)[0]
        if abelian and (dX % dY or not is_p_power(dX // dY, p)):
            raise ImplementationDefect("constituent degree ratio over a p-chief factor is not a p-power")
        out.append(SectionRecord(X, Y, abelian, p, dX, dY, section_central_in(N, X, Y)))
    return out


__all__ = [
    "RelativeDegreeData",
    "SectionRecord",
    "cd_rel_mod",
    "cd_rel_quotient",
    "contains_in_kernel",
    "irr_rel",
    "reducing_sections",
    "relative_degrees",
    "section_central_in",
]
