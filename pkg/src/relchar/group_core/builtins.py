"""Named permutation groups used by the corpus and the CLI."""

from __future__ import annotations

from collections.abc import Callable, Sequence

from ..errors import GroupFormatError, UnknownGroupError
from .permgroup import PermGroup
from .permutation import Permutation

Matrix = tuple[tuple[int, int], tuple[int, int]]


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise GroupFormatError("cyclic group order must be at least 1")
    gens = [Permutation([*range(2, n + 1), 1])] if n > 1 else []
    return PermGroup(n, gens, name=f"C{n}")


def trivial() -> PermGroup:
    return PermGroup(1, [], name="trivial")


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order ``2n``."""
    if n < 1:
        raise GroupFormatError("dihedral parameter must be at least 1")
    if n == 1:
        return PermGroup(2, [Permutation([2, 1])], name="D2")
    if n == 2:
        return PermGroup(4, [Permutation([2, 1, 4, 3]), Permutation([3, 4, 1, 2])], name="D4")
    rot = Permutation([*range(2, n + 1), 1])
    refl = Permutation([1, *range(n, 1, -1)])
    return PermGroup(n, [rot, refl], name=f"D{2 * n}")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise GroupFormatError("symmetric group degree must be at least 1")
    if n == 1:
        return PermGroup(1, [], name="S1")
    gens = [Permutation([2, 1, *range(3, n + 1)])]
    if n > 2:
        gens.insert(0, Permutation([*range(2, n + 1), 1]))
    return PermGroup(n, gens, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise GroupFormatError("alternating group degree must be at least 1")
    if n < 3:
        return PermGroup(n, [], name=f"A{n}")
    gens = [Permutation.from_cycles(n, [(i, i + 1, i + 2)]) for i in range(1, n - 1)]
    return PermGroup(n, gens, name=f"A{n}")


def _regular(elements: Sequence, mul: Callable, gens: Sequence, name: str) -> PermGroup:
    """Right regular representation of an abstract group given by its elements."""
    pos = {e: i for i, e in enumerate(elements)}
    perms = [Permutation(pos[mul(e, g)] + 1 for e in elements) for g in gens]
    return PermGroup(len(elements), perms, name=name)


def quaternion(order: int) -> PermGroup:
    """Generalized quaternion group of order ``2^k >= 8`` (regular action)."""
    if order < 8 or order & (order - 1):
        raise GroupFormatError("quaternion order must be a power of 2, at least 8")
    m = order // 2
    elements = [(i, j) for j in (0, 1) for i in range(m)]

    def mul(x, y):
        i, j = x
        k, l = y
        if j == 0:
            return ((i + k) % m, l)
        if l == 0:
            return ((i - k) % m, 1)
        return ((i - k + m // 2) % m, 0)

    return _regular(elements, mul, [(1, 0), (0, 1)], name=f"Q{order}")


def elementary_abelian(p: int, k: int) -> PermGroup:
    """``(C_p)^k`` acting on ``k`` disjoint blocks of ``p`` points."""
    if p < 2 or k < 1:
        raise GroupFormatError("elementary abelian group needs p >= 2 and k >= 1")
    deg = p * k
    gens = []
    for b in range(k):
        cyc = tuple(range(b * p + 1, b * p + p + 1))
        gens.append(Permutation.from_cycles(deg, [cyc]))
    return PermGroup(deg, gens, name=f"{p}^{k}")


def direct_product(*groups: PermGroup, name: str | None = None) -> PermGroup:
    """Direct product acting on the disjoint union of the point sets."""
    deg = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            imgs = list(range(1, deg + 1))
            for i, img in enumerate(g.images):
                imgs[offset + i] = offset + img
            gens.append(Permutation(imgs))
        offset += G.degree
    label = name or "x".join(G.name or "?" for G in groups)
    return PermGroup(deg, gens, name=label)


def wreath_cyclic(n: int, m: int) -> PermGroup:
    """``C_n wr C_m`` in its imprimitive action on ``n*m`` points."""
    deg = n * m
    base = Permutation.from_cycles(deg, [tuple(range(1, n + 1))]) if n > 1 else None
    top = Permutation([((i + n) % deg) + 1 for i in range(deg)])
    gens = ([base] if base else []) + ([top] if m > 1 else [])
    return PermGroup(deg, gens, name=f"C{n}wrC{m}")


def affine_line(p: int) -> PermGroup:
    """``AGL(1, p)``: maps ``x -> ax + b`` on the field with ``p`` elements."""
    from ..structure.sylow import is_prime

    if not is_prime(p):
        raise GroupFormatError("AGL(1,p) needs a prime p")
    g = next(a for a in range(1, p) if len({pow(a, i, p) for i in range(p - 1)}) == p - 1) if p > 2 else 1
    shift = Permutation([(x + 1) % p + 1 for x in range(p)])
    gens = [shift]
    if p > 2:
        gens.append(Permutation([(g * x) % p + 1 for x in range(p)]))
    return PermGroup(p, gens, name=f"AGL(1,{p})")


# -- groups built from 2x2 matrices over F_3 ---------------------------------

F3_VECTORS = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]


def _mat_perm(M: Matrix) -> Permutation:
    """Right action ``v -> vM`` on the nonzero vectors of ``F_3^2``."""
    pos = {v: i for i, v in enumerate(F3_VECTORS)}
    imgs = []
    for x, y in F3_VECTORS:
        w = ((x * M[0][0] + y * M[1][0]) % 3, (x * M[0][1] + y * M[1][1]) % 3)
        imgs.append(pos[w] + 1)
    return Permutation(imgs)


SL23_GENS: list[Matrix] = [((1, 1), (0, 1)), ((1, 0), (1, 1))]
GL23_EXTRA: Matrix = ((2, 0), (0, 1))
Q8_GENS: list[Matrix] = [((0, 2), (1, 0)), ((1, 1), (1, 2))]
MINUS_ONE: Matrix = ((2, 0), (0, 2))


def sl23() -> PermGroup:
    return PermGroup(
        8,
        [_mat_perm(M) for M in SL23_GENS],
        name="SL(2,3)",
        tagged_normals={
            "q8": [_mat_perm(M) for M in Q8_GENS],
            "z": [_mat_perm(MINUS_ONE)],
        },
    )


def gl23() -> PermGroup:
    return PermGroup(
        8,
        [_mat_perm(M) for M in SL23_GENS + [GL23_EXTRA]],
        name="GL(2,3)",
        tagged_normals={
            "sl23": [_mat_perm(M) for M in SL23_GENS],
            "q8": [_mat_perm(M) for M in Q8_GENS],
            "z": [_mat_perm(MINUS_ONE)],
        },
    )


# -- the extraspecial group of order 27 and exponent 3 -------------------------
# Model: pairs (v, c) with v in F_3^2, c in F_3 and
#   (v, c)(w, d) = (v + w, c + d + 2*det(v, w)).
# The cocycle is alternating, so SL(2,3) = Sp(2,3) acts by (v, c) -> (vM, c).

HEIS = [((a, b), c) for a in range(3) for b in range(3) for c in range(3)]


def _heis_mul(x, y):
    (a, b), c = x
    (a2, b2), d = y
    return ((a + a2) % 3, (b + b2) % 3), (c + d + 2 * (a * b2 - b * a2)) % 3


def _heis_auto(M: Matrix):
    def f(x):
        (a, b), c = x
        return ((a * M[0][0] + b * M[1][0]) % 3, (a * M[0][1] + b * M[1][1]) % 3), c

    return f


def extraspecial27() -> PermGroup:
    G = _regular(HEIS, _heis_mul, [((1, 0), 0), ((0, 1), 0)], name="3^(1+2)")
    return G


def berger216() -> PermGroup:
    """``Q8`` acting faithfully on the extraspecial group of order 27, degree 27.

    The normal subgroup of order 27 acts by right translations; ``Q8`` acts
    by the symplectic automorphisms ``(v, c) -> (vM, c)``.
    """
    pos = {e: i for i, e in enumerate(HEIS)}
    translations = [
        Permutation(pos[_heis_mul(e, g)] + 1 for e in HEIS) for g in [((1, 0), 0), ((0, 1), 0)]
    ]
    autos = [Permutation(pos[_heis_auto(M)(e)] + 1 for e in HEIS) for M in Q8_GENS]
    return PermGroup(
        27,
        translations + autos,
        name="berger216",
        tagged_normals={"n27": translations},
    )


# -- catalog ------------------------------------------------------------------

CATALOG: dict[str, tuple[Callable[..., PermGroup], int]] = {
    "trivial": (trivial, 0),
    "cyclic": (cyclic, 1),
    "dihedral": (dihedral, 1),
    "quaternion": (quaternion, 1),
    "symmetric": (symmetric, 1),
    "alternating": (alternating, 1),
    "elementary_abelian": (elementary_abelian, 2),
    "agl1": (affine_line, 1),
    "wreath_cyclic": (wreath_cyclic, 2),
    "sl23": (sl23, 0),
    "gl23": (gl23, 0),
    "extraspecial27": (extraspecial27, 0),
    "berger216": (berger216, 0),
}


def builtin_group(name: str, params: Sequence[int] = ()) -> PermGroup:
    """Construct a catalog group, e.g. ``builtin_group("cyclic", [5])``."""
    try:
        ctor, arity = CATALOG[name]
    except KeyError:
        raise UnknownGroupError(f"unknown builtin group {name!r}") from None
    if len(params) != arity:
        raise GroupFormatError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


def product_of_builtins(parts: Sequence[tuple[str, Sequence[int]]], name: str) -> PermGroup:
    return direct_product(*(builtin_group(n, p) for n, p in parts), name=name)


__all__ = [
    "CATALOG",
    "affine_line",
    "alternating",
    "berger216",
    "builtin_group",
    "cyclic",
    "dihedral",
    "direct_product",
    "elementary_abelian",
    "extraspecial27",
    "gl23",
    "product_of_builtins",
    "quaternion",
    "sl23",
    "symmetric",
    "trivial",
    "wreath_cyclic",
]
