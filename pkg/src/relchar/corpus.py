"""The built-in group corpus."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GroupFormatError, ImplementationDefect, UnknownGroupError
from .group_core.builtins import CATALOG, builtin_group, product_of_builtins
from .group_core.permgroup import PermGroup
from .structure.subgroup import SubgroupHandle, generated_subgroup


@dataclass(frozen=True)
class CorpusEntry:
    """How to build one corpus group and what it should look like."""

    key: str
    parts: tuple[tuple[str, tuple[int, ...]], ...]
    order: int
    provenance: str = ""
    tags: tuple[str, ...] = field(default=())

    @property
    def constructor(self) -> str:
        return " x ".join(n + (f"({','.join(map(str, p))})" if p else "") for n, p in self.parts)

    def build(self) -> PermGroup:
        if len(self.parts) == 1:
            name, params = self.parts[0]
            G = builtin_group(name, params)
        else:
            G = product_of_builtins(self.parts, self.key)
        G.name = self.key
        if G.order != self.order:
            raise ImplementationDefect(f"corpus entry {self.key}: order {G.order}, expected {self.order}")
        if tuple(G.tagged_normals) != self.tags:
            raise ImplementationDefect(f"corpus entry {self.key}: tags {tuple(G.tagged_normals)}")
        for tag, N in tagged_normals(G).items():
            if not N.is_normal():
                raise ImplementationDefect(f"corpus entry {self.key}: tagged subgroup {tag} is not normal")
        return G


def tagged_normals(G: PermGroup) -> dict[str, SubgroupHandle]:
    return {
        tag: G.cached(("tag", tag), lambda gens=gens: generated_subgroup(G, [G.index_of(g) for g in gens]))
        for tag, gens in G.tagged_normals.items()
    }


def _single(key: str, name: str, params: tuple[int, ...], order: int, note: str, tags=()) -> CorpusEntry:
    return CorpusEntry(key, ((name, params),), order, note, tuple(tags))


def builtin_corpus() -> list[CorpusEntry]:
    out = [_single("trivial", "trivial", (), 1, "edge case")]
    out += [_single(f"c{n}", "cyclic", (n,), n, "cyclic") for n in range(2, 13)]
    out += [_single(f"d{2 * n}", "dihedral", (n,), 2 * n, "dihedral of order 2n") for n in range(2, 17)]
    out += [_single(f"q{m}", "quaternion", (m,), m, "generalized quaternion") for m in (8, 16, 32)]
    out += [
        _single(f"elab_{p ** k}", "elementary_abelian", (p, k), p**k, "elementary abelian")
        for p, k in ((2, 2), (2, 3), (3, 2), (2, 4), (5, 2))
    ]
    out += [_single(f"s{n}", "symmetric", (n,), _fact(n), "symmetric") for n in range(3, 7)]
    out += [_single(f"a{n}", "alternating", (n,), _fact(n) // 2, "alternating") for n in (4, 5)]
    out += [
        _single("sl23", "sl23", (), 24, "SL(2,3) on the nonzero vectors of F_3^2", ("q8", "z")),
        _single("gl23", "gl23", (), 48, "GL(2,3), the worked example with N = SL(2,3)", ("sl23", "q8", "z")),
        _single("heis27", "extraspecial27", (), 27, "extraspecial of order 27, exponent 3"),
        _single("berger216", "berger216", (), 216, "Q8 acting faithfully on 3^(1+2)", ("n27",)),
    ]
    out += [_single(f"agl1_{p}", "agl1", (p,), p * (p - 1), "Frobenius group AGL(1,p)") for p in (5, 7, 11, 13)]
    out += [
        CorpusEntry("s3xs3", (("symmetric", (3,)), ("symmetric", (3,))), 36, "direct product"),
        CorpusEntry("q8xc3", (("quaternion", (8,)), ("cyclic", (3,))), 24, "direct product"),
        _single("c3wrc2", "wreath_cyclic", (3, 2), 18, "wreath product"),
    ]
    return out


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def corpus_entry(key: str) -> CorpusEntry:
    for e in builtin_corpus():
        if e.key == key:
            return e
    raise UnknownGroupError(f"unknown corpus entry {key!r}")


def resolve_builtin(spec: str) -> list[CorpusEntry]:
    """``all``, a corpus key such as ``gl23``, or a constructor call such as ``dihedral:8``."""
    if spec == "all":
        return builtin_corpus()
    if ":" not in spec:
        try:
            return [corpus_entry(spec)]
        except UnknownGroupError:
            if spec in CATALOG and CATALOG[spec][1] == 0:
                G = builtin_group(spec)
                return [_single(spec, spec, (), G.order, "catalog", tuple(G.tagged_normals))]
            raise
    name, _, raw = spec.partition(":")
    try:
        params = tuple(int(x) for x in raw.split(",") if x.strip())
    except ValueError:
        raise GroupFormatError(f"bad parameters in {spec!r}") from None
    G = builtin_group(name, params)
    return [_single(spec, name, params, G.order, "catalog", tuple(G.tagged_normals))]


__all__ = ["CorpusEntry", "builtin_corpus", "corpus_entry", "resolve_builtin", "tagged_normals"]
