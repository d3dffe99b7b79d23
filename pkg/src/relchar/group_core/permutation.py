"""Dense permutations on the points ``1..degree``."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import lcm

from ..errors import GroupFormatError, NotABijectionError


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..degree}`` stored as its 1-based image array.

    Products compose left to right: ``(p * q)(i) == q(p(i))``.
    """

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int], *, row: int = 0):
        imgs = tuple(int(i) for i in images)
        seen = [False] * (len(imgs) + 1)
        for point in imgs:
            if not 1 <= point <= len(imgs):
                raise GroupFormatError(f"generator row {row}: point {point} outside 1..{len(imgs)}")
            if seen[point]:
                raise NotABijectionError(row, point)
            seen[point] = True
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        images = list(range(1, degree + 1))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(other.images[i - 1] for i in self.images)

    def __pow__(self, k: int) -> Permutation:
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        done = [False] * (self.degree + 1)
        out = []
        for start in range(1, self.degree + 1):
            if done[start]:
                continue
            cycle = [start]
            done[start] = True
            nxt = self.images[start - 1]
            while nxt != start:
                cycle.append(nxt)
                done[nxt] = True
                nxt = self.images[nxt - 1]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return element_order(self)

    def __repr__(self) -> str:
        cyc = self.cycles()
        body = "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Permutation{body}[{self.degree}]"


def element_order(g: Permutation) -> int:
    """Least n >= 1 with g**n the identity: the lcm of the cycle lengths."""
    return lcm(1, *(len(c) for c in g.cycles()))
