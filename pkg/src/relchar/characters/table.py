"""Class functions, characters and character tables."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from ..errors import ImplementationDefect
from ..group_core.permgroup import PermGroup
from .classes import ClassData
from .cyclotomic import ONE, ZERO, CyclotomicValue, Rational, _reduction_matrix, from_dense


class ClassFunction:
    """A function on the conjugacy classes of a group, with exact values."""

    __slots__ = ("classes", "values")

    def __init__(self, classes: ClassData, values: Sequence[CyclotomicValue | Rational]):
        if len(values) != len(classes):
            raise ValueError(f"expected {len(classes)} values, got {len(values)}")
        self.classes = classes
        self.values = tuple(v if isinstance(v, CyclotomicValue) else CyclotomicValue(v) for v in values)

    @property
    def group(self) -> PermGroup:
        return self.classes.group

    @property
    def degree_value(self) -> CyclotomicValue:
        return self.values[0]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> CyclotomicValue:
        return self.values[k]

    def __iter__(self) -> Iterator[CyclotomicValue]:
        return iter(self.values)

    def at(self, element: int) -> CyclotomicValue:
        """Value at an element id."""
        return self.values[int(self.classes.class_of[element])]

    def _check(self, other: ClassFunction) -> None:
        if other.classes is not self.classes:
            raise ValueError("class functions live on different class data")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.classes, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.classes, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.classes, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.classes, [v * other for v in self.values])

    __rmul__ = __mul__

    def conjugate(self) -> ClassFunction:
        return ClassFunction(self.classes, [v.conjugate() for v in self.values])

    def value_key(self) -> tuple[CyclotomicValue, ...]:
        return self.values

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return other.classes is self.classes and other.values == self.values

    def __hash__(self) -> int:
        return hash((id(self.classes), self.values))

    def __repr__(self) -> str:
        return f"ClassFunction([{', '.join(str(v) for v in self.values)}])"


class Character(ClassFunction):
    """An irreducible character: a row of a :class:`CharacterTable`."""

    __slots__ = ("table", "index", "degree")

    def __init__(self, table: CharacterTable, index: int, values: Sequence[CyclotomicValue]):
        super().__init__(table.class_data, values)
        self.table = table
        self.index = index
        d = self.values[0]
        if not d.is_integer() or int(d) < 1:
            raise ImplementationDefect(f"character degree {d} is not a positive integer")
        self.degree = int(d)

    def __repr__(self) -> str:
        return f"<Character {self.index} of degree {self.degree} on {self.group.name}>"

    __hash__ = ClassFunction.__hash__


class CharacterTable:
    """The irreducible characters of a group, rows sorted by degree then values."""

    def __init__(
        self,
        group: PermGroup,
        class_data: ClassData,
        rows: Sequence[Sequence[CyclotomicValue]],
        dixon_prime: int,
        exponent: int,
        root: int,
        modular_rows: np.ndarray | None = None,
    ):
        self.group = group
        self.class_data = class_data
        self.dixon_prime = dixon_prime
        self.exponent = exponent
        self.root = root
        self.modular_rows = modular_rows
        self.rows = tuple(Character(self, i, vals) for i, vals in enumerate(rows))
        self._index = {row.values: row for row in self.rows}

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> Character:
        return self.rows[i]

    def __iter__(self) -> Iterator[Character]:
        return iter(self.rows)

    @property
    def trivial(self) -> Character:
        return self.rows[0]

    def degrees(self) -> list[int]:
        return [row.degree for row in self.rows]

    def find_row(self, f: ClassFunction) -> Character | None:
        """The row with exactly these values, if any."""
        if f.classes is not self.class_data:
            raise ValueError("class function belongs to another group")
        return self._index.get(f.values)

    def class_function(self, values: Sequence[CyclotomicValue | Rational]) -> ClassFunction:
        return ClassFunction(self.class_data, values)

    def regular_character(self) -> ClassFunction:
        n = self.group.order
        return self.class_function([n] + [0] * (len(self.class_data) - 1))

    def linear_rows(self) -> list[Character]:
        return [row for row in self.rows if row.degree == 1]

    # -- exactness checks --------------------------------------------------

    def gram_matrix(self) -> list[list[Rational | CyclotomicValue]]:
        return inner_products(self.rows, self.rows)

    def first_orthogonality(self) -> bool:
        G = self.gram_matrix()
        return all(G[i][j] == (1 if i == j else 0) for i in range(len(G)) for j in range(len(G)))

    def second_orthogonality(self) -> bool:
        """``sum_chi chi(g_k) conj(chi(g_l)) = delta_kl |C_G(g_k)|``, exactly."""
        cd = self.class_data
        r = len(cd)
        L = self.exponent
        X = np.zeros((len(self.rows), r, L), dtype=np.int64)
        for a, row in enumerate(self.rows):
            for k, v in enumerate(row.values):
                num, den = v.dense(L)
                if den != 1:
                    return False
                X[a, k] = num
        idx = np.arange(L)
        P = np.zeros((r, r, L), dtype=np.int64)
        for s in range(L):
            P[:, :, s] = np.einsum("akj,alj->kl", X[:, :, (s + idx) % L], X)
        red = P @ _reduction_matrix(L) if L > 1 else P
        for k in range(r):
            for l in range(r):
                want = cd.centralizer_order(k) if k == l else 0
                w = red[k, l]
                if int(w[0]) != want or np.any(w[1:]):
                    return False
        return True

    def sum_of_squares_ok(self) -> bool:
        return sum(d * d for d in self.degrees()) == self.group.order and len(self.rows) == len(self.class_data)

    # -- serialisation ---------------------------------------------------------

    def to_json(self) -> dict:
        cd = self.class_data
        G = self.group
        return {
            "group": G.name,
            "order": G.order,
            "dixon_prime": self.dixon_prime,
            "exponent": self.exponent,
            "classes": [
                {
                    "size": cd.sizes[k],
                    "representative": G.word(cd.representatives[k]),
                    "element_order": cd.element_orders[k],
                }
                for k in range(len(cd))
            ],
            "power_maps": {str(p): list(m) for p, m in sorted(cd.power_maps.items())},
            "rows": [[v.to_json() for v in row.values] for row in self.rows],
        }

    def __repr__(self) -> str:
        return f"<CharacterTable of {self.group.name} with {len(self.rows)} rows>"


def _class_block(fs: Sequence[ClassFunction], k: int, L: int) -> tuple[np.ndarray, list[int]]:
    nums = []
    dens = []
    for f in fs:
        num, den = f.values[k].dense(L)
        nums.append(num)
        dens.append(den)
    return np.array(nums, dtype=object if any(n.dtype == object for n in nums) else np.int64), dens


def inner_products(fs: Sequence[ClassFunction], gs: Sequence[ClassFunction]) -> list[list[Rational | CyclotomicValue]]:
    """Matrix of ``[f, g] = (1/|G|) sum_k |C_k| f(g_k) conj(g(g_k))``, exact.

    Each class contributes a cyclic correlation of dense coefficient vectors
    at ``L_k = lcm(element order, conductors)``; everything is summed at a
    common ``L`` and reduced once at the end.
    """
    if not fs or not gs:
        return [[] for _ in fs]
    cd = fs[0].classes
    for h in list(fs) + list(gs):
        if h.classes is not cd:
            raise ValueError("class functions live on different class data")
    r = len(cd)
    Lk = [
        math.lcm(cd.element_orders[k], *(h.values[k].conductor for h in list(fs) + list(gs)))
        for k in range(r)
    ]
    L = math.lcm(*Lk)
    fden = [math.lcm(*(Fraction(c).denominator for v in f.values for c in v.coeffs)) for f in fs]
    gden = [math.lcm(*(Fraction(c).denominator for v in g.values for c in v.coeffs)) for g in gs]
    blocks = []
    bound = 0
    for k in range(r):
        n = Lk[k]
        F = np.array([_scaled_dense(f.values[k], n, fden[i]) for i, f in enumerate(fs)], dtype=object)
        Gm = np.array([_scaled_dense(g.values[k], n, gden[j]) for j, g in enumerate(gs)], dtype=object)
        fa = max((abs(int(x)) for x in F.flat), default=0)
        ga = max((abs(int(x)) for x in Gm.flat), default=0)
        bound += fa * ga * n * cd.sizes[k]
        blocks.append((F, Gm))
    small = bound < 2**62
    dtype = np.int64 if small else object
    acc = np.zeros((len(fs), len(gs), L), dtype=dtype)
    for k, (F, Gm) in enumerate(blocks):
        n = Lk[k]
        F, Gm = F.astype(dtype), Gm.astype(dtype)
        idx = np.arange(n)
        step = L // n
        size = cd.sizes[k]
        for s in range(n):
            acc[:, :, s * step] += (F[:, (s + idx) % n] @ Gm.T) * size
    R = _reduction_matrix(L)
    if small:
        red = acc @ R if L > 1 else acc
    else:
        red = acc.dot(R.astype(object)) if L > 1 else acc
    order = cd.order
    out: list[list[Rational | CyclotomicValue]] = []
    for i in range(len(fs)):
        line: list[Rational | CyclotomicValue] = []
        for j in range(len(gs)):
            den = order * fden[i] * gden[j]
            w = red[i, j]
            if not any(w[1:]):
                x = Fraction(int(w[0]), den)
                line.append(x.numerator if x.denominator == 1 else x)
            else:
                line.append(from_dense(acc[i, j], den, L))
        out.append(line)
    return out


def _scaled_dense(v: CyclotomicValue, n: int, den: int) -> list[int]:
    num, d = v.dense(n)
    return [int(x) * (den // d) for x in num]


def inner_product(a: ClassFunction, b: ClassFunction) -> Rational | CyclotomicValue:
    """``[a, b]``; a Fraction (or int) whenever the result is rational."""
    return inner_products([a], [b])[0][0]


def norm(f: ClassFunction) -> Rational | CyclotomicValue:
    return inner_product(f, f)


def principal(classes: ClassData) -> ClassFunction:
    return ClassFunction(classes, [ONE] * len(classes))


def zero_function(classes: ClassData) -> ClassFunction:
    return ClassFunction(classes, [ZERO] * len(classes))
