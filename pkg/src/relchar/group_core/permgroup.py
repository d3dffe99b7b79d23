"""Finite permutation groups with an explicitly enumerated element table."""

from __future__ import annotations

import threading
from collections.abc import Callable, Iterable, Sequence
from typing import Any

import numpy as np

from .. import config
from ..errors import GroupFormatError, GuardExceeded
from .permutation import Permutation

# Full Cayley tables are kept only below this order; larger groups multiply on demand.
CAYLEY_LIMIT = 4096

_KEY_SEED = 0x5EED


class PermGroup:
    """A permutation group generated by a list of :class:`Permutation`.

    Elements get stable integer ids from the lexicographic order of their
    image arrays, so the identity is always id 0.  The element table is
    built lazily under a lock; call :meth:`prepare` before sharing a group
    across threads if you want to avoid the first-use latency.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation] = (),
        name: str | None = None,
        tagged_normals: dict[str, Sequence[Permutation]] | None = None,
    ):
        if degree < 1:
            raise GroupFormatError("degree must be at least 1")
        gens = tuple(generators)
        for row, g in enumerate(gens):
            if g.degree != degree:
                raise GroupFormatError(
                    f"generator row {row} has length {g.degree}, expected degree {degree}"
                )
        self.degree = degree
        self.generators = gens
        self.name = name
        self.tagged_normals: dict[str, tuple[Permutation, ...]] = {
            k: tuple(v) for k, v in (tagged_normals or {}).items()
        }
        self._lock = threading.RLock()
        self._elements: np.ndarray | None = None
        self._table: np.ndarray | None = None
        self._inv: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        self._keys: tuple[np.ndarray, np.ndarray, np.ndarray] | None = None
        self._words: list[tuple[int, ...]] | None = None
        self._cache: dict[Any, Any] = {}
        # set for groups cut out of a parent (see SubgroupHandle.as_group)
        self.parent_ids: np.ndarray | None = None
        self.parent_group: PermGroup | None = None

    # -- construction helpers -------------------------------------------

    @classmethod
    def _from_sorted_elements(
        cls,
        degree: int,
        generators: Sequence[Permutation],
        elements: np.ndarray,
        name: str | None = None,
        table: np.ndarray | None = None,
    ) -> PermGroup:
        grp = cls(degree, generators, name)
        grp._elements = np.ascontiguousarray(elements)
        if table is not None:
            grp._table = table
        return grp

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        order = len(self._elements) if self._elements is not None else "?"
        return f"<{label} degree={self.degree} order={order}>"

    # -- element table ----------------------------------------------------

    def prepare(self) -> PermGroup:
        """Eagerly build the element table, inverses and (small groups) the Cayley table."""
        self.elements
        self.inverses
        self.orders
        return self

    @property
    def elements(self) -> np.ndarray:
        """``(order, degree)`` array of 0-based images, lexicographically sorted."""
        if self._elements is None:
            with self._lock:
                if self._elements is None:
                    self._elements = self._enumerate(config.current().enumeration)
        return self._elements

    def _enumerate(self, guard: int) -> np.ndarray:
        dtype = np.uint8 if self.degree <= 256 else np.uint16
        ident = np.arange(self.degree, dtype=dtype)
        gens = [np.array(g.images, dtype=dtype) - 1 for g in self.generators]
        seen = {ident.tobytes()}
        rows = [ident]
        frontier = ident[None, :]
        while len(frontier):
            fresh = []
            for g in gens:
                for row in g[frontier]:
                    key = row.tobytes()
                    if key not in seen:
                        seen.add(key)
                        fresh.append(row)
                        if len(seen) > guard:
                            raise GuardExceeded("element enumeration", guard, len(seen))
            rows.extend(fresh)
            frontier = np.array(fresh, dtype=dtype) if fresh else frontier[:0]
        elements = np.array(rows, dtype=dtype)
        order = np.lexsort(elements.T[::-1])
        return np.ascontiguousarray(elements[order])

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    @property
    def identity(self) -> int:
        return 0

    def perm(self, idx: int) -> Permutation:
        return Permutation(int(i) + 1 for i in self.elements[idx])

    def _key_index(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if self._keys is None:
            with self._lock:
                if self._keys is None:
                    els = self.elements.astype(np.uint64)
                    rng = np.random.default_rng(_KEY_SEED)
                    while True:
                        weights = rng.integers(1, 2**63, size=self.degree, dtype=np.uint64)
                        keys = (els * weights).sum(axis=1)
                        order = np.argsort(keys, kind="stable")
                        skeys = keys[order]
                        if len(skeys) < 2 or np.all(skeys[1:] != skeys[:-1]):
                            break
                    self._keys = (weights, skeys, order)
        return self._keys

    def lookup_rows(self, rows: np.ndarray) -> np.ndarray:
        """Ids of the given image rows, which must all be group elements."""
        weights, skeys, order = self._key_index()
        keys = (rows.astype(np.uint64) * weights).sum(axis=-1)
        pos = np.searchsorted(skeys, keys)
        pos = np.minimum(pos, len(skeys) - 1)
        ids = order[pos]
        ok = np.all(self.elements[ids] == rows, axis=-1)
        if not np.all(ok):
            raise KeyError("row is not an element of the group")
        return ids

    def index_of(self, g: Permutation) -> int:
        if g.degree != self.degree:
            raise KeyError("degree mismatch")
        row = np.array(g.images, dtype=self.elements.dtype) - 1
        return int(self.lookup_rows(row[None, :])[0])

    def contains(self, g: Permutation) -> bool:
        try:
            self.index_of(g)
        except KeyError:
            return False
        return True

    # -- arithmetic on ids --------------------------------------------------

    @property
    def table(self) -> np.ndarray | None:
        """Cayley table ``table[x, y] = id(x*y)``, or None above CAYLEY_LIMIT."""
        if self._table is None and self.order <= CAYLEY_LIMIT:
            with self._lock:
                if self._table is None:
                    self._table = self._build_table()
        return self._table

    def _build_table(self) -> np.ndarray:
        els = self.elements
        n = len(els)
        table = np.empty((n, n), dtype=np.int32)
        block = max(1, 2_000_000 // max(1, n * self.degree))
        for start in range(0, n, block):
            ys = els[start : start + block]
            # prod[y, x, i] = y[x[i]] is the image row of x*y
            prod = ys[:, els]
            ids = self.lookup_rows(prod.reshape(-1, self.degree)).reshape(len(ys), n)
            table[:, start : start + block] = ids.T
        return table

    def mul(self, a, b):
        """Product ids; ``a`` and ``b`` may be ints or broadcastable id arrays."""
        table = self.table
        if table is not None:
            res = table[a, b]
            return int(res) if np.ndim(res) == 0 else res
        els = self.elements
        a_arr, b_arr = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        rows = np.take_along_axis(els[b_arr], els[a_arr].astype(np.int64), axis=-1)
        res = self.lookup_rows(rows)
        return int(res) if np.ndim(res) == 0 else res

    @property
    def inverses(self) -> np.ndarray:
        if self._inv is None:
            with self._lock:
                if self._inv is None:
                    els = self.elements
                    inv_rows = np.empty_like(els)
                    np.put_along_axis(
                        inv_rows,
                        els.astype(np.int64),
                        np.broadcast_to(np.arange(self.degree, dtype=els.dtype), els.shape),
                        axis=1,
                    )
                    self._inv = self.lookup_rows(inv_rows)
        return self._inv

    def inv(self, a):
        res = self.inverses[a]
        return int(res) if np.ndim(res) == 0 else res

    def conj(self, x, g):
        """``g^-1 x g``."""
        return self.mul(self.inv(g), self.mul(x, g))

    def commutator(self, x, y):
        """``[x, y] = x^-1 y^-1 x y``."""
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def power(self, x: int, k: int) -> int:
        result = 0
        base = x if k >= 0 else self.inv(x)
        k = abs(k)
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    @property
    def orders(self) -> np.ndarray:
        """Element order of every id."""
        if self._orders is None:
            with self._lock:
                if self._orders is None:
                    n = self.order
                    ids = np.arange(n)
                    out = np.zeros(n, dtype=np.int64)
                    pw = ids.copy()
                    k = 1
                    while True:
                        hit = (pw == 0) & (out == 0)
                        out[hit] = k
                        if np.all(out):
                            break
                        pw = self.mul(pw, ids)
                        k += 1
                    self._orders = out
        return self._orders

    def exponent(self) -> int:
        return int(np.lcm.reduce(self.orders)) if self.order > 1 else 1

    @property
    def generator_ids(self) -> tuple[int, ...]:
        return tuple(self.index_of(g) for g in self.generators)

    # -- words ---------------------------------------------------------------

    def word(self, idx: int) -> str:
        """A shortest positive word in the generators, e.g. ``g1*g2*g2``."""
        if self._words is None:
            with self._lock:
                if self._words is None:
                    self._words = self._build_words()
        w = self._words[idx]
        return "*".join(f"g{i + 1}" for i in w) if w else "1"

    def _build_words(self) -> list[tuple[int, ...]]:
        words: list[tuple[int, ...] | None] = [None] * self.order
        words[0] = ()
        frontier = [0]
        gens = self.generator_ids
        while frontier:
            nxt = []
            for x in frontier:
                for gi, g in enumerate(gens):
                    y = self.mul(x, g)
                    if words[y] is None:
                        words[y] = words[x] + (gi,)
                        nxt.append(y)
            frontier = nxt
        return words  # type: ignore[return-value]

    # -- cache -------------------------------------------------------------

    def cached(self, key: Any, build: Callable[[], Any]) -> Any:
        """Memoise derived data on this group (thread-safe, re-entrant)."""
        try:
            return self._cache[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._cache:
                self._cache[key] = build()
            return self._cache[key]

    def peek(self, key: Any, default: Any = None) -> Any:
        """A memoised value if it has been computed, without building it."""
        return self._cache.get(key, default)

    def is_abelian(self) -> bool:
        gens = self.generator_ids
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)


def enumerate_elements(G: PermGroup) -> list[Permutation]:
    """All elements of ``G`` as permutations, in id order."""
    return [G.perm(i) for i in range(G.order)]
