"""Finite groups as validated multiplication tables.

Elements are the integers ``0..n-1`` and the identity is always ``0``.
``table[i, j]`` is the index of the product ``i*j``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import reduce
import numpy as np

from cdlab import bitmask
from cdlab.errors import (
    BadParameter,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotNormal,
    OrderLimitExceeded,
)

DEFAULT_MAX_ORDER = 512
FULL_ASSOCIATIVITY_LIMIT = 256
RANDOM_TRIPLES = 20000


class Group:
    """An immutable finite group given by its Cayley table.

    Use the constructor functions (``from_cayley_table``,
    ``from_permutation_generators``, ``direct_product``, ``quotient``,
    ``cdlab.named``) rather than instantiating directly; they validate.
    Derived data (centralizers, subgroup lists, ...) is memoised in
    ``_cache`` by the modules that compute it.
    """

    __slots__ = ("order", "table", "inverse", "elem_order", "label", "_cache")

    def __init__(self, table: np.ndarray, inverse: np.ndarray, elem_order: np.ndarray, label: str | None = None):
        for arr in (table, inverse, elem_order):
            arr.flags.writeable = False
        self.order = int(table.shape[0])
        self.table = table
        self.inverse = inverse
        self.elem_order = elem_order
        self.label = label
        self._cache: dict = {}

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        name = self.label or "Group"
        return f"<{name} of order {self.order}>"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, g: int, h: int) -> int:
        """``g h g^-1``."""
        return int(self.table[self.table[g, h], self.inverse[g]])

    def commutator(self, a: int, b: int) -> int:
        """``[a, b] = a^-1 b^-1 a b``."""
        t = self.table
        return int(t[t[self.inverse[a], self.inverse[b]], t[a, b]])

    @property
    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            self._cache["abelian"] = bool(np.array_equal(self.table, self.table.T))
        return self._cache["abelian"]

    @property
    def full_mask(self) -> int:
        return bitmask.full(self.order)

    def with_label(self, label: str | None) -> Group:
        return Group(self.table, self.inverse, self.elem_order, label)


@dataclass(frozen=True)
class PermGenSet:
    """Generators of a permutation group on ``{0, ..., degree-1}``.

    Each generator is its image list: ``g[i]`` is the image of point ``i``.
    """

    degree: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.degree < 1:
            raise BadParameter(f"degree must be positive, got {self.degree}")
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for k, g in enumerate(gens):
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise BadParameter(f"generator {k} is not a permutation of {self.degree} points: {list(g)}")


def from_cayley_table(table, label: str | None = None) -> Group:
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotClosed(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if not np.issubdtype(arr.dtype, np.integer):
        raise NotClosed("table entries must be integers")
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = map(int, bad[0])
        raise NotClosed(f"table[{i}][{j}] = {int(arr[i, j])} is outside 0..{n - 1}")
    arr = arr.astype(np.int32 if n > 32767 else np.int16, copy=True)
    _check_identity(arr)
    inverse = _find_inverses(arr)
    _check_associative(arr)
    return Group(arr, inverse, _element_orders(arr), label)


def _check_identity(t: np.ndarray) -> None:
    idx = np.arange(t.shape[0])
    for name, line in (("row", t[0]), ("column", t[:, 0])):
        wrong = np.flatnonzero(line != idx)
        if len(wrong):
            j = int(wrong[0])
            raise NoIdentity(f"index 0 is not an identity: {name} 0 maps {j} to {int(line[j])}")


def _find_inverses(t: np.ndarray) -> np.ndarray:
    n = t.shape[0]
    hits = t == 0
    counts = hits.sum(axis=1)
    missing = np.flatnonzero(counts != 1)
    if len(missing):
        i = int(missing[0])
        raise NoInverse(f"element {i} has {int(counts[i])} right inverses, expected exactly 1")
    inverse = hits.argmax(axis=1)
    two_sided = t[inverse, np.arange(n)] == 0
    if not two_sided.all():
        i = int(np.flatnonzero(~two_sided)[0])
        raise NoInverse(f"right inverse {int(inverse[i])} of element {i} is not a left inverse")
    return inverse.astype(t.dtype)


def _check_associative(t: np.ndarray) -> None:
    n = t.shape[0]
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        for i in range(n):
            # (i*j)*k versus i*(j*k) for all j, k
            lhs = t[t[i]]
            rhs = t[i][t]
            if not np.array_equal(lhs, rhs):
                j, k = map(int, np.argwhere(lhs != rhs)[0])
                raise NotAssociative(f"(({i}*{j})*{k}) != ({i}*({j}*{k}))")
        return
    # Light's test: the right factors x with (a*b)*x == a*(b*x) for all a, b
    # are closed under products, so checking a generating set is exact.
    for s in _magma_generators(t):
        col = t[:, s]
        for start in range(0, n, 512):
            rows = slice(start, min(n, start + 512))
            lhs = col[t[rows]]
            rhs = t[rows][:, col]
            if not np.array_equal(lhs, rhs):
                a, b = map(int, np.argwhere(lhs != rhs)[0])
                a += start
                raise NotAssociative(f"(({a}*{b})*{s}) != ({a}*({b}*{s}))")
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, RANDOM_TRIPLES))
    bad = np.flatnonzero(t[t[a, b], c] != t[a, t[b, c]])
    if len(bad):
        k = int(bad[0])
        raise NotAssociative(f"(({a[k]}*{b[k]})*{c[k]}) != ({a[k]}*({b[k]}*{c[k]}))")


def _magma_generators(t: np.ndarray) -> list[int]:
    """Greedy set of elements whose left-normed products reach every element."""
    n = t.shape[0]
    reached = np.zeros(n, dtype=bool)
    reached[0] = True
    gens: list[int] = []
    while not reached.all():
        g = int(np.flatnonzero(~reached)[0])
        gens.append(g)
        frontier = np.flatnonzero(reached)
        while len(frontier):
            prods = np.unique(t[np.ix_(frontier, gens)])
            fresh = prods[~reached[prods]]
            reached[fresh] = True
            frontier = fresh
    return gens


def _element_orders(t: np.ndarray) -> np.ndarray:
    n = t.shape[0]
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    power = idx.copy()
    k = 1
    while True:
        done = (power == 0) & (orders == 0)
        orders[done] = k
        if orders.all():
            return orders
        power = t[power, idx]
        k += 1


def generating_set(G: Group) -> list[int]:
    """A small generating set found greedily (first element not yet reached)."""
    if "gens" not in G._cache:
        G._cache["gens"] = tuple(_magma_generators(G.table))
    return list(G._cache["gens"])


def from_permutation_generators(gens: PermGenSet, max_order: int = DEFAULT_MAX_ORDER, label: str | None = None) -> Group:
    """Close a set of permutations under composition.

    The product ``x*y`` applies ``x`` first, then ``y``. Elements are numbered
    in breadth-first discovery order from the identity, with generators tried
    in the listed order, so the resulting table is deterministic.
    """
    identity = tuple(range(gens.degree))
    index = {identity: 0}
    perms = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens.generators:
            y = tuple(s[i] for i in x)
            if y not in index:
                if len(perms) >= max_order:
                    raise OrderLimitExceeded(max_order)
                index[y] = len(perms)
                perms.append(y)
                queue.append(y)
    n = len(perms)
    P = np.array(perms, dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        # row i: (i*j)[k] = P[j][P[i][k]]
        products = P[:, P[i]]
        table[i] = [index[tuple(r)] for r in products.tolist()]
    return from_cayley_table(table, label=label)


def direct_product(G: Group, H: Group, max_order: int = DEFAULT_MAX_ORDER, label: str | None = None) -> Group:
    """Componentwise product; the pair ``(g, h)`` has index ``g*|H| + h``."""
    n, m = G.order, H.order
    if n * m > max_order:
        raise OrderLimitExceeded(max_order, n * m)
    dtype = np.int32 if n * m > 32767 else np.int16
    gt = G.table.astype(dtype)
    ht = H.table.astype(dtype)
    table = (gt[:, None, :, None] * m + ht[None, :, None, :]).reshape(n * m, n * m)
    if label is None and G.label and H.label:
        label = f"product({G.label},{H.label})"
    return from_cayley_table(table, label=label)


def quotient(G: Group, N, label: str | None = None) -> tuple[Group, np.ndarray]:
    """Quotient by a normal subgroup.

    Returns the quotient group and ``coset_of``, the array sending each
    element of ``G`` to the index of its coset. Cosets are numbered by their
    smallest element, so the coset of the identity is ``0``.
    """
    members = bitmask.to_indices(N.mask, G.order)
    t = G.table
    for g in range(G.order):
        left = bitmask.from_indices(t[g, members], G.order)
        right = bitmask.from_indices(t[members, g], G.order)
        if left != right:
            raise NotNormal(f"left and right cosets of element {g} differ")
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset_of[g] < 0:
            coset_of[t[g, members]] = len(reps)
            reps.append(g)
    reps_arr = np.array(reps)
    qtable = coset_of[t[np.ix_(reps_arr, reps_arr)]]
    return from_cayley_table(qtable, label=label), coset_of


def exponent(G: Group) -> int:
    return reduce(math.lcm, (int(x) for x in np.unique(G.elem_order)), 1)

