"""Subgroup enumeration and the structural subgroups built from it.

A ``Subgroup`` is a membership bitmask over its parent's element indices.
Expensive per-group data (element centralizers, the subgroup list, the
normal subgroups) is memoised on the parent ``Group``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from cdlab import bitmask
from cdlab.errors import NotPGroup, SubgroupBudgetExceeded
from cdlab.group import Group, generating_set, quotient, exponent
from cdlab.numbers import prime_factors, prime_of_power

DEFAULT_SUBGROUP_BUDGET = 100_000
DEFAULT_JOIN_BUDGET = 100_000
ROW_LIST_LIMIT = 1024


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: Group = field(repr=False)
    mask: int
    gens: tuple[int, ...] | None = field(default=None, repr=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __contains__(self, g: int) -> bool:
        return bool((self.mask >> g) & 1)

    def __le__(self, other: Subgroup) -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.mask != other.mask

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, elements={self.element_list()})"

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def elements(self) -> np.ndarray:
        return bitmask.to_indices(self.mask, self.parent.order)

    def element_list(self) -> list[int]:
        return [int(x) for x in self.elements()]

    def generators(self) -> tuple[int, ...]:
        """A generating set; computed greedily on first use when not supplied."""
        if self.gens is None:
            object.__setattr__(self, "gens", _greedy_gens(self.parent, self.mask))
        return self.gens

    def sort_key(self) -> tuple:
        return (self.order, tuple(self.element_list()))

    def is_trivial(self) -> bool:
        return self.mask == 1

    def is_whole(self) -> bool:
        return self.mask == self.parent.full_mask

    def meet(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.parent, self.mask & other.mask)

    def join(self, other: Subgroup) -> Subgroup:
        return _extend(self.parent, self, other.generators())


@dataclass(frozen=True)
class SubgroupSet:
    parent: Group = field(repr=False)
    subgroups: tuple[Subgroup, ...]

    def __iter__(self):
        return iter(self.subgroups)

    def __len__(self) -> int:
        return len(self.subgroups)

    def __contains__(self, H: Subgroup) -> bool:
        return H.mask in self.masks()

    def masks(self) -> frozenset[int]:
        return frozenset(H.mask for H in self.subgroups)

    def to_record(self) -> dict:
        return {
            "group": self.parent.label,
            "order": self.parent.order,
            "subgroups": [H.element_list() for H in self.subgroups],
        }


def subgroup_set(G: Group, subgroups) -> SubgroupSet:
    unique = {H.mask: H for H in subgroups}
    return SubgroupSet(G, tuple(sorted(unique.values(), key=Subgroup.sort_key)))


def trivial(G: Group) -> Subgroup:
    return Subgroup(G, 1, ())


def whole(G: Group) -> Subgroup:
    return Subgroup(G, G.full_mask, tuple(generating_set(G)))


def from_elements(G: Group, elements) -> Subgroup:
    """Wrap an element set already known to be a subgroup."""
    return Subgroup(G, bitmask.from_indices(list(elements), G.order))


# -- closure -----------------------------------------------------------------


def _rows(G: Group):
    if "rows" not in G._cache:
        G._cache["rows"] = G.table.tolist() if G.order <= ROW_LIST_LIMIT else G.table
    return G._cache["rows"]


def _extend(G: Group, H: Subgroup, extra) -> Subgroup:
    """``<H, extra>``, built as a union of right cosets ``H*y``."""
    new = [int(g) for g in extra if not (H.mask >> int(g)) & 1]
    if not new:
        return H
    rows = _rows(G)
    members = H.elements()
    inside = bitmask.to_bools(H.mask, G.order)
    gens = list(H.generators())
    for g in new:
        if g not in gens:
            gens.append(g)
    reps = [0]
    i = 0
    while i < len(reps):
        r = rows[reps[i]]
        i += 1
        for s in gens:
            y = r[s]
            if not inside[y]:
                inside[G.table[members, y]] = True
                reps.append(y)
    return Subgroup(G, bitmask.from_bools(inside), tuple(gens))


def closure(G: Group, seed) -> Subgroup:
    """The least subgroup containing the elements of ``seed``."""
    H = trivial(G)
    for g in seed:
        if int(g) not in H:
            H = _extend(G, H, [g])
    return H


def _greedy_gens(G: Group, mask: int) -> tuple[int, ...]:
    H = trivial(G)
    for g in bitmask.iter_bits(mask):
        if g not in H:
            H = _extend(G, H, [g])
    return H.gens


def cyclic_subgroup(G: Group, g: int) -> Subgroup:
    rows = _rows(G)
    mask, x = 1, g
    while x != 0:
        mask |= 1 << x
        x = rows[x][g]
    return Subgroup(G, mask, (g,) if g else ())


# -- enumeration -------------------------------------------------------------


def elementary_abelian_rank(G: Group) -> tuple[int, int] | None:
    """``(p, k)`` when G is elementary abelian of order ``p^k > 1``."""
    p = prime_of_power(G.order)
    if p is None or not G.is_abelian:
        return None
    if set(np.unique(G.elem_order[1:]).tolist()) != {p}:
        return None
    return p, prime_factors(G.order)[p]


def gaussian_binomial(k: int, j: int, q: int) -> int:
    num = den = 1
    for i in range(j):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def projected_subgroup_count(G: Group) -> int | None:
    """Exact subgroup count for elementary abelian groups, None otherwise."""
    rank = elementary_abelian_rank(G)
    if rank is None:
        return None
    p, k = rank
    return sum(gaussian_binomial(k, j, p) for j in range(k + 1))


def prime_power_cyclics(G: Group) -> list[Subgroup]:
    seen: dict[int, Subgroup] = {}
    for g in range(1, G.order):
        if prime_of_power(int(G.elem_order[g])) is None:
            continue
        C = cyclic_subgroup(G, g)
        seen.setdefault(C.mask, C)
    return list(seen.values())


def all_subgroups(
    G: Group,
    budget: int = DEFAULT_SUBGROUP_BUDGET,
    join_budget: int = DEFAULT_JOIN_BUDGET,
) -> SubgroupSet:
    """Every subgroup of G, sorted by (order, element list).

    Starts from the cyclic subgroups of prime-power order and joins each
    subgroup found with each of them until nothing new appears. Every
    subgroup is the join of the prime-power cyclic subgroups it contains,
    so the fixed point is the full lattice.

    Raises ``SubgroupBudgetExceeded`` when the number of subgroups passes
    ``budget`` or the number of joins passes ``join_budget``. For elementary
    abelian groups the exact count is known up front and checked before any
    work is done.
    """
    cached = G._cache.get("all_subgroups")
    if cached is not None:
        return cached
    atoms = prime_power_cyclics(G)
    projected = projected_subgroup_count(G)
    if projected is not None:
        if projected > budget:
            raise SubgroupBudgetExceeded(projected, budget, projected=True)
        if projected * len(atoms) > join_budget:
            raise SubgroupBudgetExceeded(projected, join_budget, projected=True, joins=projected * len(atoms))
    found: dict[int, Subgroup] = {1: trivial(G)}
    for C in atoms:
        found.setdefault(C.mask, C)
    work = list(found.values())
    joins = 0
    while work:
        H = work.pop()
        for C in atoms:
            if C.mask & ~H.mask == 0:
                continue
            joins += 1
            if joins > join_budget:
                raise SubgroupBudgetExceeded(len(found), join_budget, joins=joins)
            K = _extend(G, H, C.gens)
            if K.mask not in found:
                found[K.mask] = K
                if len(found) > budget:
                    raise SubgroupBudgetExceeded(len(found), budget)
                work.append(K)
    result = subgroup_set(G, found.values())
    G._cache["all_subgroups"] = result
    return result


# -- centralizers and normality -----------------------------------------------


def element_centralizers(G: Group) -> list[int]:
    """``C_G(g)`` as a bitmask, for every element g."""
    if "cent" not in G._cache:
        commute = G.table == G.table.T
        packed = np.packbits(commute, axis=1, bitorder="little")
        G._cache["cent"] = [int.from_bytes(row.tobytes(), "little") for row in packed]
    return G._cache["cent"]


def centralizer(G: Group, H: Subgroup) -> Subgroup:
    """Intersect the element centralizers of a generating set of H."""
    cent = element_centralizers(G)
    mask = G.full_mask
    for g in H.generators():
        mask &= cent[g]
    return Subgroup(G, mask)


def center(G: Group) -> Subgroup:
    if "center" not in G._cache:
        G._cache["center"] = centralizer(G, whole(G))
    return G._cache["center"]


def is_abelian_subgroup(G: Group, H: Subgroup) -> bool:
    return H <= centralizer(G, H)


def conjugate(G: Group, H: Subgroup, x: int) -> Subgroup:
    """``x H x^-1``."""
    members = H.elements()
    images = G.table[G.table[x, members], G.inverse[x]]
    return Subgroup(G, bitmask.from_indices(images, G.order))


def _is_normalized_by(G: Group, H: Subgroup, xs) -> bool:
    t, inv = G.table, G.inverse
    for x in xs:
        for h in H.generators():
            if not (H.mask >> int(t[t[x, h], inv[x]])) & 1:
                return False
    return True


def is_normal(G: Group, H: Subgroup) -> bool:
    return _is_normalized_by(G, H, generating_set(G))


def normal_closure(G: Group, H: Subgroup, within: Subgroup | None = None) -> Subgroup:
    """Least subgroup containing H that is normalised by ``within`` (default G)."""
    ambient = generating_set(G) if within is None else within.generators()
    t, inv = G.table, G.inverse
    N = H
    while True:
        fresh = []
        for x in ambient:
            for h in N.generators():
                c = int(t[t[x, h], inv[x]])
                if c not in N and c not in fresh:
                    fresh.append(c)
        if not fresh:
            return N
        N = _extend(G, N, fresh)


def is_subnormal(G: Group, H: Subgroup) -> bool:
    """Follow ``N_{i+1} = normal closure of H in N_i`` from ``N_0 = G``."""
    N = whole(G)
    while True:
        M = normal_closure(G, H, within=N)
        if M == N:
            return N == H
        N = M


def set_product(G: Group, A: Subgroup, B: Subgroup) -> int:
    """The element set ``AB`` as a bitmask (not necessarily a subgroup)."""
    prods = G.table[np.ix_(A.elements(), B.elements())]
    return bitmask.from_indices(prods.ravel(), G.order)


def conjugates(G: Group, H: Subgroup) -> list[Subgroup]:
    seen: dict[int, Subgroup] = {}
    for x in range(G.order):
        K = conjugate(G, H, x)
        seen.setdefault(K.mask, K)
    return list(seen.values())


def permutes_with_conjugates(G: Group, H: Subgroup) -> bool:
    for K in conjugates(G, H):
        if K != H and set_product(G, H, K) != set_product(G, K, H):
            return False
    return True


# -- series ------------------------------------------------------------------


@dataclass(frozen=True)
class CentralSeries:
    """Upper series ``Z_1 = Z(G) <= Z_2 <= ...`` and lower series ``G = γ_1 >= γ_2 = G' >= ...``.

    Both lists stop at the first repeated term.
    """

    ascending: tuple[Subgroup, ...]
    descending: tuple[Subgroup, ...]
    nilpotency_class: int | None

    @property
    def is_nilpotent(self) -> bool:
        return self.nilpotency_class is not None

    @property
    def derived_subgroup(self) -> Subgroup:
        return self.descending[1] if len(self.descending) > 1 else self.descending[0]

    @property
    def second_center(self) -> Subgroup:
        return self.ascending[1] if len(self.ascending) > 1 else self.ascending[0]

    def upper_length(self) -> int | None:
        """Least i with ``Z_i = G`` (``Z_0`` is trivial), or None."""
        top = self.descending[0]
        if top.is_trivial():
            return 0
        for i, Z in enumerate(self.ascending, start=1):
            if Z == top:
                return i
        return None


def commutator_subgroup(G: Group, A: Subgroup, B: Subgroup) -> Subgroup:
    """``[A, B]``, generated by all ``a^-1 b^-1 a b``."""
    t, inv = G.table, G.inverse
    a, b = A.elements(), B.elements()
    comms = t[t[np.ix_(inv[a], inv[b])], t[np.ix_(a, b)]]
    return closure(G, np.unique(comms).tolist())


def _next_upper(G: Group, Z: Subgroup) -> Subgroup:
    t, inv = G.table, G.inverse
    in_z = bitmask.to_bools(Z.mask, G.order)
    keep = np.ones(G.order, dtype=bool)
    for x in generating_set(G):
        # [g, x] for every g
        comms = t[t[inv, inv[x]], t[:, x]]
        keep &= in_z[comms]
    return Subgroup(G, bitmask.from_bools(keep))


def central_series(G: Group) -> CentralSeries:
    if "series" in G._cache:
        return G._cache["series"]
    ascending = [center(G)]
    while True:
        nxt = _next_upper(G, ascending[-1])
        if nxt == ascending[-1]:
            break
        ascending.append(nxt)
    full = whole(G)
    descending = [full]
    while True:
        nxt = commutator_subgroup(G, descending[-1], full)
        if nxt == descending[-1]:
            break
        descending.append(nxt)
    cls = len(descending) - 1 if descending[-1].is_trivial() else None
    series = CentralSeries(tuple(ascending), tuple(descending), cls)
    G._cache["series"] = series
    return series


def derived_subgroup(G: Group) -> Subgroup:
    return central_series(G).derived_subgroup


def second_center(G: Group) -> Subgroup:
    return central_series(G).second_center


def is_nilpotent(G: Group) -> bool:
    return central_series(G).is_nilpotent


def nilpotency_class(G: Group) -> int | None:
    return central_series(G).nilpotency_class


def is_nilpotent_subgroup(G: Group, H: Subgroup) -> bool:
    """H is nilpotent iff, for each prime p, its p-elements number exactly ``|H|_p``.

    That count holds exactly when every Sylow subgroup of H is normal.
    """
    orders = G.elem_order[H.elements()]
    for p, e in prime_factors(H.order).items():
        p_elements = 0
        for o, c in zip(*np.unique(orders, return_counts=True)):
            if o == 1 or prime_of_power(int(o)) == p:
                p_elements += int(c)
        if p_elements != p**e:
            return False
    return True


# -- normal subgroups ----------------------------------------------------------


def conjugacy_classes(G: Group) -> list[list[int]]:
    t, inv = G.table, G.inverse
    idx = np.arange(G.order)
    assigned = np.zeros(G.order, dtype=bool)
    classes = []
    for g in range(G.order):
        if assigned[g]:
            continue
        cls = np.unique(t[t[idx, g], inv])
        assigned[cls] = True
        classes.append(cls.tolist())
    return classes


def normal_subgroups(G: Group) -> SubgroupSet:
    """All normal subgroups, as joins of normal closures of single elements."""
    if "normal" in G._cache:
        return G._cache["normal"]
    atoms: dict[int, Subgroup] = {}
    for cls in conjugacy_classes(G):
        N = closure(G, cls)
        atoms.setdefault(N.mask, N)
    found: dict[int, Subgroup] = {1: trivial(G)}
    found.update(atoms)
    work = list(found.values())
    while work:
        N = work.pop()
        for A in atoms.values():
            if A <= N:
                continue
            M = _extend(G, N, A.generators())
            if M.mask not in found:
                found[M.mask] = M
                work.append(M)
    result = subgroup_set(G, found.values())
    G._cache["normal"] = result
    return result


def fitting_subgroup(G: Group) -> Subgroup:
    """Join of all normal nilpotent subgroups."""
    F = trivial(G)
    for N in normal_subgroups(G):
        if is_nilpotent_subgroup(G, N):
            F = F.join(N)
    assert is_normal(G, F) and is_nilpotent_subgroup(G, F)
    return F


def is_simple(G: Group) -> bool:
    return G.order > 1 and len(normal_subgroups(G)) == 2


def p_group_prime(G: Group) -> int:
    p = prime_of_power(G.order)
    if p is None:
        raise NotPGroup(f"order {G.order} is not a prime power")
    return p


def is_extraspecial(G: Group) -> bool:
    p = p_group_prime(G)
    Z = center(G)
    if Z.order != p or derived_subgroup(G) != Z:
        return False
    Q, _ = quotient(G, Z)
    return exponent(Q) == p
