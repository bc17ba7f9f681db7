"""Brute-force reference computations on raw Cayley tables.

Nothing here imports cdlab: every routine works from the table alone, so it
can check the library's algorithms independently.
"""

import itertools

import numpy as np


def closed_subsets(table) -> set[frozenset]:
    """All subgroups, by testing every subset containing 0 for closure under products.

    Feasible up to order 16 or so (2^(n-1) subsets, checked all at once).
    """
    t = np.asarray(table)
    n = t.shape[0]
    codes = np.arange(2 ** (n - 1), dtype=np.int64)
    member = np.zeros((len(codes), n), dtype=bool)
    member[:, 0] = True
    for i in range(1, n):
        member[:, i] = (codes >> (i - 1)) & 1
    ok = np.ones(len(codes), dtype=bool)
    for a in range(n):
        for b in range(n):
            ok &= ~(member[:, a] & member[:, b]) | member[:, t[a, b]]
    return {frozenset(np.flatnonzero(row).tolist()) for row in member[ok]}


def naive_closure(table, seed) -> frozenset:
    t = np.asarray(table)
    S = {0, *seed}
    while True:
        bigger = S | {int(t[a, b]) for a in S for b in S}
        if bigger == S:
            return frozenset(S)
        S = bigger


def two_generated_subgroups(table) -> set[frozenset]:
    """Closures of all pairs; complete whenever every subgroup is 2-generated."""
    n = len(table)
    return {naive_closure(table, {a, b}) for a in range(n) for b in range(a, n)}


def three_generated_subgroups(table) -> set[frozenset]:
    n = len(table)
    pairs = two_generated_subgroups(table)
    out = set(pairs)
    for H in pairs:
        for c in range(n):
            if c not in H:
                out.add(naive_closure(table, H | {c}))
    return out


def centralizer(table, H) -> frozenset:
    t = np.asarray(table)
    return frozenset(g for g in range(len(t)) if all(t[g, h] == t[h, g] for h in H))


def measure(table, H) -> int:
    n = len(table)
    return (n // len(H)) * (n // len(centralizer(table, H)))


def mu_and_cd(table, subgroups) -> tuple[int, set[frozenset]]:
    values = {H: measure(table, H) for H in subgroups}
    best = min(values.values())
    return best, {H for H, v in values.items() if v == best}


def inverse(table, g) -> int:
    return next(x for x in range(len(table)) if table[g][x] == 0)


def is_normal(table, H, ambient=None) -> bool:
    t = np.asarray(table)
    ambient = range(len(t)) if ambient is None else ambient
    return all(t[t[g, h], inverse(t, g)] in H for g in ambient for h in H)


def normal_closure(table, H, subgroups) -> frozenset:
    out = frozenset(range(len(table)))
    for N in subgroups:
        if H <= N and is_normal(table, N):
            out &= N
    return out


def subnormal(table, H, subgroups) -> bool:
    """Search for a chain ``H = N_k <| ... <| N_0 = G`` in the subgroup list."""
    top = frozenset(range(len(table)))
    reach = {top}
    frontier = [top]
    while frontier:
        L = frontier.pop()
        for K in subgroups:
            if K < L and H <= K and K not in reach and is_normal(table, K, ambient=L):
                reach.add(K)
                frontier.append(K)
    return H in reach


def element_orders(table) -> list[int]:
    t = np.asarray(table)
    out = []
    for g in range(len(t)):
        x, k = g, 1
        while x != 0:
            x, k = int(t[x, g]), k + 1
        out.append(k)
    return out


def commutator(table, a, b) -> int:
    t = np.asarray(table)
    ia, ib = inverse(t, a), inverse(t, b)
    return int(t[t[t[ia, ib], a], b])


def lower_central(table) -> list[frozenset]:
    n = len(table)
    series = [frozenset(range(n))]
    while True:
        nxt = naive_closure(table, {commutator(table, a, b) for a in series[-1] for b in range(n)})
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_nilpotent_by_series(table, H) -> bool:
    """Lower central series of H computed inside H."""
    cur = frozenset(H)
    while True:
        nxt = naive_closure(table, {commutator(table, a, b) for a in cur for b in H})
        if nxt == cur:
            return cur == {0}
        cur = nxt


def sl2_matrices(p: int) -> list[tuple]:
    return [
        ((a, b), (c, d))
        for a, b, c, d in itertools.product(range(p), repeat=4)
        if (a * d - b * c) % p == 1
    ]
