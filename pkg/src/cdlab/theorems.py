"""Checkable statements about abelian subgroups of small index, one report each.

Every ``verify_*`` function returns a ``TheoremReport``; hypotheses that do
not hold give a not-applicable verdict rather than a pass.
"""

from __future__ import annotations

from fractions import Fraction

from cdlab.errors import SubgroupBudgetExceeded
from cdlab.group import Group, exponent, quotient
from cdlab.lattice import (
    cd_lattice,
    cd_measure,
    cd_subgroups,
    cd_subgroups_via_centralizers,
    mu,
    verify_theorem1,
)
from cdlab.numbers import prime_of_power, smallest_prime
from cdlab.report import Checklist, TheoremReport, report
from cdlab.subgroups import (
    Subgroup,
    SubgroupSet,
    all_subgroups,
    center,
    fitting_subgroup,
    is_abelian_subgroup,
    is_nilpotent_subgroup,
    is_normal,
    is_simple,
    nilpotency_class,
    normal_subgroups,
    subgroup_set,
)

FULL_ENUMERATION_LIMIT = 512

SMALL_ABELIAN_DEFINITION = "abelian H is 'cyclic mod Z(G)' when HZ(G)/Z(G) is cyclic"
CHARACTERISTIC_NOTE = "characteristic-ness is not machine-checked; verified as normal"


def min_normal_abelian_index(G: Group) -> tuple[int, Subgroup]:
    """Least ``|G:N|`` over normal abelian N, with the first witness in (order, elements) order."""
    if "min_normal_abelian" not in G._cache:
        best = None
        for N in normal_subgroups(G):
            if is_abelian_subgroup(G, N) and (best is None or N.order > best.order):
                best = N
        G._cache["min_normal_abelian"] = (G.order // best.order, best)
    return G._cache["min_normal_abelian"]


def min_abelian_index(G: Group) -> tuple[int, Subgroup]:
    best = None
    for H in all_subgroups(G):
        if is_abelian_subgroup(G, H) and (best is None or H.order > best.order):
            best = H
    return G.order // best.order, best


def verify_corollary2(G: Group) -> TheoremReport:
    lat = cd_lattice(G)
    bottom = lat.bottom
    cl = Checklist()
    cl.check("abelian", is_abelian_subgroup(G, bottom), bottom)
    cl.check("normal", is_normal(G, bottom), bottom)
    cl.check("index <= mu", bottom.index <= lat.mu, [bottom.index, lat.mu])
    witnesses = [("bottom", bottom), ("index", bottom.index), ("mu", lat.mu)]
    return report(G, "C2", True, cl.ok, witnesses + cl.failures, f"{cl.summary()}; {CHARACTERISTIC_NOTE}")


def central_quotient_is_nonabelian_simple(G: Group) -> bool:
    Q, _ = quotient(G, center(G))
    return not Q.is_abelian and is_simple(Q)


def verify_corollary3(G: Group) -> TheoremReport:
    if not central_quotient_is_nonabelian_simple(G):
        return report(G, "C3", False, detail="G/Z(G) is not a non-abelian simple group")
    Z = center(G)
    whole_mask = G.full_mask
    cds = cd_subgroups(G)
    m = mu(G)
    cl = Checklist()
    cl.check("CD set = {G, Z(G)}", cds.masks() == {whole_mask, Z.mask}, list(cds))
    cl.check("mu = |G:Z(G)|", m == Z.index, [m, Z.index])
    witnesses = [("mu", m), ("center", Z), ("cd_subgroups", list(cds))]
    return report(G, "C3", True, cl.ok, witnesses + cl.failures, cl.summary())


def direct_factors(G: Group, normals: SubgroupSet | None = None) -> SubgroupSet:
    """Normal subgroups that have a normal complement."""
    normals = list(normal_subgroups(G) if normals is None else normals)
    factors = []
    for H in normals:
        for K in normals:
            if H.mask & K.mask == 1 and H.order * K.order == G.order:
                factors.append(H)
                break
    return subgroup_set(G, factors)


def verify_theorem4(G: Group, mode: str = "auto") -> TheoremReport:
    """CD-subgroups versus direct factors when the Fitting subgroup is trivial.

    ``mode`` is ``"full"`` (exhaustive subgroup enumeration), ``"restricted"``
    (CD-subgroups found among centralizer subgroups, factors among normal
    subgroups generated by conjugacy classes) or ``"auto"``, which uses full
    mode up to order ``FULL_ENUMERATION_LIMIT`` and falls back to restricted
    mode when the subgroup budget runs out.
    """
    if not fitting_subgroup(G).is_trivial():
        return report(G, "T4", False, detail="Fitting subgroup is not trivial")
    restricted = mode == "restricted" or (mode == "auto" and G.order > FULL_ENUMERATION_LIMIT)
    if not restricted:
        try:
            m, cds = mu(G), cd_subgroups(G)
        except SubgroupBudgetExceeded:
            if mode == "full":
                raise
            restricted = True
    if restricted:
        m, cds = cd_subgroups_via_centralizers(G)
    factors = direct_factors(G)
    cl = Checklist()
    cl.check("CD set = direct factors", cds.masks() == factors.masks(), [list(cds), list(factors)])
    for F in factors:
        cl.check("factor has measure mu", cd_measure(G, F).value == m, F)
    witnesses = [("mu", m), ("direct_factors", list(factors)), ("cd_subgroups", list(cds))]
    detail = cl.summary()
    if restricted:
        detail += "; restricted: CD-subgroups minimised over centralizer subgroups only"
    return report(G, "T4", True, cl.ok, witnesses + cl.failures, detail, restricted=restricted)


def verify_theorem5(G: Group) -> TheoremReport:
    """Some normal abelian subgroup has index strictly below m(G,H) for every nilpotent H other than Z(G)."""
    if G.is_abelian:
        return report(G, "T5", False, detail="G is abelian")
    beta, N = min_normal_abelian_index(G)
    Z = center(G)
    tightest, tightest_value = None, None
    cl = Checklist()
    for H in all_subgroups(G):
        if H == Z or not is_nilpotent_subgroup(G, H):
            continue
        value = cd_measure(G, H).value
        cl.check("beta < m(G,H)", beta < value, [H, value])
        if tightest_value is None or value < tightest_value:
            tightest, tightest_value = H, value
    witnesses = [("beta", beta), ("normal_abelian", N), ("tightest_H", tightest), ("tightest_measure", tightest_value)]
    return report(G, "T5", True, cl.ok, witnesses + cl.failures, cl.summary())


def verify_theorem5_corollary(G: Group) -> TheoremReport:
    """``beta <= n^2/p`` where n is the least index of any abelian subgroup and p the least prime divisor of |G|."""
    if G.is_abelian:
        return report(G, "T5COR", False, detail="G is abelian")
    beta, N = min_normal_abelian_index(G)
    n, A = min_abelian_index(G)
    p = smallest_prime(G.order)
    bound = Fraction(n * n, p)
    integral = bound.denominator == 1
    ok = beta <= bound
    detail = f"beta={beta} n={n} p={p} bound={bound}"
    if not integral:
        detail += "; bound n^2/p is not an integer (recorded, compared exactly)"
    witnesses = [
        ("beta", beta),
        ("normal_abelian", N),
        ("n", n),
        ("abelian", A),
        ("p", p),
        ("bound", str(bound)),
        ("bound_integral", integral),
    ]
    if not ok:
        witnesses.append(("counterexample:beta > n^2/p", [beta, str(bound)]))
    return report(G, "T5COR", True, ok, witnesses, detail)


def small_abelian_subgroups(G: Group) -> bool:
    """Whether every abelian subgroup is cyclic modulo the center."""
    return _first_noncyclic_image(G) is None


def _first_noncyclic_image(G: Group) -> Subgroup | None:
    Z = center(G)
    Q, coset_of = quotient(G, Z)
    for H in all_subgroups(G):
        if not is_abelian_subgroup(G, H):
            continue
        image_order = H.order // H.meet(Z).order
        if int(Q.elem_order[coset_of[H.elements()]].max()) != image_order:
            return H
    return None


def _p_group_prime(G: Group) -> int | None:
    return prime_of_power(G.order) if G.order > 1 else None


def theorem6_cases(G: Group, p: int) -> dict[str, bool]:
    a = any(H.index == p and is_abelian_subgroup(G, H) for H in all_subgroups(G))
    b = False
    if p % 2 == 1:
        Q, _ = quotient(G, center(G))
        b = Q.order == p**3 and not Q.is_abelian and exponent(Q) == p
    c = nilpotency_class(G) == 2 and small_abelian_subgroups(G)
    return {"a": a, "b": b, "c": c}


def classify_theorem6(G: Group) -> TheoremReport:
    p = _p_group_prime(G)
    if p is None or G.is_abelian:
        return report(G, "T6", False, detail="G is not a non-abelian p-group")
    m = mu(G)
    beta, N = min_normal_abelian_index(G)
    if m % p:
        return report(G, "T6", True, False, [("counterexample:mu not divisible by p", [m, p])], f"mu={m} p={p}")
    if beta != m // p:
        return report(G, "T6", False, witnesses=[("beta", beta), ("mu", m)], detail=f"beta={beta} != mu/p={m // p}")
    cases = theorem6_cases(G, p)
    holding = [k for k, v in cases.items() if v]
    witnesses = [("beta", beta), ("mu", m), ("p", p), ("normal_abelian", N), ("cases", holding)]
    if not holding:
        witnesses.append(("counterexample:no case holds", G.label))
    detail = f"cases holding: {','.join(holding) or 'none'}; {SMALL_ABELIAN_DEFINITION}"
    return report(G, "T6", True, bool(holding), witnesses, detail)


def verify_partial_converses(G: Group) -> TheoremReport:
    p = _p_group_prime(G)
    if p is None or G.is_abelian:
        return report(G, "PCONV", False, detail="G is not a non-abelian p-group")
    m = mu(G)
    beta, _ = min_normal_abelian_index(G)
    z_index = center(G).index
    cases = theorem6_cases(G, p)
    abelian_max = cases["a"]
    n, _ = min_abelian_index(G)
    cl = Checklist()
    cl.check("mu=p^2 <=> abelian maximal", (m == p**2) == abelian_max, [m, abelian_max])
    cl.check(
        "mu=p^3 <=> no abelian maximal and |G:Z|=p^3",
        (m == p**3) == (not abelian_max and z_index == p**3),
        [m, abelian_max, z_index],
    )
    if m == p**4:
        cl.check("mu=p^4 => |G:Z|=p^4 or abelian of index <= p^2", z_index == p**4 or n <= p**2, [z_index, n])
    if cases["a"] or cases["b"]:
        cl.check("case a/b => beta = mu/p", beta * p == m, [beta, m])
    witnesses = [
        ("mu", m),
        ("p", p),
        ("center_index", z_index),
        ("abelian_maximal", abelian_max),
        ("min_abelian_index", n),
        ("beta", beta),
    ]
    return report(G, "PCONV", True, cl.ok, witnesses + cl.failures, cl.summary())


VERIFIERS = {
    "T1": lambda G: verify_theorem1(G, harness=True),
    "C2": verify_corollary2,
    "C3": verify_corollary3,
    "T4": verify_theorem4,
    "T5": verify_theorem5,
    "T5COR": verify_theorem5_corollary,
    "T6": classify_theorem6,
    "PCONV": verify_partial_converses,
}
