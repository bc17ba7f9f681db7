"""Chermak-Delgado measure, the CD-subgroups and their lattice."""

from __future__ import annotations

from dataclasses import dataclass

from cdlab import bitmask
from cdlab.errors import LatticeViolation
from cdlab.group import Group
from cdlab.report import Checklist, TheoremReport, report
from cdlab.subgroups import (
    Subgroup,
    SubgroupSet,
    all_subgroups,
    centralizer,
    element_centralizers,
    is_subnormal,
    permutes_with_conjugates,
    set_product,
    subgroup_set,
)


@dataclass(frozen=True)
class CDMeasure:
    """``m(G,H) = |G:H| * |G:C_G(H)|``, an index product rather than an order product."""

    subgroup_index: int
    centralizer_index: int

    @property
    def value(self) -> int:
        return self.subgroup_index * self.centralizer_index


def cd_measure(G: Group, H: Subgroup) -> CDMeasure:
    C = centralizer(G, H)
    return CDMeasure(G.order // H.order, G.order // C.order)


def _minimisers(G: Group, candidates) -> tuple[int, SubgroupSet]:
    best, members = None, []
    for H in candidates:
        value = cd_measure(G, H).value
        if best is None or value < best:
            best, members = value, [H]
        elif value == best:
            members.append(H)
    return best, subgroup_set(G, members)


def _exhaustive(G: Group) -> tuple[int, SubgroupSet]:
    if "cd" not in G._cache:
        G._cache["cd"] = _minimisers(G, all_subgroups(G))
    return G._cache["cd"]


def mu(G: Group) -> int:
    """Minimum of the measure over every subgroup."""
    return _exhaustive(G)[0]


def cd_subgroups(G: Group) -> SubgroupSet:
    return _exhaustive(G)[1]


def centralizer_subgroups(G: Group) -> SubgroupSet:
    """Every subgroup of the form ``C_G(X)``, as intersections of element centralizers."""
    if "centralizer_subgroups" in G._cache:
        return G._cache["centralizer_subgroups"]
    atoms = sorted(set(element_centralizers(G)))
    found = set(atoms)
    work = list(atoms)
    while work:
        m = work.pop()
        for a in atoms:
            x = m & a
            if x not in found:
                found.add(x)
                work.append(x)
    result = subgroup_set(G, (Subgroup(G, m) for m in found))
    G._cache["centralizer_subgroups"] = result
    return result


def _centralizer_of_mask(G: Group, mask: int) -> int:
    cent = element_centralizers(G)
    out = G.full_mask
    for g in bitmask.iter_bits(mask):
        out &= cent[g]
    return out


def cd_subgroups_via_centralizers(G: Group) -> tuple[int, SubgroupSet]:
    """``(mu, CD-subgroups)`` without enumerating all subgroups.

    Since ``H <= C(C(H))`` and ``C(C(C(H))) = C(H)``, replacing H by its
    double centralizer never increases the measure, and leaves it unchanged
    only when ``H = C(C(H))``. So the minimum is attained exactly at
    centralizer subgroups, which are intersections of element centralizers.
    """
    best, members = None, []
    for H in centralizer_subgroups(G):
        c_order = _centralizer_of_mask(G, H.mask).bit_count()
        value = (G.order // H.order) * (G.order // c_order)
        if best is None or value < best:
            best, members = value, [H]
        elif value == best:
            members.append(H)
    return best, subgroup_set(G, members)


@dataclass(frozen=True)
class CDLattice:
    parent: Group
    mu: int
    members: SubgroupSet
    top: Subgroup
    bottom: Subgroup
    duality: dict

    def dual(self, H: Subgroup) -> Subgroup:
        return self.duality[H.mask]

    def covers(self) -> list[tuple[Subgroup, Subgroup]]:
        """Pairs ``(H, K)`` with ``H < K`` and no member strictly between."""
        ms = list(self.members)
        out = []
        for H in ms:
            for K in ms:
                if H < K and not any(H < L < K for L in ms):
                    out.append((H, K))
        return out


def cd_lattice(G: Group, members: SubgroupSet | None = None, mu_value: int | None = None) -> CDLattice:
    """Assemble the lattice from the CD-subgroups (exhaustively found by default).

    Raises ``LatticeViolation`` if there is not a unique maximal and a unique
    minimal member.
    """
    if members is None:
        mu_value, members = _exhaustive(G)
    ms = list(members)
    maximal = [H for H in ms if not any(H < K for K in ms)]
    minimal = [H for H in ms if not any(K < H for K in ms)]
    if len(maximal) != 1:
        raise LatticeViolation("CD-subgroups have more than one maximal element", (maximal[0], maximal[1]))
    if len(minimal) != 1:
        raise LatticeViolation("CD-subgroups have more than one minimal element", (minimal[0], minimal[1]))
    duality = {H.mask: centralizer(G, H) for H in ms}
    return CDLattice(G, mu_value, members, maximal[0], minimal[0], duality)


def verify_theorem1(G: Group, lattice: CDLattice | None = None, harness: bool = False) -> TheoremReport:
    """Check the lattice properties of the CD-subgroups on G.

    With ``harness=True`` a ``LatticeViolation`` becomes a failing report
    instead of propagating.
    """
    if lattice is None:
        try:
            lattice = cd_lattice(G)
        except LatticeViolation as exc:
            if not harness:
                raise
            return report(G, "T1", True, False, [("offending_pair", list(exc.pair or []))], str(exc))
    members = list(lattice.members)
    masks = lattice.members.masks()
    cl = Checklist()
    cent = {H.mask: lattice.dual(H) for H in members}
    for i, H in enumerate(members):
        for K in members[i:]:
            hk = set_product(G, H, K)
            kh = set_product(G, K, H)
            cl.check("HK=KH", hk == kh, [H, K])
            cl.check("join=HK is CD", hk == H.join(K).mask and hk in masks, [H, K])
            meet = H.meet(K)
            cl.check("meet is CD", meet.mask in masks, [H, K])
            lhs = centralizer(G, meet)
            rhs = set_product(G, cent[H.mask], cent[K.mask])
            cl.check("C(H meet K)=C(H)C(K)", lhs.mask == rhs, [H, K])
            if H <= K:
                cl.check("duality reverses order", cent[K.mask] <= cent[H.mask], [H, K])
            if K <= H:
                cl.check("duality reverses order", cent[H.mask] <= cent[K.mask], [K, H])
    images = set()
    for H in members:
        C = cent[H.mask]
        images.add(C.mask)
        cl.check("C(H) is CD", C.mask in masks, H)
        cl.check("C(C(H))=H", centralizer(G, C) == H, H)
        cl.check("subnormal", is_subnormal(G, H), H)
        cl.check("permutes with conjugates", permutes_with_conjugates(G, H), H)
    cl.check("duality is onto", images == set(masks), sorted(set(masks) ^ images))
    top, bottom = lattice.top, lattice.bottom
    cl.check("m(G)=Z(M(G))", bottom == top.meet(centralizer(G, top)), [top, bottom])
    cl.check("M(G)=C(m(G))", top == centralizer(G, bottom), [top, bottom])
    witnesses = [("mu", lattice.mu), ("members", len(members)), ("top", top), ("bottom", bottom)]
    return report(G, "T1", True, cl.ok, witnesses + cl.failures, cl.summary())


def lattice_dot(lattice: CDLattice) -> str:
    """Hasse diagram in DOT; nodes in (order, elements) order, edges point up."""
    G = lattice.parent
    ms = list(lattice.members)
    name = {H.mask: f"n{i}" for i, H in enumerate(ms)}
    lines = [f'digraph "{G.label or "G"}" {{', "  rankdir=BT;"]
    for H in ms:
        attrs = [f'label="order={H.order}, index={G.order // H.order}"']
        marks = []
        if H == lattice.top:
            marks.append("M(G)")
            attrs.append("shape=doublecircle")
        if H == lattice.bottom:
            marks.append("m(G)")
            if H != lattice.top:
                attrs.append("shape=box")
        if marks:
            attrs.append(f'xlabel="{"/".join(marks)}"')
            attrs.append("style=bold")
        lines.append(f"  {name[H.mask]} [{', '.join(attrs)}];")
    for H, K in lattice.covers():
        lines.append(f"  {name[H.mask]} -> {name[K.mask]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
