"""Group catalogs: the built-in list and catalog files.

A catalog file has one group descriptor per line, optionally followed by a
per-entry order cap::

    # comment
    dihedral:4
    product(symmetric:3,cyclic:2)  64
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from cdlab.errors import ParseError
from cdlab.families import CatalogSpec, parse_spec, projected_order
from cdlab.numbers import is_prime
from cdlab.subgroups import DEFAULT_JOIN_BUDGET, DEFAULT_SUBGROUP_BUDGET, gaussian_binomial

CURATED_PRODUCTS = (
    "product(symmetric:3,cyclic:2)",
    "product(symmetric:3,cyclic:3)",
    "product(dihedral:4,cyclic:2)",
    "product(dicyclic:2,cyclic:2)",
    "product(dicyclic:3,cyclic:2)",
    "product(alternating:4,cyclic:2)",
    "product(dihedral:4,cyclic:4)",
    "product(dihedral:8,cyclic:2)",
    "product(symmetric:3,symmetric:3)",
    "product(symmetric:3,dihedral:4)",
    "product(symmetric:4,cyclic:2)",
    "product(dihedral:4,dihedral:4)",
    "product(dicyclic:2,dihedral:4)",
    "product(dicyclic:2,dicyclic:2)",
    "product(heisenberg:3,cyclic:3)",
    "product(extraspecial_exp_p2:3,cyclic:3)",
    "product(cyclic:2,alternating:5)",
)

# corpus groups are only sized once loaded
CORPUS_ORDERS = {"corpus:sl2_5": 120}


@dataclass(frozen=True)
class CatalogEntry:
    spec: CatalogSpec
    max_order: int | None = None

    def __str__(self) -> str:
        return str(self.spec)


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]
    source: str = "built-in"

    def __post_init__(self):
        seen = set()
        for e in self.entries:
            key = str(e.spec)
            if key in seen:
                raise ParseError(f"duplicate catalog entry {key}")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def specs(self) -> list[str]:
        return [str(e) for e in self.entries]


def elementary_abelian_feasible(p: int, k: int) -> bool:
    """Whether ``all_subgroups`` would accept ``GF(p)^k`` under the default budgets."""
    count = sum(gaussian_binomial(k, j, p) for j in range(k + 1))
    cyclics = (p**k - 1) // (p - 1)
    return count <= DEFAULT_SUBGROUP_BUDGET and count * cyclics <= DEFAULT_JOIN_BUDGET


def default_catalog(max_order: int = 128) -> Catalog:
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    specs: list[str] = []
    specs += [f"cyclic:{n}" for n in range(1, max_order + 1)]
    specs += [f"dihedral:{n}" for n in range(3, max_order // 2 + 1)]
    specs += [f"dicyclic:{n}" for n in range(2, max_order // 4 + 1)]
    for p in range(2, max_order + 1):
        if not is_prime(p):
            continue
        k = 2
        while p**k <= max_order:
            if elementary_abelian_feasible(p, k):
                specs.append(f"elementary_abelian:{p}:{k}")
            k += 1
    specs += [f"symmetric:{n}" for n in (3, 4, 5)]
    specs += [f"alternating:{n}" for n in (4, 5)]
    for p in (3, 5, 7):
        specs += [f"heisenberg:{p}", f"extraspecial_exp_p2:{p}"]
    specs += ["wreath_cyclic:3", "class2_cocycle:2"]
    specs += list(CURATED_PRODUCTS)
    specs.append("corpus:sl2_5")
    entries = []
    for text in specs:
        spec = parse_spec(text)
        order = projected_order(spec)
        if order is None:
            order = CORPUS_ORDERS.get(str(spec))
        if order is not None and order <= max_order:
            entries.append(CatalogEntry(spec))
    return Catalog(tuple(entries))


def parse_catalog(text: str, source: str = "<string>") -> Catalog:
    entries = []
    for num, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        # the cap is a trailing integer token after the descriptor
        head, _, tail = line.rpartition(" ")
        cap = None
        if head and tail.isdigit():
            line, cap = head.strip(), int(tail)
        try:
            entries.append(CatalogEntry(parse_spec(line), cap))
        except ValueError as exc:
            raise ParseError(str(exc), num) from None
    try:
        return Catalog(tuple(entries), source)
    except ParseError as exc:
        raise ParseError(f"{source}: {exc}") from None


def load_catalog(path) -> Catalog:
    path = Path(path)
    return parse_catalog(path.read_text(), str(path))
