"""Named group families and the ``<family>:<param>`` descriptor grammar.

Grammar::

    spec    := product | family
    product := "product(" spec "," spec ")"
    family  := name (":" param)*

``corpus:<name>`` loads a checked-in group file from ``cdlab/corpus``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from importlib import resources

import numpy as np

from cdlab.errors import BadParameter, OrderLimitExceeded, ParseError, UnknownFamily
from cdlab.group import (
    DEFAULT_MAX_ORDER,
    Group,
    PermGenSet,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
)
from cdlab.numbers import is_prime


@dataclass(frozen=True)
class CatalogSpec:
    family: str
    params: tuple = ()
    factors: tuple["CatalogSpec", ...] = ()

    def __str__(self) -> str:
        if self.family == "product":
            return f"product({self.factors[0]},{self.factors[1]})"
        return ":".join([self.family, *map(str, self.params)])


def parse_spec(text: str) -> CatalogSpec:
    text = "".join(text.split())
    if not text:
        raise ParseError("empty group descriptor")
    if text.startswith("product(") and text.endswith(")"):
        inner = text[len("product(") : -1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    break
            elif ch == "," and depth == 0:
                return CatalogSpec("product", (), (parse_spec(inner[:i]), parse_spec(inner[i + 1 :])))
        raise ParseError(f"product needs two comma-separated factors: {text!r}")
    if "(" in text or ")" in text or "," in text:
        raise ParseError(f"malformed group descriptor {text!r}")
    family, *raw = text.split(":")
    if family not in FAMILIES:
        raise UnknownFamily(f"unknown group family {family!r}; known: {', '.join(sorted(FAMILIES))}")
    if family == "corpus":
        if len(raw) != 1 or not raw[0]:
            raise BadParameter("corpus needs exactly one name, e.g. corpus:sl2_5")
        return CatalogSpec(family, (raw[0],))
    try:
        params = tuple(int(p) for p in raw)
    except ValueError:
        raise BadParameter(f"parameters of {family!r} must be integers: {text!r}") from None
    arity = FAMILIES[family][0]
    if len(params) != arity:
        raise BadParameter(f"{family} takes {arity} parameter(s), got {len(params)}")
    return CatalogSpec(family, params)


def named(spec, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Build the group described by ``spec`` (a string or ``CatalogSpec``)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.family == "product":
        # factors may each be within the cap while the product is not
        left = named(spec.factors[0], max_order)
        right = named(spec.factors[1], max_order)
        return direct_product(left, right, max_order=max_order, label=str(spec))
    projected = projected_order(spec)
    if projected is not None and projected > max_order:
        raise OrderLimitExceeded(max_order, projected)
    build = FAMILIES[spec.family][1]
    return build(*spec.params, max_order=max_order).with_label(str(spec))


def projected_order(spec) -> int | None:
    """Order of the described group, or None when it is only known after loading."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    f, p = spec.family, spec.params
    if f == "product":
        a, b = (projected_order(s) for s in spec.factors)
        return None if a is None or b is None else a * b
    if f == "corpus":
        return None
    _check_params(f, p)
    if f == "cyclic":
        return p[0]
    if f == "dihedral":
        return 2 * p[0]
    if f == "dicyclic":
        return 4 * p[0]
    if f == "symmetric":
        return _factorial(p[0])
    if f == "alternating":
        return max(1, _factorial(p[0]) // 2)
    if f == "elementary_abelian":
        return p[0] ** p[1]
    if f == "wreath_cyclic":
        return p[0] ** (p[0] + 1)
    if f == "class2_cocycle":
        return p[0] ** 6
    return p[0] ** 3


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _check_params(family: str, p: tuple) -> None:
    def need(cond: bool, msg: str):
        if not cond:
            raise BadParameter(f"{family}: {msg}")

    if family in ("cyclic", "dihedral", "dicyclic"):
        need(p[0] >= 1, "n must be positive")
        if family == "dicyclic":
            need(p[0] >= 2, "n must be at least 2 (n=2 gives Q8)")
    elif family in ("symmetric", "alternating"):
        need(p[0] >= 1, "degree must be positive")
    elif family == "elementary_abelian":
        need(is_prime(p[0]), f"p={p[0]} is not prime")
        need(p[1] >= 0, "rank must be non-negative")
    elif family in ("heisenberg", "extraspecial_exp_p2", "wreath_cyclic", "class2_cocycle"):
        need(is_prime(p[0]), f"p={p[0]} is not prime")


def _from_product_rule(elements: list, mul, max_order: int) -> Group:
    if len(elements) > max_order:
        raise OrderLimitExceeded(max_order, len(elements))
    index = {e: i for i, e in enumerate(elements)}
    table = np.array([[index[mul(a, b)] for b in elements] for a in elements])
    return from_cayley_table(table)


def cyclic(n: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    _check_params("cyclic", (n,))
    if n > max_order:
        raise OrderLimitExceeded(max_order, n)
    idx = np.arange(n)
    return from_cayley_table((idx[:, None] + idx[None, :]) % n)


def dihedral(n: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Order ``2n``: ``r^a s^b`` has index ``a + n*b``."""
    _check_params("dihedral", (n,))
    elements = [(a, b) for b in range(2) for a in range(n)]

    def mul(x, y):
        (a, b), (c, d) = x, y
        return ((a + (-c if b else c)) % n, (b + d) % 2)

    return _from_product_rule(elements, mul, max_order)


def dicyclic(n: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Order ``4n``: ``<a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>``; ``a^k x^j`` has index ``k + 2n*j``."""
    _check_params("dicyclic", (n,))
    m = 2 * n
    elements = [(k, j) for j in range(2) for k in range(m)]

    def mul(x, y):
        (k, j), (l, i) = x, y
        if j == 0:
            return ((k + l) % m, i)
        if i == 0:
            return ((k - l) % m, 1)
        return ((k - l + n) % m, 0)

    return _from_product_rule(elements, mul, max_order)


def symmetric(n: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    _check_params("symmetric", (n,))
    if n <= 1:
        return cyclic(1)
    gens = [_cycle(n, [0, 1]), _cycle(n, list(range(n)))]
    return from_permutation_generators(PermGenSet(n, tuple(gens)), max_order=max_order)


def alternating(n: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    _check_params("alternating", (n,))
    if n <= 2:
        return cyclic(1)
    gens = [_cycle(n, [0, 1, k]) for k in range(2, n)]
    return from_permutation_generators(PermGenSet(n, tuple(gens)), max_order=max_order)


def _cycle(n: int, points: list[int]) -> tuple[int, ...]:
    img = list(range(n))
    for a, b in zip(points, points[1:] + points[:1]):
        img[a] = b
    return tuple(img)


def elementary_abelian(p: int, k: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    _check_params("elementary_abelian", (p, k))
    elements = list(itertools.product(range(p), repeat=k))

    def mul(x, y):
        return tuple((a + b) % p for a, b in zip(x, y))

    return _from_product_rule(elements, mul, max_order)


def heisenberg(p: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Unitriangular 3x3 matrices over GF(p); ``(a, b, c)`` is [[1,a,c],[0,1,b],[0,0,1]]."""
    _check_params("heisenberg", (p,))
    elements = list(itertools.product(range(p), repeat=3))

    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return ((a + d) % p, (b + e) % p, (c + f + a * e) % p)

    return _from_product_rule(elements, mul, max_order)


def extraspecial_exp_p2(p: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """``C_{p^2} ⋊ C_p`` with ``x y x^-1 = y^(1+p)``; ``(a, b)`` is ``y^a x^b``."""
    _check_params("extraspecial_exp_p2", (p,))
    q = p * p
    twist = [pow(1 + p, b, q) for b in range(p)]
    elements = [(a, b) for b in range(p) for a in range(q)]

    def mul(x, y):
        (a, b), (c, d) = x, y
        return ((a + c * twist[b]) % q, (b + d) % p)

    return _from_product_rule(elements, mul, max_order)


def wreath_cyclic(p: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """``C_p wr C_p`` acting on ``p*p`` points: a p-cycle on the first block plus the block shift."""
    _check_params("wreath_cyclic", (p,))
    n = p * p
    cycle = _cycle(n, list(range(p)))
    shift = tuple((i + p) % n for i in range(n))
    return from_permutation_generators(PermGenSet(n, (cycle, shift)), max_order=max_order)


def class2_cocycle(p: int, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Central extension of ``GF(p)^3`` by ``GF(p)^3``, order ``p^6``.

    ``(v, z)(w, z') = (v + w, z + z' + (v0 w1, v0 w2, v1 w2))``. The commutator
    of ``v`` and ``w`` is their wedge product, so the center is ``{(0, z)}``
    and no maximal subgroup is abelian.
    """
    _check_params("class2_cocycle", (p,))
    elements = list(itertools.product(range(p), repeat=6))

    def mul(x, y):
        v, w = x[:3], y[:3]
        beta = (v[0] * w[1], v[0] * w[2], v[1] * w[2])
        return tuple((a + b) % p for a, b in zip(v, w)) + tuple((x[3 + i] + y[3 + i] + beta[i]) % p for i in range(3))

    return _from_product_rule(elements, mul, max_order)


def corpus(name: str, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    from cdlab.io import parse_group_text

    try:
        text = resources.files("cdlab.corpus").joinpath(f"{name}.txt").read_text()
    except FileNotFoundError:
        raise BadParameter(f"no corpus group named {name!r}; known: {', '.join(corpus_names())}") from None
    return parse_group_text(text, max_order=max_order)


def corpus_names() -> list[str]:
    root = resources.files("cdlab.corpus")
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".txt"))


FAMILIES = {
    "cyclic": (1, cyclic),
    "dihedral": (1, dihedral),
    "dicyclic": (1, dicyclic),
    "symmetric": (1, symmetric),
    "alternating": (1, alternating),
    "elementary_abelian": (2, elementary_abelian),
    "heisenberg": (1, heisenberg),
    "extraspecial_exp_p2": (1, extraspecial_exp_p2),
    "wreath_cyclic": (1, wreath_cyclic),
    "class2_cocycle": (1, class2_cocycle),
    "corpus": (1, corpus),
}
