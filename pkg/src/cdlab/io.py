"""Line-based group files.

Two layouts are accepted::

    cayley <n>          perm <degree>
    <n rows of n ints>  <one generator per line, as an image list>

Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path

from cdlab.errors import BadParameter, ParseError
from cdlab.group import (
    DEFAULT_MAX_ORDER,
    Group,
    PermGenSet,
    from_cayley_table,
    from_permutation_generators,
)


def parse_group_text(text: str, max_order: int = DEFAULT_MAX_ORDER, label: str | None = None) -> Group:
    lines = [
        (num, line.strip())
        for num, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty group file")
    num, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("cayley", "perm"):
        raise ParseError(f"expected 'cayley <n>' or 'perm <degree>', got {header!r}", num)
    try:
        size = int(parts[1])
    except ValueError:
        raise ParseError(f"size must be an integer, got {parts[1]!r}", num) from None
    if size < 1:
        raise ParseError(f"size must be positive, got {size}", num)
    rows = []
    for num, line in lines[1:]:
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", num) from None
        if len(row) != size:
            raise ParseError(f"expected {size} entries, got {len(row)}", num)
        rows.append(row)
    if parts[0] == "cayley":
        if size > max_order:
            raise ParseError(f"order {size} exceeds the limit {max_order}", lines[0][0])
        if len(rows) != size:
            raise ParseError(f"expected {size} table rows, got {len(rows)}", lines[-1][0])
        return from_cayley_table(rows, label=label)
    try:
        gens = PermGenSet(size, tuple(tuple(r) for r in rows))
    except BadParameter as exc:
        raise ParseError(str(exc)) from None
    return from_permutation_generators(gens, max_order=max_order, label=label)


def load_group(path, max_order: int = DEFAULT_MAX_ORDER) -> Group:
    path = Path(path)
    return parse_group_text(path.read_text(), max_order=max_order, label=path.stem)


def cayley_text(G: Group) -> str:
    out = [f"cayley {G.order}"]
    if G.label:
        out.insert(0, f"# {G.label}")
    out.extend(" ".join(map(str, row)) for row in G.table.tolist())
    return "\n".join(out) + "\n"


def save_group(G: Group, path) -> None:
    Path(path).write_text(cayley_text(G))
