"""Finite groups given by multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product


class InvalidGroupError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on ``range(order)``; ``table[i][j]`` is the index of ``g_i g_j``."""

    labels: tuple
    table: tuple
    name: str = field(default="", compare=False)
    identity: int = field(init=False)
    inverse: tuple = field(init=False)

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "table", table)
        n = len(labels)
        if n == 0:
            raise InvalidGroupError("a group needs at least one element")
        if len(set(labels)) != n:
            raise InvalidGroupError("element labels must be distinct")
        if len(table) != n or any(len(row) != n for row in table):
            raise InvalidGroupError(f"multiplication table must be {n}x{n}")
        full = set(range(n))
        for i, row in enumerate(table):
            if set(row) != full:
                raise InvalidGroupError(f"row {i} of the table is not a permutation (not a Latin square)")
        for j in range(n):
            if {table[i][j] for i in range(n)} != full:
                raise InvalidGroupError(f"column {j} of the table is not a permutation (not a Latin square)")
        ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
        if not ids:
            raise InvalidGroupError("no two-sided identity element")
        e = ids[0]
        for a, b, c in product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InvalidGroupError(f"associativity fails at ({labels[a]}, {labels[b]}, {labels[c]})")
        inv = tuple(row.index(e) for row in table)
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", inv)

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    def to_dict(self) -> dict:
        out = {"elements": list(self.labels), "table": [list(r) for r in self.table]}
        if self.name:
            out["name"] = self.name
        return out


def cyclic_group(n: int, gen: str = "g") -> FiniteGroup:
    """``C_n = {1, g, g^2, ...}`` with ``g^i`` at index ``i``."""
    labels = ["1"] + [gen if i == 1 else f"{gen}^{i}" for i in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(tuple(labels), tuple(map(tuple, table)))


def symmetric_group(n: int) -> FiniteGroup:
    """Permutations of ``{0..n-1}`` in lexicographic order; ``(στ)(x) = σ(τ(x))``."""
    perms = list(permutations(range(n)))
    idx = {p: k for k, p in enumerate(perms)}
    table = [[idx[tuple(s[t[x]] for x in range(n))] for t in perms] for s in perms]
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    return FiniteGroup(tuple(labels), tuple(map(tuple, table)))


def trivial_group() -> FiniteGroup:
    return FiniteGroup(("1",), ((0,),))


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Row-major pairing ``(a, b) ↦ a * |h| + b``."""
    m = h.order
    labels = [f"({a},{b})" for a in g.labels for b in h.labels]
    table = [
        [g.table[a1][a2] * m + h.table[b1][b2] for a2 in range(g.order) for b2 in range(m)]
        for a1 in range(g.order)
        for b1 in range(m)
    ]
    return FiniteGroup(tuple(labels), tuple(map(tuple, table)))


def group_from_dict(data: dict) -> FiniteGroup:
    """Parse ``{"elements": [...], "table": [[...]]}``; table entries are indices or labels."""
    try:
        elements = list(data["elements"])
        rows = data["table"]
    except (KeyError, TypeError) as exc:
        raise InvalidGroupError("group needs 'elements' and 'table'") from exc
    table = []
    for row in rows:
        out = []
        for x in row:
            if isinstance(x, int) and not isinstance(x, bool):
                out.append(x)
            elif isinstance(x, str) and x in elements:
                out.append(elements.index(x))
            else:
                raise InvalidGroupError(f"table entry {x!r} is neither an index nor an element label")
        table.append(tuple(out))
    for row in table:
        for x in row:
            if not 0 <= x < len(elements):
                raise InvalidGroupError(f"table entry {x} out of range")
    return FiniteGroup(tuple(elements), tuple(table), name=str(data.get("name", "")))


def named_group(name: str) -> FiniteGroup:
    """``C<n>``, ``S3``, ``C2xC2``, ``1``."""
    G = _named_group(name)
    return FiniteGroup(G.labels, G.table, name=name.strip().upper().replace("X", "x"))


def _named_group(name: str) -> FiniteGroup:
    key = name.strip().upper()
    if key in ("1", "C1", "TRIVIAL"):
        return trivial_group()
    if "X" in key:
        parts = [_named_group(p) for p in key.split("X")]
        out = parts[0]
        for p in parts[1:]:
            out = direct_product(out, p)
        return out
    if key.startswith("C") and key[1:].isdigit():
        n = int(key[1:])
        return cyclic_group(n, gen="h" if n == 3 else "g")
    if key.startswith("S") and key[1:].isdigit():
        return symmetric_group(int(key[1:]))
    raise ValueError(f"unknown group name {name!r}")



def find_isomorphism(g: FiniteGroup, h: FiniteGroup) -> tuple[int, ...] | None:
    """A bijection ``f`` with ``f(ab) = f(a)f(b)``, by exhaustive search (small groups only)."""
    from itertools import permutations

    if g.order != h.order or g.is_abelian() != h.is_abelian():
        return None
    n = g.order
    for perm in permutations(range(n)):
        if perm[g.identity] != h.identity:
            continue
        if all(perm[g.mul(a, b)] == h.mul(perm[a], perm[b]) for a in range(n) for b in range(n)):
            return perm
    return None
