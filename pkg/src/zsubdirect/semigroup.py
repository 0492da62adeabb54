"""Finite semigroups given by Cayley tables, and element-level regularity.

Elements are 1-based indices into the table.  Operations that need an
identity treat index 0 as a virtual adjoined identity instead of
materialising a bigger table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedTable, NotAssociative

MAX_ORDER = 256


@dataclass(frozen=True)
class FiniteSemigroup:
    """Validated Cayley table.  table[i-1][j-1] is the product of i and j."""

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(1, self.order + 1)

    def mul(self, x: int, y: int) -> int:
        return self.table[x - 1][y - 1]

    def mul1(self, x: int, y: int) -> int:
        """Product in S with 0 acting as a virtual adjoined identity."""
        if x == 0:
            return y
        if y == 0:
            return x
        return self.table[x - 1][y - 1]

    def name_of(self, x: int) -> str:
        return self.names[x - 1] if self.names else str(x)

    def index_of(self, token: str) -> int:
        """Resolve an element name or a 1-based index string."""
        if self.names and token in self.names:
            return self.names.index(token) + 1
        try:
            idx = int(token)
        except ValueError:
            raise MalformedTable(f"unknown element {token!r}") from None
        if not 1 <= idx <= self.order:
            raise MalformedTable(f"element index {idx} out of range 1..{self.order}")
        return idx

    @staticmethod
    def from_table(rows, names=None) -> "FiniteSemigroup":
        n = len(rows)
        if n < 1:
            raise MalformedTable("empty table")
        if n > MAX_ORDER:
            raise MalformedTable(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        table = []
        for i, row in enumerate(rows, 1):
            row = tuple(int(v) for v in row)
            if len(row) != n:
                raise MalformedTable(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row, 1):
                if not 1 <= v <= n:
                    raise MalformedTable(
                        f"entry at row {i}, column {j} is {v}, outside 1..{n}"
                    )
            table.append(row)
        table = tuple(table)
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != n:
                raise MalformedTable(f"{len(names)} names for {n} elements")
            if len(set(names)) != n:
                raise MalformedTable("element names must be distinct")
            for s in names:
                if not s or any(ch.isspace() for ch in s):
                    raise MalformedTable(f"bad element name {s!r}")
                if _is_int(s):
                    raise MalformedTable(
                        f"name {s!r} looks like an integer; names must not"
                    )
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                ij = table[i - 1][j - 1]
                row_ij = table[ij - 1]
                row_i = table[i - 1]
                for k in range(1, n + 1):
                    if row_ij[k - 1] != row_i[table[j - 1][k - 1] - 1]:
                        labels = names or tuple(str(v) for v in range(1, n + 1))
                        raise NotAssociative(
                            f"({labels[i-1]}*{labels[j-1]})*{labels[k-1]} != "
                            f"{labels[i-1]}*({labels[j-1]}*{labels[k-1]}) "
                            f"at triple ({i},{j},{k})"
                        )
        return FiniteSemigroup(table, names)


def _is_int(token: str) -> bool:
    try:
        int(token)
        return True
    except ValueError:
        return False


def parse_cayley(text: str) -> FiniteSemigroup:
    """Parse the .cay format.

    '#' lines and blank lines are skipped.  First data line: the order n.
    Optional next line: n distinct names (detected by any non-integer
    token).  Then n rows of n 1-based products.  LF or CRLF.
    """
    data = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line))
    if not data:
        raise MalformedTable("no data lines")
    lineno, head = data[0]
    if not _is_int(head):
        raise MalformedTable(f"line {lineno}: expected the order, got {head!r}")
    n = int(head)
    if not 1 <= n <= MAX_ORDER:
        raise MalformedTable(f"line {lineno}: order {n} outside 1..{MAX_ORDER}")
    rest = data[1:]
    names = None
    if rest and any(not _is_int(tok) for tok in rest[0][1].split()):
        names = rest[0][1].split()
        rest = rest[1:]
    if len(rest) != n:
        raise MalformedTable(f"expected {n} table rows, found {len(rest)}")
    rows = []
    for i, (lineno, line) in enumerate(rest, 1):
        toks = line.split()
        if len(toks) != n or not all(_is_int(t) for t in toks):
            raise MalformedTable(f"line {lineno}: row {i} is not {n} integers")
        rows.append([int(t) for t in toks])
    return FiniteSemigroup.from_table(rows, names)


def serialize_cayley(s: FiniteSemigroup) -> str:
    out = [str(s.order)]
    if s.names:
        out.append(" ".join(s.names))
    for row in s.table:
        out.append(" ".join(str(v) for v in row))
    return "\n".join(out) + "\n"


def product(s: FiniteSemigroup, x: int, y: int) -> int:
    return s.mul(x, y)


def idempotents(s: FiniteSemigroup) -> frozenset[int]:
    return frozenset(x for x in s.elements if s.mul(x, x) == x)


def regular_witness(s: FiniteSemigroup, x: int) -> int | None:
    """A generalised inverse of x, or None when x is not regular.

    Scans y in index order for x*y*x == x and returns y*x*y, which
    satisfies both x*w*x == x and w*x*w == w.
    """
    for y in s.elements:
        if s.mul(s.mul(x, y), x) == x:
            return s.mul(s.mul(y, x), y)
    return None


def is_regular_semigroup(s: FiniteSemigroup) -> bool:
    return all(regular_witness(s, x) is not None for x in s.elements)


def is_completely_regular(s: FiniteSemigroup) -> bool:
    """True iff every element recurs among its own higher powers.

    That happens exactly when the element sits inside a subgroup, so this
    is the union-of-groups property, decided without any J-machinery.
    """
    for x in s.elements:
        p = s.mul(x, x)
        seen = set()
        while p not in seen:
            if p == x:
                break
            seen.add(p)
            p = s.mul(p, x)
        else:
            return False
    return True


def n_condition(s: FiniteSemigroup) -> bool:
    """True iff every element has some one-sided local identity (st=s or ts=s)."""
    return all(
        any(s.mul(x, t) == x or s.mul(t, x) == x for t in s.elements)
        for x in s.elements
    )
