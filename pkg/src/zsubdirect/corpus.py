"""Generators for small test semigroups and their .cay files."""

from __future__ import annotations

import os
from itertools import product as iproduct

from .errors import UnsupportedParams
from .semigroup import FiniteSemigroup, serialize_cayley


def null_semigroup(n: int) -> FiniteSemigroup:
    """All products equal the last element."""
    if n < 1:
        raise UnsupportedParams("null semigroup needs order >= 1")
    rows = [[n] * n for _ in range(n)]
    names = [f"a{i}" for i in range(1, n)] + ["z"]
    return FiniteSemigroup.from_table(rows, names if n > 1 else ["z"])


def monogenic(index: int, period: int) -> FiniteSemigroup:
    """One generator s with s^(index+period) = s^index; order index+period-1."""
    if index < 1 or period < 1:
        raise UnsupportedParams("monogenic needs index >= 1 and period >= 1")
    n = index + period - 1

    def reduce(k: int) -> int:
        while k > n:
            k -= period
        return k

    rows = [[reduce(i + j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    names = [f"s{k}" for k in range(1, n + 1)]
    return FiniteSemigroup.from_table(rows, names)


def semilattice_chain(n: int) -> FiniteSemigroup:
    """Chain with meet = min."""
    if n < 1:
        raise UnsupportedParams("chain needs order >= 1")
    rows = [[min(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    names = [f"c{k}" for k in range(1, n + 1)]
    return FiniteSemigroup.from_table(rows, names)


def cyclic_group(n: int) -> FiniteSemigroup:
    if n < 1:
        raise UnsupportedParams("cyclic group needs order >= 1")
    rows = [[(i + j) % n + 1 for j in range(n)] for i in range(n)]
    names = [f"g{k}" for k in range(n)]
    return FiniteSemigroup.from_table(rows, names)


def symmetric_group_3() -> FiniteSemigroup:
    perms = sorted(iproduct((1, 2, 3), repeat=3))
    perms = [p for p in perms if len(set(p)) == 3]
    index = {p: i + 1 for i, p in enumerate(perms)}

    def compose(f, g):
        return tuple(f[g[i] - 1] for i in range(3))

    rows = [[index[compose(f, g)] for g in perms] for f in perms]
    names = ["p" + "".join(str(v) for v in p) for p in perms]
    return FiniteSemigroup.from_table(rows, names)


def full_transformation(n: int) -> FiniteSemigroup:
    """All maps on n points under composition; supported for n <= 3."""
    if not 1 <= n <= 3:
        raise UnsupportedParams("full transformation monoid supported for n <= 3")
    maps = sorted(iproduct(range(1, n + 1), repeat=n))
    index = {f: i + 1 for i, f in enumerate(maps)}

    def compose(f, g):
        return tuple(f[g[i] - 1] for i in range(n))

    rows = [[index[compose(f, g)] for g in maps] for f in maps]
    names = ["t" + "".join(str(v) for v in f) for f in maps]
    return FiniteSemigroup.from_table(rows, names)


def rectangular_band(p: int, q: int) -> FiniteSemigroup:
    """Elements (i, j) with (i, j)(k, l) = (i, l)."""
    if p < 1 or q < 1:
        raise UnsupportedParams("rectangular band needs positive dimensions")
    cells = [(i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
    index = {c: k + 1 for k, c in enumerate(cells)}
    rows = [[index[(a[0], b[1])] for b in cells] for a in cells]
    names = [f"b{i}{j}" for i, j in cells]
    return FiniteSemigroup.from_table(rows, names)


def standard_corpus() -> list[tuple[str, FiniteSemigroup]]:
    """The desk-scale corpus: 33 semigroups of order <= 27."""
    out: list[tuple[str, FiniteSemigroup]] = []
    for n in (2, 3, 4, 5):
        out.append((f"null{n}", null_semigroup(n)))
    for i in (1, 2, 3, 4):
        for p in (1, 2, 3):
            out.append((f"mono_i{i}_p{p}", monogenic(i, p)))
    for n in (1, 2, 3, 4, 5):
        out.append((f"chain{n}", semilattice_chain(n)))
    for n in (2, 3, 4, 5, 6):
        out.append((f"c{n}", cyclic_group(n)))
    out.append(("s3", symmetric_group_3()))
    for p, q in ((2, 2), (2, 3), (3, 2), (3, 3)):
        out.append((f"band_{p}x{q}", rectangular_band(p, q)))
    out.append(("t2", full_transformation(2)))
    out.append(("t3", full_transformation(3)))
    return out


def corpus_generate(kind: str, params, outdir: str) -> list[str]:
    """Write .cay files for one generator kind (or the whole standard corpus)."""
    items: list[tuple[str, FiniteSemigroup]]
    if kind == "null":
        (n,) = _ints(params, 1)
        items = [(f"null{n}", null_semigroup(n))]
    elif kind == "monogenic":
        i, p = _ints(params, 2)
        items = [(f"mono_i{i}_p{p}", monogenic(i, p))]
    elif kind == "semilattice_chain":
        (n,) = _ints(params, 1)
        items = [(f"chain{n}", semilattice_chain(n))]
    elif kind == "group":
        if len(params) == 2 and params[0] == "cyclic":
            n = int(params[1])
            items = [(f"c{n}", cyclic_group(n))]
        elif len(params) == 2 and params[0] == "sym" and params[1] == "3":
            items = [("s3", symmetric_group_3())]
        else:
            raise UnsupportedParams("group expects 'cyclic N' or 'sym 3'")
    elif kind == "full_transformation":
        (n,) = _ints(params, 1)
        items = [(f"t{n}", full_transformation(n))]
    elif kind == "rectangular_band":
        p, q = _ints(params, 2)
        items = [(f"band_{p}x{q}", rectangular_band(p, q))]
    elif kind == "standard":
        if params:
            raise UnsupportedParams("standard takes no parameters")
        items = standard_corpus()
    else:
        raise UnsupportedParams(f"unknown corpus kind {kind!r}")
    os.makedirs(outdir, exist_ok=True)
    paths = []
    for name, s in items:
        path = os.path.join(outdir, f"{name}.cay")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(serialize_cayley(s))
        paths.append(path)
    return paths


def _ints(params, count: int) -> list[int]:
    if len(params) != count:
        raise UnsupportedParams(f"expected {count} integer parameter(s)")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UnsupportedParams(f"expected integer parameters, got {params}") from None
