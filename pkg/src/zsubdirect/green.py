"""Green's J-relation on a finite semigroup: classes, poset, regularity.

Also the L / K / I split of a non-regular semigroup: K a minimal
non-regular J-class, I the ideal of everything strictly below it, L the
rest.  All class orderings and tie-breaks go by least element index so
downstream constructions are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .errors import NotSameRegularClass, RegularSemigroup
from .semigroup import FiniteSemigroup


@dataclass(frozen=True)
class JDecomposition:
    classes: tuple[tuple[int, ...], ...]          # sorted, ordered by least element
    strictly_below: frozenset[tuple[int, int]]    # (lower class id, upper class id)
    regular: tuple[bool, ...]
    minimal_ideal: int                            # class id
    class_index: tuple[int, ...]                  # element-1 -> class id

    def class_of(self, x: int) -> int:
        return self.class_index[x - 1]


@dataclass(frozen=True)
class LKIDecomposition:
    """K: chosen minimal non-regular J-class; I: ideal strictly below K; L: rest."""

    L: tuple[int, ...]
    K: tuple[int, ...]
    I: tuple[int, ...]


def j_leq(s: FiniteSemigroup, x: int, y: int) -> bool:
    """x lies in the two-sided ideal generated by y (search over S^1 x S^1)."""
    for u1 in range(s.order + 1):
        a = s.mul1(u1, y)
        for u2 in range(s.order + 1):
            if s.mul1(a, u2) == x:
                return True
    return False


@lru_cache(maxsize=None)
def j_decomposition(s: FiniteSemigroup) -> JDecomposition:
    n = s.order
    leq = [[False] * (n + 1) for _ in range(n + 1)]
    for x in s.elements:
        for y in s.elements:
            leq[x][y] = j_leq(s, x, y)

    assigned = [0] * (n + 1)
    classes: list[tuple[int, ...]] = []
    for x in s.elements:
        if assigned[x]:
            continue
        cls = tuple(y for y in s.elements if leq[x][y] and leq[y][x])
        for y in cls:
            assigned[y] = 1
        classes.append(cls)
    classes.sort(key=lambda c: c[0])

    class_index = [0] * n
    for ci, cls in enumerate(classes):
        for x in cls:
            class_index[x - 1] = ci

    below = set()
    for a, ca in enumerate(classes):
        for b, cb in enumerate(classes):
            if a != b and leq[ca[0]][cb[0]]:
                below.add((a, b))

    regular = tuple(
        any(s.mul(x, x) == x for x in cls) for cls in classes
    )
    minimal = [
        a for a in range(len(classes))
        if not any((b, a) in below for b in range(len(classes)))
    ]
    assert len(minimal) == 1, "a finite semigroup has a unique minimal J-class"
    assert regular[minimal[0]], "the minimal ideal is regular"
    return JDecomposition(
        tuple(classes), frozenset(below), regular, minimal[0], tuple(class_index)
    )


def j3_witnesses(s: FiniteSemigroup, x: int, y: int):
    """Least (u1, u2, v1, v2) inside the shared regular J-class with
    u1*x*u2 == y and v1*y*v2 == x."""
    dec = j_decomposition(s)
    ci = dec.class_of(x)
    if dec.class_of(y) != ci or not dec.regular[ci]:
        raise NotSameRegularClass(
            f"elements {s.name_of(x)} and {s.name_of(y)} do not share a regular J-class"
        )
    cls = dec.classes[ci]
    forward = backward = None
    for u1, u2 in iproduct(cls, cls):
        if s.mul(s.mul(u1, x), u2) == y:
            forward = (u1, u2)
            break
    for v1, v2 in iproduct(cls, cls):
        if s.mul(s.mul(v1, y), v2) == x:
            backward = (v1, v2)
            break
    assert forward and backward, "regular classes always carry in-class witnesses"
    return (*forward, *backward)


def s1_sandwich(s: FiniteSemigroup, x: int, y: int):
    """Least (u1, u2) over S^1 x S^1 with u1*x*u2 == y, or None. 0 is the identity."""
    for u1 in range(s.order + 1):
        a = s.mul1(u1, x)
        for u2 in range(s.order + 1):
            if s.mul1(a, u2) == y:
                return (u1, u2)
    return None


def lki_decomposition(s: FiniteSemigroup) -> LKIDecomposition:
    """Split a non-regular semigroup into L / K / I.

    K is the minimal non-regular J-class whose least element index is
    smallest; I collects every class strictly below K (all regular, and an
    ideal); L is the remainder.
    """
    dec = j_decomposition(s)
    nonreg = [ci for ci, r in enumerate(dec.regular) if not r]
    if not nonreg:
        raise RegularSemigroup("every J-class is regular")
    minimal_nonreg = [
        ci for ci in nonreg
        if not any((cj, ci) in dec.strictly_below for cj in nonreg)
    ]
    k = min(minimal_nonreg, key=lambda ci: dec.classes[ci][0])
    below = [ci for ci in range(len(dec.classes)) if (ci, k) in dec.strictly_below]
    kk = dec.classes[k]
    ii = tuple(sorted(x for ci in below for x in dec.classes[ci]))
    ll = tuple(sorted(set(s.elements) - set(kk) - set(ii)))

    assert ii, "below a non-regular class there is at least the minimal ideal"
    assert all(dec.regular[ci] for ci in below), "everything below K is regular"
    iset = set(ii)
    for t in s.elements:
        for i in ii:
            assert s.mul(t, i) in iset and s.mul(i, t) in iset, "I is an ideal"
    for a in kk:
        for b in kk:
            assert s.mul(a, b) in iset, "products from K fall into I"
    return LKIDecomposition(ll, kk, ii)
