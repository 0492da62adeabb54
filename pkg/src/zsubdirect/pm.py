"""Three-slice subdirect products over a non-regular finite semigroup.

For a non-regular S split as L / K / I and a set M of non-negative
integers containing 0, the product described here has fibers {0} over L,
M over K, and all of Z over I.  Distinct M give non-isomorphic products;
rather than searching for isomorphisms, the module exposes the invariants
that pin M down (order classes, J-class sizes, first-coordinate rigidity
over K) and assembles them into certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInP, NotPMShaped, StructureViolation
from .green import (
    LKIDecomposition,
    j3_witnesses,
    j_decomposition,
    lki_decomposition,
    s1_sandwich,
)
from .intsets import UP, ZSet, zset, zset_sum
from .semigroup import FiniteSemigroup
from .subdirect import SubdirectDescription, is_subdirect

FINITE = "finite"
INFINITE = "infinite"


@dataclass(frozen=True)
class MSpec:
    """Finitely describable M: a finite support, plus an optional cofinal tail.

    Canonical form: support sorted, entries below the tail start, and the
    tail start not directly preceded by a support point (such points fold
    into the tail).  Equal membership sets therefore compare equal.
    """

    support: tuple[int, ...]
    tail_from: int | None = None

    @staticmethod
    def make(values, tail_from: int | None = None) -> "MSpec":
        supp = sorted({int(v) for v in values})
        if supp and supp[0] < 0:
            raise ValueError("M must consist of non-negative integers")
        if tail_from is not None:
            tail_from = int(tail_from)
            if tail_from < 0:
                raise ValueError("tail start must be non-negative")
            supp = [v for v in supp if v < tail_from]
            while tail_from - 1 in supp:
                supp.remove(tail_from - 1)
                tail_from -= 1
        if not (0 in supp or tail_from == 0):
            raise ValueError("M must contain 0")
        return MSpec(tuple(supp), tail_from)

    @staticmethod
    def parse(text: str) -> "MSpec":
        values = []
        tail = None
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError("empty M specification")
        for i, part in enumerate(parts):
            if part.startswith("+"):
                if i != len(parts) - 1:
                    raise ValueError("tail marker must come last")
                tail = int(part[1:])
            else:
                values.append(int(part))
        return MSpec.make(values, tail)

    def to_text(self) -> str:
        parts = [str(v) for v in self.support]
        if self.tail_from is not None:
            parts.append(f"+{self.tail_from}")
        return ",".join(parts)

    def __contains__(self, n: int) -> bool:
        if self.tail_from is not None and n >= self.tail_from:
            return True
        return n in self.support

    def to_zset(self) -> ZSet:
        rays = [(self.tail_from, 1, UP)] if self.tail_from is not None else []
        return zset(points=self.support, rays=rays)

    def scan_bound(self) -> int:
        vals = list(self.support)
        if self.tail_from is not None:
            vals.append(self.tail_from)
        return max(vals, default=0) + 1


@dataclass(frozen=True)
class PMProduct:
    semigroup: FiniteSemigroup
    lki: LKIDecomposition
    mspec: MSpec
    description: SubdirectDescription


@dataclass(frozen=True)
class Certificate:
    """Non-isomorphism certificate for two M-parameterised products."""

    m1: str
    m2: str
    witness: int
    witness_in_first: bool
    invariant_chain: tuple[str, ...]


def build_pm(s: FiniteSemigroup, m: MSpec) -> PMProduct:
    """Construct and verify the three-slice product for a non-regular S."""
    lki = lki_decomposition(s)  # raises RegularSemigroup on regular input
    zl, zk, zi = ZSet.of(0), m.to_zset(), ZSet.integers()
    fibers = []
    kset, iset = set(lki.K), set(lki.I)
    for x in s.elements:
        fibers.append(zk if x in kset else zi if x in iset else zl)
    desc = SubdirectDescription(s, tuple(fibers))
    for x in s.elements:
        for y in s.elements:
            if not zset_sum(desc.fiber(x), desc.fiber(y)) <= desc.fiber(s.mul(x, y)):
                raise StructureViolation(
                    f"product fiber over {s.name_of(s.mul(x, y))} is not closed"
                )
    if not is_subdirect(desc):
        raise StructureViolation("three-slice description failed subdirectness")
    return PMProduct(s, lki, m, desc)


def _require_member(p: PMProduct, pair) -> None:
    a, x = pair
    if not (1 <= x <= p.semigroup.order) or a not in p.description.fiber(x):
        raise NotInP(f"({a}, {x}) is not in the product")


def pm_j_related(p: PMProduct, alpha, beta) -> bool:
    """Structural J-relation on the product: related second coordinates, and
    equal first coordinates unless both land in the ideal slice."""
    _require_member(p, alpha)
    _require_member(p, beta)
    a, x = alpha
    b, y = beta
    dec = j_decomposition(p.semigroup)
    if dec.class_of(x) != dec.class_of(y):
        return False
    iset = set(p.lki.I)
    return a == b or (x in iset and y in iset)


def element_order_class(p: PMProduct, alpha) -> str:
    """FINITE for pairs with first coordinate 0, INFINITE otherwise."""
    _require_member(p, alpha)
    return FINITE if alpha[0] == 0 else INFINITE


def recover_m(description: SubdirectDescription, lki: LKIDecomposition) -> MSpec:
    """Read M back off the K-fibers of a three-slice shaped description."""
    s = description.semigroup
    for x in lki.L:
        if description.fiber(x) != ZSet.of(0):
            raise NotPMShaped(f"fiber over {s.name_of(x)} should be {{0}}")
    for x in lki.I:
        if description.fiber(x) != ZSet.integers():
            raise NotPMShaped(f"fiber over {s.name_of(x)} should be all of Z")
    k_fibers = {description.fiber(x) for x in lki.K}
    if len(k_fibers) != 1:
        raise NotPMShaped("all K-fibers must agree")
    zk = k_fibers.pop()
    if zk.lines or any(d != UP for *_, d in zk.rays) or len(zk.rays) > 1:
        raise NotPMShaped("K-fiber is not a finite-or-cofinal subset of N0")
    if zk.rays and zk.rays[0][1] != 1:
        raise NotPMShaped("K-fiber tail must have step 1 to be representable")
    if zk.sporadic and zk.sporadic[0] < 0:
        raise NotPMShaped("K-fiber must sit inside N0")
    tail = zk.rays[0][0] if zk.rays else None
    try:
        return MSpec.make(zk.sporadic, tail)
    except ValueError as exc:
        raise NotPMShaped(str(exc)) from None


_INVARIANT_CHAIN = (
    "pairs of finite order are exactly those with first coordinate 0, so the"
    " {0} x S slice is preserved by any isomorphism",
    "pairs with infinite J-class are exactly Z x I, so the Z x I slice is"
    " preserved",
    "over the ideal slice first coordinates transform by a global sign, and"
    " squaring a pair over K lands in the ideal slice, which forces first"
    " coordinates over K to be preserved exactly",
    "therefore the K-fiber sets of isomorphic products coincide",
)


def noniso_certificate(
    s: FiniteSemigroup, m1: MSpec, m2: MSpec
) -> Certificate | None:
    """Certificate that the two products are non-isomorphic, or None when
    m1 == m2 (same membership set, hence the same product)."""
    lki_decomposition(s)  # gate: raises RegularSemigroup on regular input
    if m1 == m2:
        return None
    bound = max(m1.scan_bound(), m2.scan_bound())
    witness = next(n for n in range(bound + 1) if (n in m1) != (n in m2))
    return Certificate(
        m1.to_text(),
        m2.to_text(),
        witness,
        witness in m1,
        _INVARIANT_CHAIN + (
            f"the K-fibers differ at {witness}, so the products are"
            " non-isomorphic",
        ),
    )


# -- witness machinery for the structural J-relation ------------------------


def mul_pair1(s: FiniteSemigroup, p, q):
    """Product in (Z x S)^1; element index 0 stands for the adjoined identity."""
    (a, x), (b, y) = p, q
    if x == 0:
        return (a + b, y)
    if y == 0:
        return (a + b, x)
    return (a + b, s.mul(x, y))


def pm_j_witnesses(p: PMProduct, alpha, beta):
    """Explicit sandwich witnesses ((c1,z1),(c2,z2),(d1,u1),(d2,u2)) in P^1
    carrying alpha to beta and back, or None when the pairs are unrelated.

    Witness first coordinates stay within |a| + |b| of 0.
    """
    _require_member(p, alpha)
    _require_member(p, beta)
    a, x = alpha
    b, y = beta
    s = p.semigroup
    dec = j_decomposition(s)
    if dec.class_of(x) != dec.class_of(y):
        return None
    if a == b:
        fwd = s1_sandwich(s, x, y)
        bwd = s1_sandwich(s, y, x)
        return ((0, fwd[0]), (0, fwd[1]), (0, bwd[0]), (0, bwd[1]))
    iset = set(p.lki.I)
    if x in iset and y in iset:
        u1, u2, v1, v2 = j3_witnesses(s, x, y)
        return ((b - a, u1), (0, u2), (a - b, v1), (0, v2))
    return None
