"""Exception types shared across the package."""


class MalformedTable(ValueError):
    """Cayley table input is syntactically broken (row count, entry range, ...)."""


class NotAssociative(ValueError):
    """A Cayley table fails associativity; the message names the failing triple."""


class RegularSemigroup(ValueError):
    """Raised by operations that require a non-regular semigroup."""


class NotRegular(ValueError):
    """Raised by operations that require a regular semigroup (or element)."""


class NotSameRegularClass(ValueError):
    """Two elements were expected to share a regular J-class but do not."""


class EmptyGenerators(ValueError):
    """A generating set was empty."""


class WindowTooSmall(ValueError):
    """A generator lies outside the requested enumeration window."""


class StructureViolation(ValueError):
    """A value does not have the structural shape its context guarantees.

    Seeing this normally means the input description was not actually
    closed under products, or was corrupted.
    """


class GeneratorsNotInP(ValueError):
    """A candidate generating set contains a pair outside the product."""


class NotInP(ValueError):
    """A pair is not a member of the product it was queried against."""


class NotPMShaped(ValueError):
    """A fiber description does not follow the {0} / M / Z three-slice pattern."""


class UnsupportedParams(ValueError):
    """Corpus generator was asked for parameters outside its supported range."""
