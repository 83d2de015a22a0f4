"""Exception hierarchy.

Every failure mode carries enough context (witnessing element, triple, or
pair) to reproduce the violation by hand.
"""


class TwistedBurnsideError(Exception):
    """Base class for all errors raised by this package."""


class NotAssociative(TwistedBurnsideError):
    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__(
            f"multiplication table is not associative: "
            f"mul(mul({a},{b}),{c}) != mul({a},mul({b},{c}))"
        )


class NoIdentity(TwistedBurnsideError):
    def __init__(self):
        super().__init__("multiplication table has no two-sided identity")


class NoInverse(TwistedBurnsideError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class OrderLimitExceeded(TwistedBurnsideError):
    def __init__(self, order, cap):
        self.order = order
        self.cap = cap
        super().__init__(f"group order {order} exceeds the cap {cap} "
                         f"(override with TWB_ORDER_CAP)")


class UnknownName(TwistedBurnsideError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown builtin group name: {name!r}")


class NotGenerating(TwistedBurnsideError):
    def __init__(self, closure_size, order):
        self.closure_size = closure_size
        self.order = order
        super().__init__(
            f"given elements generate a subgroup of size {closure_size}, "
            f"not the whole group of order {order}"
        )


class NotAHomomorphism(TwistedBurnsideError):
    def __init__(self, x, y, detail=""):
        self.pair = (x, y)
        msg = f"map violates the homomorphism law at the pair ({x}, {y})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class SearchLimitExceeded(TwistedBurnsideError):
    pass


class LiftFailure(TwistedBurnsideError):
    """Internal inconsistency in the character-table lift.

    Impossible for a valid group; raised instead of returning bad data.
    """


class IncompatibleTwist(TwistedBurnsideError):
    def __init__(self, msg="B*theta != theta^eps*B"):
        super().__init__(msg)


class InfiniteClasses(TwistedBurnsideError):
    def __init__(self, msg="the twisted class set is infinite"):
        super().__init__(msg)


class InfiniteEntry(TwistedBurnsideError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"R(phi^{n}) is infinite, so the requested value "
                         f"is undefined")


class InvalidDescriptor(TwistedBurnsideError):
    """Malformed or schema-violating JSON input."""
