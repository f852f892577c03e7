class PositroidsError(ValueError):
    """Base class for invalid-input errors raised by this package."""


class EmptyBasisSet(PositroidsError):
    pass


class UnequalBasisSizes(PositroidsError):
    pass


class ExchangeViolation(PositroidsError):
    def __init__(self, b1, b2, x):
        self.b1, self.b2, self.element = b1, b2, x
        from .bits import fmt

        super().__init__(
            f"exchange fails for B1={fmt(b1)}, B2={fmt(b2)}, b1={x}: "
            "no b2 in B2-B1 gives a basis"
        )


class GroundSetError(PositroidsError):
    pass


class OverlappingGroundSets(PositroidsError):
    pass


class WrongArity(PositroidsError):
    pass


class AllZero(PositroidsError):
    pass


class SupportNotMatroid(PositroidsError):
    pass


class GPViolation(PositroidsError):
    def __init__(self, v, ys):
        self.v = tuple(v)
        self.ys = tuple(ys)
        super().__init__(
            f"three-term Grassmann-Plucker relation fails at v={self.v}, y={self.ys}"
        )


class NoBasisExtension(PositroidsError):
    pass


class NotDisjoint(PositroidsError):
    pass


class WrongSize(PositroidsError):
    pass


class RankDeficient(PositroidsError):
    pass


class NotIncreasing(PositroidsError):
    pass


class NotAPositroid(PositroidsError):
    pass


class NotComparable(PositroidsError):
    pass


class ShapeMismatch(PositroidsError):
    pass


class ParseError(PositroidsError):
    pass


class UnknownTheorem(PositroidsError):
    pass
