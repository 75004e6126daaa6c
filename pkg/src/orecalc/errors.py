"""Exception hierarchy shared by all orecalc modules.

Every error raised by the library derives from OreCalcError, so callers
(notably the CLI) can map failures to exit codes in one place.
"""


class OreCalcError(Exception):
    """Base class for all orecalc errors."""


# -- scalar arithmetic ------------------------------------------------------

class ZeroDenominator(OreCalcError):
    """Rational function constructed with a zero denominator."""


class DivisionByZero(OreCalcError):
    """Field division or inversion of zero."""


# -- Ore polynomial arithmetic ----------------------------------------------

class ContextMismatch(OreCalcError):
    """Operands carry different Ore contexts."""


class DivisionByZeroOperator(OreCalcError):
    """Euclidean division by the zero operator."""


class BothZero(OreCalcError):
    """gcd of (0, 0) requested."""


class ZeroArgument(OreCalcError):
    """lcm with a zero argument requested."""


# -- witnesses ---------------------------------------------------------------

class ZeroTarget(OreCalcError):
    """Witness requested for the zero element."""


class NotSimpleContext(OreCalcError):
    """Witness machinery invoked outside the differential context."""


class SearchExhausted(OreCalcError):
    """Two-term witness search hit its retry cap."""

    def __init__(self, message, transcript=None):
        super().__init__(message)
        self.transcript = transcript or []


class TooManyTerms(OreCalcError):
    """Witness has more terms than there are factors to split over."""


class ZeroProduct(OreCalcError):
    """Factor list with zero product passed to a split."""


# -- finite testbed ----------------------------------------------------------

class NotUnimodularPair(OreCalcError):
    """Pair (a, b) does not satisfy aR + bR = R."""


class NoTwoTermWitness(OreCalcError):
    """Element admits no witness with at most two terms."""


class BothProductsZero(OreCalcError):
    """Both ab = 0 and ba = 0; the two-by-two reduction does not apply."""


class RingTooLarge(OreCalcError):
    """Exhaustive scan requested for a ring outside the supported sizes."""


# -- matrices ----------------------------------------------------------------

class DimensionMismatch(OreCalcError):
    """Matrix dimensions incompatible with the requested operation."""


class NotFull(OreCalcError):
    """Square matrix of deficient rank where a full matrix is required."""


class NotUnimodular(OreCalcError):
    """Vector does not generate the full ring; carries the obstruction."""

    def __init__(self, message, obstruction=None):
        super().__init__(message)
        self.obstruction = obstruction


class WitnessTooLong(OreCalcError):
    """No witness with few enough terms was found for a reduction step."""

    def __init__(self, message, transcript=None):
        super().__init__(message)
        self.transcript = transcript or []


# -- parsing and file formats -------------------------------------------------

class ExprSyntaxError(OreCalcError):
    """Malformed operator expression; records position and expectations."""

    def __init__(self, message, position, expected=()):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.expected = tuple(expected)


class DivByOperator(OreCalcError):
    """Division by a subexpression involving the operator symbol."""


class FormatError(OreCalcError):
    """Malformed matrix or certificate file."""
