"""Exception and warning taxonomy shared across the package.

Every raised condition that a caller can act on gets its own class so the
CLI can map failures to exit codes without string matching.
"""


class BetastarError(Exception):
    """Base class for all package errors."""


# parameter derivation
class ComplexRoots(BetastarError):
    """The quadratic for (mu, nu) has no real solution."""


class NegativeRoot(BetastarError):
    """A derived parameter root is negative."""


class XiOutOfRangeWarning(UserWarning):
    """xi = 1 - delta + delta*zeta left [0, 1/2], outside the theorem regime."""


# power series
class NonUnitConstantTerm(BetastarError):
    """Series log/pow requires constant term 1."""


class NonZeroConstantTerm(BetastarError):
    """Series exp requires constant term 0."""


class ZeroDenominator(BetastarError):
    """Logarithmic derivative evaluated where the series vanishes."""


# special functions
class DivergentSeries(BetastarError):
    """Hypergeometric series fails its convergence test or term cap."""


class BadDenominator(BetastarError):
    """A lower hypergeometric parameter is zero or a negative integer."""


class NonPositiveArgument(BetastarError):
    """log-gamma needs a strictly positive argument."""


# quadrature
class NoConvergence(BetastarError):
    """Quadrature level doubling did not stabilize (or integrand returned NaN)."""


# weight catalog
class ParamOutOfRange(BetastarError):
    """Weight parameter outside its documented admissible range."""


# kernel evaluation
class SeriesDiverged(BetastarError):
    """Kernel series summation exceeded its term cap (defensive)."""


# beta solver
class RatioIsMinusOne(BetastarError):
    """beta/(1-beta) <= -1: beta -> -inf, parameters inadmissible."""


# condition checker
class PreconditionViolated(BetastarError):
    """A theorem-level precondition (delta/mu/nu/alpha constraint) fails."""


class UnknownOperator(BetastarError):
    """No parameter-bound table exists for this weight kind."""


class NotCovered(BetastarError):
    """The requested regime (gamma=0 with xi>0) has no stated sufficient bound."""


# disk verifier
class TailTooLarge(BetastarError):
    """Series truncation tail exceeds the verification tolerance at the grid radius."""
