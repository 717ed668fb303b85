"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
2 for malformed input, 3 for mathematical domain errors, 4 for failed
verification.
"""


class JordanSplitError(Exception):
    exit_code = 3


# -- input / shape problems -------------------------------------------------

class InputError(JordanSplitError, ValueError):
    exit_code = 2


class KindMismatch(JordanSplitError, TypeError):
    """Exact and floating scalars were combined in one computation."""
    exit_code = 2


class ShapeError(JordanSplitError, ValueError):
    exit_code = 2


class EmptyProblem(JordanSplitError, ValueError):
    exit_code = 2


class NodeCollision(JordanSplitError, ValueError):
    """Two interpolation nodes coincide (or are too close in float mode)."""
    exit_code = 2


class DegreeError(JordanSplitError, ValueError):
    exit_code = 2


# -- mathematical domain errors ---------------------------------------------

class DivisionByZeroPoly(JordanSplitError, ZeroDivisionError):
    pass


class ExactOnly(JordanSplitError, TypeError):
    """Operation is only defined for exact rational scalars."""


class UndefinedGcd(JordanSplitError, ValueError):
    pass


class FactorialRange(JordanSplitError, OverflowError):
    pass


class SeparabilityError(JordanSplitError, ValueError):
    """The divisor has a repeated root."""


class ExactModeUnsupported(JordanSplitError, ValueError):
    """The roots needed are not rational; rerun in float mode."""


class ZeroScalar(JordanSplitError, ValueError):
    pass


class SingularPi(JordanSplitError, ValueError):
    pass


class ClusterInstability(JordanSplitError, ArithmeticError):
    """Two eigenvalue clusters are too close to be told apart reliably."""


# -- verification -------------------------------------------------------------

class VerificationError(JordanSplitError, ArithmeticError):
    exit_code = 4
