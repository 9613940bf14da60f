"""mlvlab exceptions"""


class MlvError(Exception):
    """Base mlvlab error"""


class PeriodSyntaxError(MlvError, ValueError):
    """Period expression cannot be parsed"""


class DivisionByZero(MlvError, ZeroDivisionError):
    """Division by the zero period"""


class NotInvertible(MlvError):
    """Map is not an isomorphism"""


class ShapeMismatch(MlvError, ValueError):
    """Matrix shape does not match the graded dimensions"""


class PairingDegenerate(MlvError):
    """Pairing matrix is singular or has the wrong size"""


class PlaceMismatch(MlvError):
    """Frobenius modules live at different places"""


class BudgetExceeded(MlvError):
    """Point enumeration would exceed the configured budget"""


class Inconsistent(MlvError):
    """No rational function of the requested degrees matches the counts"""


class ValidationFailed(MlvError):
    """Reconstructed zeta function does not reproduce the surplus counts"""


class DualityDegenerate(MlvError):
    """Weak duality pairing is not perfect"""


class MalformedHodgeNumbers(MlvError):
    """Hodge numbers are not symmetric or eigenvalue dims do not add up"""


class MissingRanks(MlvError):
    """Datum carries no K-rank table"""


class NotATriangle(MlvError):
    """Data cannot be compared as a distinguished triangle"""


class UnknownDatum(MlvError, KeyError):
    """Name not in the shipped catalog"""


class DatumFormatError(MlvError):
    """Datum file does not follow the mlv-datum/1 schema"""

    def __init__(self, messages):
        self.messages = messages
        super().__init__(messages)


class ConfigError(MlvError):
    """Invalid run configuration"""
