"""Exception hierarchy shared by all modules."""


class CherednikError(Exception):
    """Base class for all library errors."""


class NotPrime(CherednikError):
    pass


class CharacteristicDividesM(CherednikError):
    pass


class ZeroDenominator(CherednikError):
    pass


class DenominatorVanishesAtSpecialization(CherednikError):
    pass


class MixedFields(CherednikError):
    pass


class InhomogeneousGenerator(CherednikError):
    pass


class MalformedTableau(CherednikError):
    pass


class NotAPartition(CherednikError):
    pass


class ExpressionFailure(CherednikError):
    """A permuted Specht polynomial left the module span; signals a bug."""


class UnknownName(CherednikError):
    pass


class IncompatibleGroup(CherednikError):
    pass


class DimensionMismatch(CherednikError):
    pass


class NotGStable(CherednikError):
    pass


class ModularCharacteristic(CherednikError):
    """Raised when ordinary character theory is requested but p divides |G|."""


class InvalidParameters(CherednikError):
    pass


class NonHomogeneous(CherednikError):
    pass


class DivisionFailure(CherednikError):
    """Division of a divided difference by its root form left a remainder."""


class LengthMismatch(CherednikError):
    pass


class CapTooSmall(CherednikError):
    """Degree cap reached before the quotient vanished (result truncated)."""


class OutOfRegime(CherednikError):
    pass


class CongruenceViolated(CherednikError):
    pass


class UnsupportedCase(CherednikError):
    pass


class IncompleteTable(CherednikError):
    pass


class SizeMismatch(CherednikError):
    pass


class SolveFailure(CherednikError):
    pass
