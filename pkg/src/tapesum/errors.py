"""Exception hierarchy shared by every backend."""


class TapeSumError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class InstanceError(TapeSumError, ValueError):
    code = "invalid-instance"


class EmptyInstance(InstanceError):
    code = "empty-instance"


class NonNaturalValue(InstanceError):
    code = "non-natural-value"


class NonIntegerValue(InstanceError):
    code = "non-integer-value"


class NonZeroTarget(InstanceError):
    code = "non-zero-target"


class ZeroDenominator(InstanceError):
    code = "zero-denominator"


class VariantMismatch(InstanceError):
    code = "variant-mismatch"


class SizeLimitExceeded(TapeSumError):
    code = "size-limit-exceeded"


class NegativeExponentPresent(TapeSumError, ValueError):
    code = "negative-exponent"


class AliasRisk(TapeSumError, ValueError):
    code = "alias-risk"


class NyquistViolation(TapeSumError, ValueError):
    code = "nyquist-violation"


class InvalidLeftShift(TapeSumError, ValueError):
    code = "invalid-left-shift"


class SymbolOutOfAlphabet(TapeSumError, ValueError):
    code = "symbol-out-of-alphabet"


class StepLimitExceeded(TapeSumError):
    """Raised when a machine does not halt in time; ``result`` holds the run so far."""

    code = "step-limit-exceeded"

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class TooLargeForOracle(TapeSumError):
    code = "too-large-for-oracle"


class MismatchFound(TapeSumError):
    """A backend disagreed with the oracle.

    ``backend``, ``sum``, ``expected`` and ``got`` describe the first disagreement.
    """

    code = "mismatch"

    def __init__(self, backend, sum_, expected, got):
        super().__init__(f"{backend}: sum {sum_} expected {expected}, got {got}")
        self.backend = backend
        self.sum = sum_
        self.expected = expected
        self.got = got

    def to_json(self) -> dict:
        d = super().to_json()
        d.update(backend=self.backend, sum=self.sum,
                 expected=str(self.expected), got=str(self.got))
        return d
