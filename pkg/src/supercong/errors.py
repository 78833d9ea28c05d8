"""Exception types shared across the package."""


class SupercongError(Exception):
    """Base class for all package-specific errors."""


class DenominatorNotUnit(SupercongError):
    """Rational-to-residue conversion with a denominator divisible by p."""


class DivisionByZero(SupercongError):
    """Division by an exact p-adic zero."""


class PrecisionExhausted(SupercongError):
    """A p-adic result's relative precision dropped to zero."""


class NegativeValuation(SupercongError):
    """Attempt to reduce a value with v_p < 0 to a residue."""


class InsufficientPrecision(SupercongError):
    """Guard digits exhausted; caller should raise the guard and recompute."""


class IndexOutOfRange(SupercongError):
    """Generalized binomial index k outside 0..p-1."""


class NonResidue(SupercongError):
    """Square root requested for a quadratic non-residue."""


class NotRepresentable(SupercongError):
    """Prime is not represented by the requested quadratic form."""


class WrongForm(SupercongError):
    """Normalization convention applied to an incompatible form."""


class NotCoprime(SupercongError):
    """Legendre symbol argument shares a factor with the modulus."""


class WrongClass(SupercongError):
    """Special constant requested for a prime in the wrong residue class."""


class BaseNotUnit(SupercongError):
    """Sum base m (or its inverse) is divisible by p."""


class UnknownStatement(SupercongError):
    """Statement id not present in the registry."""
