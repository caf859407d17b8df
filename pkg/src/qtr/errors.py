"""Exception types. Each field-input error names the violated hypothesis."""


class FieldInputError(ValueError):
    """A pair (ell, n) that does not describe a field in the supported family."""


class EllNotPrime(FieldInputError):
    pass


class EllNotFiveMod8(FieldInputError):
    pass


class NNotPositive(FieldInputError):
    pass


class NotSquarefree(FieldInputError):
    pass


class NotCoprime(FieldInputError):
    pass


class NotQuadraticResidue(ValueError):
    """Quartic residue symbol requested for a non-residue; the symbol is undefined."""


class InternalCheckError(RuntimeError):
    """A built-in cross-check failed; this is a bug, not a user error."""
