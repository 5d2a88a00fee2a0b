"""Exception hierarchy for krw

Every error raised by the library derives from KrwError and carries the exit
code the command-line front end reports for it: 2 for usage, parse and input
problems, 1 for computations or verifications that did not succeed.
"""

from typing import Optional


class KrwError(Exception):
    """Base class for all expected krw errors"""

    exit_code: int = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ExpressionSyntaxError(KrwError):
    """Expression text does not conform to the grammar"""

    exit_code = 2

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownIdentifierError(KrwError):
    exit_code = 2

    def __init__(self, name: str, suggestion: Optional[str] = None):
        hint = f" (did you mean '{suggestion}'?)" if suggestion else ""
        super().__init__(f"unknown identifier '{name}'{hint}")
        self.name = name
        self.suggestion = suggestion


class UnknownNameError(KrwError):
    """A map or grading name that is not registered"""

    exit_code = 2

    def __init__(self, kind: str, name: str, suggestion: Optional[str] = None):
        hint = f" (did you mean '{suggestion}'?)" if suggestion else ""
        super().__init__(f"unknown {kind} '{name}'{hint}")
        self.kind = kind
        self.name = name
        self.suggestion = suggestion


class MapFileError(KrwError):
    exit_code = 2


class ConfigInvalidError(KrwError):
    exit_code = 2


class DivisorZeroError(KrwError):
    def __init__(self):
        super().__init__("division by the zero polynomial")


class ContainsYError(KrwError):
    def __init__(self, g: str):
        super().__init__(f"relation part g = {g} must not involve y")


class NotPrimeError(KrwError):
    """The relation X^2*Y + g is not prime; the witness exhibits the factor x"""

    def __init__(self, relation: str, witness: str):
        super().__init__(f"relation {relation} is not prime: {relation} = {witness}")
        self.relation = relation
        self.witness = witness


class RingMismatchError(KrwError):
    def __init__(self, left: str, right: str):
        super().__init__(f"elements live in different rings: {left} vs {right}")


class IterationCapExceededError(KrwError):
    def __init__(self, cap: int):
        super().__init__(
            f"filtration reduction did not terminate within {cap} steps "
            f"(is the leading relation prime?)"
        )
        self.cap = cap


class NotApplicableError(KrwError):
    pass


class NotIdentityAtZeroError(KrwError):
    def __init__(self, generator: str, image: str):
        super().__init__(f"image of {generator} at U=0 is {image}, expected {generator}")
        self.generator = generator


class NotWellDefinedError(KrwError):
    def __init__(self, residue: str):
        super().__init__(f"map is not well-defined: relation maps to {residue}")
        self.residue = residue


class TrivialMapError(KrwError):
    def __init__(self, name: str):
        super().__init__(f"map {name} is trivial: every higher derivation component vanishes")


class VerificationFailedError(KrwError):
    def __init__(self, message: str, witness: Optional[str] = None):
        super().__init__(message if witness is None else f"{message}: {witness}")
        self.witness = witness
