"""Exception hierarchy.

Every mathematical precondition failure raises a subclass of
``StickelbergerError`` so the CLI can separate usage problems from
identity violations (``IdentityViolation``).
"""


class StickelbergerError(ValueError):
    pass


class NonSubgroup(StickelbergerError):
    pass


class NonMinimalConductor(StickelbergerError):
    def __init__(self, conductor: int, minimal: int):
        super().__init__(
            f"subgroup mod {conductor} defines a field of conductor {minimal}"
        )
        self.conductor = conductor
        self.minimal = minimal


class BadConductor(StickelbergerError):
    pass


class FieldMismatch(StickelbergerError):
    pass


class NotASubfield(StickelbergerError):
    pass


class DivisibilityViolation(StickelbergerError):
    pass


class NotAUnit(StickelbergerError):
    pass


class NotCoprime(StickelbergerError):
    pass


class NonPrimitive(StickelbergerError):
    pass


class CharacterFieldMismatch(StickelbergerError):
    pass


class NotCM(StickelbergerError):
    pass


class NotTotallyReal(StickelbergerError):
    pass


class UnitIndexUndetermined(StickelbergerError):
    pass


class IdentityViolation(ArithmeticError):
    """An identity that must hold exactly did not. Carries the offending data."""

    def __init__(self, message: str, detail: dict | None = None):
        super().__init__(message)
        self.detail = detail or {}


class NonIntegralResult(IdentityViolation):
    pass


class CompatibilityFailure(IdentityViolation):
    def __init__(self, level: int, restricted, expected):
        super().__init__(
            f"tower compatibility fails at level {level}",
            {"level": level},
        )
        self.level = level
        self.restricted = restricted
        self.expected = expected
