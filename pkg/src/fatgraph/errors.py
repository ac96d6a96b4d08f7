"""Exception hierarchy.

Every domain error derives from :class:`FatGraphError` (itself a
``ValueError``) so callers can catch the whole family at once.  The class
name doubles as the machine-readable error code emitted by the CLI.
"""


class FatGraphError(ValueError):
    """Base class for all domain errors."""

    def __init__(self, message, dart=None):
        super().__init__(message)
        self.dart = dart

    @property
    def code(self):
        return type(self).__name__

    def to_dict(self):
        out = {"error": self.code, "message": str(self)}
        if self.dart is not None:
            out["dart"] = self.dart
        return out


# construction / validation
class ValidationError(FatGraphError):
    """Input names a structure that is not a valid fat graph."""


class DuplicateDart(ValidationError):
    pass


class UnpairedDart(ValidationError):
    pass


class FixedPointInPairing(ValidationError):
    pass


class EmptyGraph(ValidationError):
    pass


class ParseError(FatGraphError):
    pass


# invariants
class OddEuler(FatGraphError):
    pass


class Disconnected(FatGraphError):
    pass


class NotDecorated(FatGraphError):
    pass


class NotABijection(FatGraphError):
    pass


# enumeration
class TooLarge(FatGraphError):
    pass


# constructions
class KTooSmall(FatGraphError):
    pass


class BadAnchor(FatGraphError):
    pass


class NotPair(FatGraphError):
    pass


class Excluded21(FatGraphError):
    pass


class EvenGenusKOne(FatGraphError):
    pass


class RuleNotApplicable(FatGraphError):
    pass
