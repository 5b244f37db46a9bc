"""Exception hierarchy shared by every module of the package."""


class SemigroupForgeError(Exception):
    """Base class for all errors raised here."""


class InvalidInput(SemigroupForgeError, ValueError):
    """Input that does not describe a valid object (CLI exit code 2)."""


class EmptyGenerators(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class NotInSemigroup(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


class NotHomogeneous(InvalidInput):
    """A binomial whose two terms have different weighted degree."""


class UnsupportedE(InvalidInput):
    """Closed forms exist only for embedding dimensions 4 and 5."""


class WrongE(UnsupportedE):
    """A closed form was asked for a family of the wrong embedding dimension."""


class NotCertified(SemigroupForgeError, ValueError):
    """The generating set passed in does not generate the defining ideal."""


class ClosedFormInconsistent(SemigroupForgeError):
    """A closed-form set failed its own distinctness or cardinality check."""


class ResourceLimit(SemigroupForgeError, RuntimeError):
    """A search budget (S-pairs or factorization nodes) was exhausted."""
