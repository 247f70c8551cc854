class WordPowerError(ValueError):
    """Base class for domain errors (violated preconditions, bad inputs)."""


class ParseError(WordPowerError):
    """Malformed word, morphism or equation text."""


class PreconditionError(WordPowerError):
    pass
