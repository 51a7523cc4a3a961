"""Exception types shared across the engine."""


class DevaError(Exception):
    """Base class for all engine errors."""


class UnmappedCharacter(DevaError):
    """A Devanagari scalar is not covered by the character table."""

    def __init__(self, char, context=""):
        self.char = char
        msg = "unmapped Devanagari character %r (U+%04X)" % (char, ord(char))
        if context:
            msg += " in %r" % (context,)
        super().__init__(msg)


class NoSegmentation(DevaError):
    """A roman string cannot be split into phoneme codes."""

    def __init__(self, text, position):
        self.text = text
        self.position = position
        super().__init__(
            "no phoneme code matches %r at position %d" % (text, position)
        )


class IllegalSequence(DevaError):
    """A phoneme sequence violates composition preconditions."""


class InvalidEncoding(DevaError):
    """A corpus byte stream is not valid UTF-8."""


class MalformedFile(DevaError):
    """A lexicon, table, or evaluation file violates its format."""


class MissingData(DevaError):
    """An evaluation lacks responses, encodings, or weights for a character."""
