"""Exception types shared across the engine."""


class G2PError(Exception):
    """Base class for all engine errors."""


class NonHangulCharacter(G2PError):
    """A character outside the precomposed Hangul range reached the codec."""

    def __init__(self, char: str, position: int):
        super().__init__(f"non-Hangul character {char!r} at position {position}")
        self.char = char
        self.position = position


class InvalidTriple(G2PError):
    """A syllable triple uses symbols outside the composable inventory."""


class UnknownToken(G2PError):
    """A romanized string contains a token not in the alphabet."""

    def __init__(self, text: str, position: int):
        super().__init__(f"cannot tokenize {text!r} at position {position}")
        self.text = text
        self.position = position


class Unclassifiable(G2PError):
    """A non-Korean token matches none of the known formats."""

    def __init__(self, token: str):
        super().__init__(f"unclassifiable token {token!r}")
        self.token = token


class MalformedNumber(G2PError):
    """A digit string does not match the number grammar."""


class UnknownTag(G2PError):
    """A POS tag is not part of the declared tag set."""

    def __init__(self, tag: str):
        super().__init__(f"unknown POS tag {tag!r}")
        self.tag = tag


class NoPatternMatch(G2PError):
    """No pattern-dictionary entry unifies with an OOV morpheme."""

    def __init__(self, pos: str, surface: str):
        super().__init__(f"no pattern match for {surface!r} ({pos})")
        self.pos = pos
        self.surface = surface


class UnknownLabel(G2PError):
    """A connectivity label is not in the table's inventory."""

    def __init__(self, label: str):
        super().__init__(f"unknown connectivity label {label!r}")
        self.label = label


class NoValidPath(G2PError):
    """Pruning removed every candidate at some lattice position."""

    def __init__(self, position: int):
        super().__init__(f"no valid path through lattice at morpheme {position}")
        self.position = position


class MisalignedSentence(G2PError):
    """An aligned corpus sentence has unequal vowel counts on both sides."""

    def __init__(self, index: int, detail: str = ""):
        msg = f"misaligned sentence {index}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.index = index


class ResourceError(G2PError):
    """A resource file is malformed; reported with file and line number."""

    def __init__(self, path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no
