class DreamTextError(Exception):
    """Base class for data and validation errors raised by the library."""


class CorpusDecodeError(DreamTextError):
    def __init__(self, name: str, offset: int, reason: str = "invalid UTF-8"):
        self.name = name
        self.offset = offset
        super().__init__(f"{name}: cannot decode as UTF-8 at byte offset {offset} ({reason})")


class GraphemeError(DreamTextError, ValueError):
    def __init__(self, word: str, char: str):
        self.word = word
        self.char = char
        super().__init__(f"unexpected character {char!r} in word {word!r}")


class SpecError(DreamTextError, ValueError):
    """An invalid filter, ordering or derivation spec."""


class OrderingError(DreamTextError, KeyError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(word)

    def __str__(self) -> str:
        return f"word {self.word!r} is absent from the frequency table"


class DerivationError(DreamTextError):
    def __init__(self, label: str, cause: Exception):
        self.label = label
        self.cause = cause
        super().__init__(f"derivation {label!r}: {cause}")


class ConfigError(DreamTextError):
    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
