"""Token classes, stopword lists and frequency tables.

Every token falls into exactly one of four classes.  Punctuation and
numbers are recognized by shape, stopwords by exact (lowercased) lookup,
and whatever remains is a meaningful word.
"""

from __future__ import annotations

import enum
import string
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union

from .corpus import Corpus
from .errors import DreamTextError

# ASCII punctuation plus the typographic marks found in the dream texts.
PUNCTUATION = frozenset(string.punctuation) | frozenset("“”‘’„«»…–—―‐‑•´¨¡¿·")

STOPWORD_RESOURCE = "stopwords_pt.txt"


class TokenClass(enum.Enum):
    PUNCTUATION = "punctuation"
    STOPWORD = "stopword"
    MEANINGFUL = "meaningful"
    NUMBER = "number"


@dataclass(frozen=True)
class StopwordList:
    words: tuple[str, ...]
    source_label: str = "custom"
    entries: frozenset[str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        words = tuple(dict.fromkeys(w.lower() for w in self.words))
        if not words:
            raise DreamTextError(f"stopword list {self.source_label!r} is empty")
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "entries", frozenset(words))

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def parse(cls, text: str, source_label: str = "custom") -> "StopwordList":
        """One word per line; ``#`` lines and blank lines are skipped."""
        words = []
        for line in text.splitlines():
            line = line.rstrip()
            if not line or line.lstrip().startswith("#"):
                continue
            words.append(line.strip())
        return cls(tuple(words), source_label)


def default_stopwords() -> StopwordList:
    text = resources.files("dreamtext").joinpath("data", STOPWORD_RESOURCE).read_text("utf-8")
    label = "portuguese"
    for line in text.splitlines():
        if line.startswith("# version:"):
            label = line.split(":", 1)[1].strip()
    return StopwordList.parse(text, label)


def load_stopwords(path: Union[str, Path, None] = None) -> StopwordList:
    if path is None:
        return default_stopwords()
    path = Path(path)
    return StopwordList.parse(path.read_text("utf-8"), str(path))


@dataclass(frozen=True)
class ClassifiedToken:
    surface: str
    normalized: str
    token_class: TokenClass
    position: tuple[int, int, int]


@dataclass(frozen=True)
class FrequencyTable:
    counts: dict[str, int] = field(default_factory=dict)
    total: int = 0

    def __getitem__(self, word: str) -> int:
        return self.counts.get(word, 0)

    def __contains__(self, word: str) -> bool:
        return word in self.counts

    def __len__(self) -> int:
        return len(self.counts)

    def most_common(self, n: Optional[int] = None) -> list[tuple[str, int]]:
        return Counter(self.counts).most_common(n)

    def expand(self) -> list[str]:
        return [w for w, c in self.counts.items() for _ in range(c)]


def normalize(surface: str) -> str:
    return surface.lower()


def classify(token: str, stopwords: StopwordList) -> TokenClass:
    # any lone non-alphanumeric symbol counts, not only the listed marks
    if len(token) == 1 and (token in PUNCTUATION or not token.isalnum()):
        return TokenClass.PUNCTUATION
    if token.isdecimal():
        return TokenClass.NUMBER
    if normalize(token) in stopwords:
        return TokenClass.STOPWORD
    return TokenClass.MEANINGFUL


def classify_corpus(corpus: Corpus, stopwords: StopwordList) -> list[ClassifiedToken]:
    out = []
    for token in corpus.tokens():
        cls = classify(token.surface, stopwords)
        norm = normalize(token.surface) if token.is_word else token.surface
        out.append(ClassifiedToken(token.surface, norm, cls, token.position))
    return out


def meaningful_words(corpus: Corpus, stopwords: StopwordList) -> list[ClassifiedToken]:
    return [t for t in classify_corpus(corpus, stopwords) if t.token_class is TokenClass.MEANINGFUL]


def build_frequency_table(words: Iterable[str]) -> FrequencyTable:
    counts = Counter(words)
    return FrequencyTable(dict(counts), sum(counts.values()))
