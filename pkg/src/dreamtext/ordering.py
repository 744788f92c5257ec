"""Orderings of word lists: by incidence, alphabet, or length.

Alphabetic comparison is two-level: words are first compared with accents
folded away, and only then by their exact lowercase form, so ``ama`` sorts
before ``amá`` and both sort before ``amz``.  Ties under every key fall
back to this collation and finally to input position, which keeps reruns
byte-identical.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import OrderingError
from .lexicon import FrequencyTable


class OrderKey(enum.Enum):
    INCIDENCE = "incidence"
    ALPHABETIC = "alphabetic"
    LENGTH = "length"
    CORPUS = "corpus"


class Direction(enum.Enum):
    ASCENDING = "ascending"
    DESCENDING = "descending"


class Repetition(enum.Enum):
    WITH_REPETITIONS = "with_repetitions"
    DEDUPLICATED = "deduplicated"


@dataclass(frozen=True)
class OrderingSpec:
    key: OrderKey = OrderKey.INCIDENCE
    direction: Direction = Direction.DESCENDING
    repetition: Repetition = Repetition.DEDUPLICATED


@dataclass(frozen=True, order=True)
class CollationKey:
    primary: str
    secondary: str


def fold_accents(text: str) -> str:
    decomposed = unicodedata.normalize("NFD", text.lower())
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def collation_key(word: str) -> CollationKey:
    return CollationKey(fold_accents(word), word)


def dedup_preserving(items: Iterable) -> list:
    return list(dict.fromkeys(items))


def order_words(
    words: list[str],
    table: Optional[FrequencyTable] = None,
    spec: OrderingSpec = OrderingSpec(),
) -> list[str]:
    """Sort ``words`` according to ``spec``.

    Deduplication, when requested, keeps the first occurrence and happens
    before sorting.  ``OrderKey.CORPUS`` keeps input order (descending
    reverses it).  Incidence ordering needs every word in ``table`` and
    raises :class:`OrderingError` naming the first one missing.
    """
    if spec.repetition is Repetition.DEDUPLICATED:
        words = dedup_preserving(words)
    else:
        words = list(words)
    descending = spec.direction is Direction.DESCENDING

    if spec.key is OrderKey.CORPUS:
        return words[::-1] if descending else words

    if spec.key is OrderKey.INCIDENCE:
        if table is None:
            table = FrequencyTable()
        for w in words:
            if w not in table:
                raise OrderingError(w)

    collation = {w: collation_key(w) for w in set(words)}
    # sort by the tie-breaker first; Python's sort is stable, including
    # with reverse=True, so the main key pass keeps collation/position ties
    if spec.key is OrderKey.ALPHABETIC:
        return sorted(words, key=collation.__getitem__, reverse=descending)
    ranked = sorted(words, key=collation.__getitem__)
    if spec.key is OrderKey.INCIDENCE:
        main = table.__getitem__
    else:
        main = len
    return sorted(ranked, key=main, reverse=descending)
