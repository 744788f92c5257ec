"""Orthographic sound classes for Portuguese and the word filters built on them.

The classifier reads a lowercase word left to right, consuming digraphs
first (``ch lh nh rr ss qu`` and ``gu`` before a front vowel) and resolving
``c``/``g`` by the following letter.  It is an approximation of Portuguese
spelling, not a phonetic transcription: ``x`` is always a fricative and
intervocalic ``s`` is not distinguished from ``ss``.
"""

from __future__ import annotations

import enum
import functools
import unicodedata
from dataclasses import dataclass
from typing import Optional, Union

from .errors import GraphemeError, SpecError
from .lexicon import FrequencyTable


class SoundClass(enum.Enum):
    VOWEL = "vowel"
    PLOSIVE = "plosive"
    FRICATIVE = "fricative"
    NASAL = "nasal"
    LATERAL = "lateral"
    RHOTIC = "rhotic"
    SILENT = "silent"
    OTHER = "other"


CONSONANT_CLASSES = frozenset(SoundClass) - {SoundClass.VOWEL, SoundClass.SILENT}
VOWEL_BASES = frozenset("aeiou")


@dataclass(frozen=True)
class Sound:
    """A sound class, plus the accent-folded base letter for vowels."""

    kind: SoundClass
    base: Optional[str] = None

    @classmethod
    def vowel(cls, base: str) -> "Sound":
        return cls(SoundClass.VOWEL, base)

    def __repr__(self) -> str:
        if self.kind is SoundClass.VOWEL:
            return f"Vowel({self.base})"
        return self.kind.name.capitalize()


@dataclass(frozen=True)
class Grapheme:
    text: str
    sound: Sound

    @property
    def kind(self) -> SoundClass:
        return self.sound.kind


_DIGRAPHS = {
    "ch": SoundClass.FRICATIVE,
    "lh": SoundClass.LATERAL,
    "nh": SoundClass.NASAL,
    "rr": SoundClass.RHOTIC,
    "ss": SoundClass.FRICATIVE,
    "qu": SoundClass.PLOSIVE,
}

_SINGLE = {}
for _letters, _sound in [
    ("çszjxfv", SoundClass.FRICATIVE),
    ("pbtdkq", SoundClass.PLOSIVE),
    ("mn", SoundClass.NASAL),
    ("l", SoundClass.LATERAL),
    ("r", SoundClass.RHOTIC),
    ("h'’-", SoundClass.SILENT),
    ("wy", SoundClass.OTHER),
]:
    for _ch in _letters:
        _SINGLE[_ch] = _sound


@functools.lru_cache(maxsize=512)
def vowel_base(ch: str) -> Optional[str]:
    """Return the unaccented vowel letter for ``ch``, or ``None``."""
    base = unicodedata.normalize("NFD", ch)[:1]
    if base and base in VOWEL_BASES:
        return base
    return None


def _front_vowel(ch: str) -> bool:
    return vowel_base(ch) in ("e", "i")


def graphemes(word: str) -> list[Grapheme]:
    return list(_graphemes(word))


@functools.lru_cache(maxsize=65536)
def _graphemes(word: str) -> tuple[Grapheme, ...]:
    units = []
    i = 0
    n = len(word)
    while i < n:
        ch = word[i]
        nxt = word[i + 1] if i + 1 < n else ""
        pair = ch + nxt
        if pair in _DIGRAPHS:
            units.append(Grapheme(pair, Sound(_DIGRAPHS[pair])))
            i += 2
            continue
        after = word[i + 2] if i + 2 < n else ""
        if pair == "gu" and _front_vowel(after):
            units.append(Grapheme(pair, Sound(SoundClass.PLOSIVE)))
            i += 2
            continue
        if ch in "cg":
            sound = SoundClass.FRICATIVE if _front_vowel(nxt) else SoundClass.PLOSIVE
            units.append(Grapheme(ch, Sound(sound)))
        elif ch in _SINGLE:
            units.append(Grapheme(ch, Sound(_SINGLE[ch])))
        else:
            base = vowel_base(ch)
            if base is None:
                raise GraphemeError(word, ch)
            units.append(Grapheme(ch, Sound.vowel(base)))
        i += 1
    return tuple(units)


def grapheme_classes(word: str) -> list[Sound]:
    """Sound classes of a word, one per grapheme unit.

    >>> grapheme_classes("chave")
    [Fricative, Vowel(a), Fricative, Vowel(e)]
    """
    return [g.sound for g in graphemes(word)]


# ---------------------------------------------------------------------------
# Filter specs

@dataclass(frozen=True)
class SingleVowel:
    def validate(self) -> None:
        pass


@dataclass(frozen=True)
class ConsonantClass:
    """Words built only from the allowed consonant classes and vowels.

    ``vowels=None`` allows every vowel; ``extra`` lists literal letters
    accepted whatever their class (e.g. ``{"m"}`` next to plosives).
    """

    classes: frozenset[SoundClass] = frozenset()
    vowels: Optional[frozenset[str]] = None
    extra: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "classes", frozenset(self.classes))
        object.__setattr__(self, "extra", frozenset(self.extra))
        if self.vowels is not None:
            object.__setattr__(self, "vowels", frozenset(self.vowels))

    def validate(self) -> None:
        if not self.classes and not self.extra:
            raise SpecError("consonant_class filter needs at least one class or extra letter")
        bad = self.classes - CONSONANT_CLASSES
        if bad:
            raise SpecError(f"not consonant classes: {sorted(c.value for c in bad)}")
        if self.vowels is not None and not self.vowels <= VOWEL_BASES:
            raise SpecError(f"vowels must be among a, e, i, o, u: {sorted(self.vowels)}")


@dataclass(frozen=True)
class Length:
    min: int = 0
    max: Optional[int] = None

    def validate(self) -> None:
        if self.min < 0 or (self.max is not None and self.max < self.min):
            raise SpecError(f"invalid length range [{self.min}, {self.max}]")


@dataclass(frozen=True)
class Frequency:
    min: int = 0
    max: Optional[int] = None

    def validate(self) -> None:
        if self.min < 0 or (self.max is not None and self.max < self.min):
            raise SpecError(f"invalid frequency range [{self.min}, {self.max}]")


FilterSpec = Union[SingleVowel, ConsonantClass, Length, Frequency]


def passes_single_vowel(word: str) -> bool:
    bases = {vowel_base(ch) for ch in word} - {None}
    return len(bases) == 1


def passes_consonant_class(word: str, spec: ConsonantClass) -> bool:
    try:
        units = _graphemes(word)
    except GraphemeError:
        return False
    for g in units:
        if g.kind is SoundClass.SILENT:
            continue
        if g.kind is SoundClass.VOWEL:
            if spec.vowels is None or g.sound.base in spec.vowels:
                continue
        elif g.kind in spec.classes:
            continue
        if g.text in spec.extra:
            continue
        return False
    return True


def word_length(word: str) -> int:
    return sum(1 for ch in word if ch not in "-'’")


def _in_range(value: int, lo: int, hi: Optional[int]) -> bool:
    return lo <= value and (hi is None or value <= hi)


def passes_length(word: str, spec: Length) -> bool:
    return _in_range(word_length(word), spec.min, spec.max)


def passes_frequency(word: str, table: FrequencyTable, spec: Frequency) -> bool:
    return _in_range(table[word], spec.min, spec.max)


def passes(word: str, spec: FilterSpec, table: Optional[FrequencyTable] = None) -> bool:
    if isinstance(spec, SingleVowel):
        return passes_single_vowel(word)
    if isinstance(spec, ConsonantClass):
        return passes_consonant_class(word, spec)
    if isinstance(spec, Length):
        return passes_length(word, spec)
    if isinstance(spec, Frequency):
        if table is None:
            raise SpecError("frequency filter needs a frequency table")
        return passes_frequency(word, table, spec)
    raise SpecError(f"unknown filter spec {spec!r}")
