"""Decoding and rule-based segmentation of plain-text corpora.

A corpus is split into paragraphs (blocks separated by blank lines),
paragraphs into sentences (after ``. ! ? …`` followed by whitespace), and
sentences into tokens.  Every structure is an immutable dataclass, so a
loaded corpus can be shared freely between threads.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Union

from .errors import CorpusDecodeError

TERMINATORS = ".!?…"

_BOUNDARY = re.compile(r"[.!?…]+(?=\s|\Z)")
_LETTER = r"[^\W\d_]"
_JOINER = r"['’\-]"
_TOKEN = re.compile(rf"{_LETTER}+(?:{_JOINER}{_LETTER}+)*|\d+|\S")
_WORD = re.compile(rf"{_LETTER}+(?:{_JOINER}{_LETTER}+)*")
_NUMBER = re.compile(r"\d+")


@dataclass(frozen=True)
class Token:
    surface: str
    paragraph: int
    sentence: int
    index: int

    @property
    def position(self) -> tuple[int, int, int]:
        return (self.paragraph, self.sentence, self.index)

    @property
    def is_word(self) -> bool:
        return _WORD.fullmatch(self.surface) is not None

    @property
    def is_number(self) -> bool:
        return _NUMBER.fullmatch(self.surface) is not None


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    tokens: tuple[Token, ...]
    terminator: Optional[str] = None

    @property
    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]


@dataclass(frozen=True)
class Paragraph:
    index: int
    text: str
    sentences: tuple[Sentence, ...]


@dataclass(frozen=True)
class CorpusStats:
    characters: int = 0
    tokens: int = 0
    sentences: int = 0
    paragraphs: int = 0

    def as_row(self) -> tuple[int, int, int, int]:
        return (self.characters, self.tokens, self.sentences, self.paragraphs)


@dataclass(frozen=True)
class Corpus:
    source_name: str
    raw_text: str
    paragraphs: tuple[Paragraph, ...]

    def sentences(self) -> Iterator[Sentence]:
        for paragraph in self.paragraphs:
            yield from paragraph.sentences

    def tokens(self) -> Iterator[Token]:
        for sentence in self.sentences():
            yield from sentence.tokens


def split_paragraphs(text: str) -> list[str]:
    """Return the maximal runs of non-blank lines, in order.

    >>> split_paragraphs("a\\n \\n\\nb")
    ['a', 'b']
    """
    blocks: list[list[str]] = [[]]
    for line in _normalize_newlines(text).split("\n"):
        if line.strip():
            blocks[-1].append(line)
        elif blocks[-1]:
            blocks.append([])
    return ["\n".join(lines) for lines in blocks if lines]


def split_sentences(paragraph: str) -> list[tuple[str, Optional[str]]]:
    """Split a paragraph into ``(sentence, terminator)`` pairs.

    A run of terminator characters counts as one boundary and is reported
    by its first character; the trailing fragment, if any, has terminator
    ``None``.  Terminator characters themselves are not part of the
    sentence text.
    """
    out = []
    pos = 0
    for m in _BOUNDARY.finditer(paragraph):
        fragment = paragraph[pos:m.start()].strip()
        if fragment:
            out.append((fragment, m.group()[0]))
        pos = m.end()
    tail = paragraph[pos:].strip()
    if tail:
        out.append((tail, None))
    return out


def tokenize(sentence: str) -> list[str]:
    """Split a sentence into surface tokens.

    Words are runs of letters, possibly joined by internal ``-`` or
    apostrophes; digit runs are one token; any other non-space character
    stands alone.
    """
    return _TOKEN.findall(sentence)


def segment(text: str, name: str = "<text>") -> Corpus:
    text = unicodedata.normalize("NFC", _normalize_newlines(text))
    paragraphs = []
    for p_index, p_text in enumerate(split_paragraphs(text)):
        sentences = []
        for s_index, (s_text, term) in enumerate(split_sentences(p_text)):
            tokens = tuple(
                Token(surface, p_index, s_index, t_index)
                for t_index, surface in enumerate(tokenize(s_text))
            )
            sentences.append(Sentence(s_index, s_text, tokens, term))
        paragraphs.append(Paragraph(p_index, p_text, tuple(sentences)))
    return Corpus(name, text, tuple(paragraphs))


def load_corpus(source: Union[str, bytes, Path], name: Optional[str] = None) -> Corpus:
    """Build a :class:`Corpus` from text, raw UTF-8 bytes, or a file path.

    A ``str`` is taken as the text itself; pass a :class:`~pathlib.Path`
    to read a file.  Undecodable bytes raise :class:`CorpusDecodeError`
    carrying the byte offset of the first bad byte.
    """
    if isinstance(source, Path):
        if name is None:
            name = source.name
        source = source.read_bytes()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusDecodeError(name or "<bytes>", exc.start, exc.reason) from None
    if source.startswith("\ufeff"):
        source = source[1:]
    return segment(source, name or "<text>")


def concat_corpora(corpora: list[Corpus], name: Optional[str] = None) -> Corpus:
    """Join several corpora into one, re-segmenting the combined text."""
    if len(corpora) == 1 and name is None:
        return corpora[0]
    text = "\n\n".join(c.raw_text for c in corpora)
    return segment(text, name or "+".join(c.source_name for c in corpora))


def corpus_stats(corpus: Corpus) -> CorpusStats:
    sentences = list(corpus.sentences())
    return CorpusStats(
        characters=len(corpus.raw_text),
        tokens=sum(len(s.tokens) for s in sentences),
        sentences=len(sentences),
        paragraphs=len(corpus.paragraphs),
    )


def _normalize_newlines(text: str) -> str:
    return text.replace("\r\n", "\n").replace("\r", "\n")
