"""Derivations: filtered and ordered word lists, sentence first/last pairs
and collocations, each producing a labeled block of lines."""

from __future__ import annotations

import enum
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .corpus import Corpus
from .errors import DerivationError, DreamTextError, SpecError
from .lexicon import (
    FrequencyTable,
    StopwordList,
    TokenClass,
    build_frequency_table,
    classify_corpus,
)
from .ordering import OrderingSpec, collation_key, order_words
from .phonofilter import FilterSpec, passes


class Source(enum.Enum):
    MEANINGFUL = "meaningful"
    BOUNDARIES = "boundaries"
    COLLOCATIONS = "collocations"


class Measure(enum.Enum):
    RAW_COUNT = "raw_count"
    PMI = "pmi"


@dataclass(frozen=True)
class DerivationSpec:
    label: str
    source: Source = Source.MEANINGFUL
    filters: tuple[FilterSpec, ...] = ()
    ordering: Optional[OrderingSpec] = None
    min_count: int = 2
    measure: Measure = Measure.RAW_COUNT

    def __post_init__(self):
        object.__setattr__(self, "filters", tuple(self.filters))
        if self.ordering is None and self.source is Source.MEANINGFUL:
            object.__setattr__(self, "ordering", OrderingSpec())

    def validate(self) -> None:
        if not self.label:
            raise SpecError("derivation label must be non-empty")
        if self.source is not Source.MEANINGFUL and (self.filters or self.ordering is not None):
            raise SpecError(f"{self.source.value} derivations take no filters or ordering")
        if self.min_count < 1:
            raise SpecError(f"min_count must be >= 1, got {self.min_count}")
        for f in self.filters:
            f.validate()


@dataclass(frozen=True)
class DerivedText:
    label: str
    lines: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        if any(not line for line in self.lines):
            raise ValueError(f"{self.label}: derived lines must be non-empty")


@dataclass(frozen=True)
class Collocation:
    first: str
    second: str
    count: int
    score: float


def sentence_boundary_pairs(corpus: Corpus, label: str = "boundaries") -> DerivedText:
    """First and last raw token of every sentence, surface case kept.

    Punctuation inside the sentence counts as a token, so a sentence ending
    in ``)`` yields e.g. ``"Pessoas )"``; a one-token sentence yields its
    token once.
    """
    lines = []
    for sentence in corpus.sentences():
        toks = sentence.tokens
        if not toks:
            continue
        if len(toks) == 1:
            lines.append(toks[0].surface)
        else:
            lines.append(f"{toks[0].surface} {toks[-1].surface}")
    return DerivedText(label, tuple(lines))


def _meaningful_by_sentence(corpus: Corpus, stopwords: StopwordList) -> list[list[str]]:
    sentences: dict[tuple[int, int], list[str]] = {}
    for tok in classify_corpus(corpus, stopwords):
        if tok.token_class is TokenClass.MEANINGFUL:
            sentences.setdefault(tok.position[:2], []).append(tok.normalized)
    return list(sentences.values())


def collocations(
    corpus: Corpus,
    stopwords: StopwordList,
    min_count: int = 2,
    measure: Measure = Measure.RAW_COUNT,
) -> list[Collocation]:
    return _collocations(_meaningful_by_sentence(corpus, stopwords), min_count, measure)


def _collocations(sentences: list[list[str]], min_count: int, measure: Measure) -> list[Collocation]:
    if min_count < 1:
        raise SpecError(f"min_count must be >= 1, got {min_count}")
    pairs: Counter = Counter()
    unigrams: Counter = Counter()
    for words in sentences:
        unigrams.update(words)
        pairs.update(zip(words, words[1:]))
    n_pairs = sum(pairs.values())
    out = []
    for (a, b), count in pairs.items():
        if count < min_count:
            continue
        if measure is Measure.PMI:
            score = math.log2(count * n_pairs / (unigrams[a] * unigrams[b]))
        else:
            score = float(count)
        out.append(Collocation(a, b, count, score))
    out.sort(key=lambda c: (-c.score, -c.count, collation_key(c.first), collation_key(c.second)))
    return out


class _Context:
    """Per-corpus material shared by all derivations of one run."""

    def __init__(self, corpus: Corpus, stopwords: StopwordList, table: Optional[FrequencyTable] = None):
        self.corpus = corpus
        self.by_sentence = _meaningful_by_sentence(corpus, stopwords)
        self.words = [w for words in self.by_sentence for w in words]
        self.table = table if table is not None else build_frequency_table(self.words)

    def derive(self, spec: DerivationSpec) -> DerivedText:
        try:
            spec.validate()
            if spec.source is Source.BOUNDARIES:
                return sentence_boundary_pairs(self.corpus, spec.label)
            if spec.source is Source.COLLOCATIONS:
                found = _collocations(self.by_sentence, spec.min_count, spec.measure)
                return DerivedText(spec.label, tuple(f"{c.first} {c.second}" for c in found))
            words = self.words
            for f in spec.filters:
                words = [w for w in words if passes(w, f, self.table)]
            return DerivedText(spec.label, tuple(order_words(words, self.table, spec.ordering)))
        except (DreamTextError, ValueError, KeyError) as exc:
            if isinstance(exc, DerivationError):
                raise
            raise DerivationError(spec.label, exc) from exc


def run_derivation(
    corpus: Corpus,
    stopwords: StopwordList,
    table: Optional[FrequencyTable],
    spec: DerivationSpec,
) -> DerivedText:
    return _Context(corpus, stopwords, table).derive(spec)


def check_unique_labels(specs: Sequence[DerivationSpec]) -> None:
    counts = Counter(s.label for s in specs)
    dupes = sorted(label for label, n in counts.items() if n > 1)
    if dupes:
        raise SpecError(f"duplicate derivation labels: {', '.join(dupes)}")


def run_all(
    corpus: Corpus,
    stopwords: StopwordList,
    specs: Sequence[DerivationSpec],
    jobs: int = 1,
) -> list[DerivedText]:
    """Run every spec against one corpus; results follow spec order.

    With ``jobs > 1`` derivations run on a thread pool.  They only read the
    shared corpus and frequency table, so the output does not depend on
    scheduling.
    """
    check_unique_labels(specs)
    if not specs:
        return []
    ctx = _Context(corpus, stopwords)
    if jobs <= 1:
        return [ctx.derive(spec) for spec in specs]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(ctx.derive, specs))
