"""Text mining of dream descriptions: segmentation, token classes,
phonetic and distributional word filters, orderings, and derived texts."""

from .corpus import (
    Corpus,
    CorpusStats,
    Paragraph,
    Sentence,
    Token,
    corpus_stats,
    load_corpus,
    split_paragraphs,
    split_sentences,
    tokenize,
)
from .derive import (
    Collocation,
    DerivationSpec,
    DerivedText,
    Measure,
    Source,
    collocations,
    run_all,
    run_derivation,
    sentence_boundary_pairs,
)
from .errors import DreamTextError
from .lexicon import (
    FrequencyTable,
    StopwordList,
    TokenClass,
    build_frequency_table,
    classify,
    default_stopwords,
    load_stopwords,
    meaningful_words,
    normalize,
)
from .ordering import Direction, OrderingSpec, OrderKey, Repetition, dedup_preserving, order_words
from .phonofilter import (
    ConsonantClass,
    Frequency,
    Length,
    SingleVowel,
    SoundClass,
    grapheme_classes,
    passes_consonant_class,
    passes_frequency,
    passes_length,
    passes_single_vowel,
)

__version__ = "0.1.0"
