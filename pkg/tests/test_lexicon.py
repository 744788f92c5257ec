import random
import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dreamtext.corpus import load_corpus
from dreamtext.errors import DreamTextError
from dreamtext.lexicon import (
    PUNCTUATION,
    StopwordList,
    TokenClass,
    build_frequency_table,
    classify,
    classify_corpus,
    load_stopwords,
    meaningful_words,
    normalize,
)

from gen import STOPWORDS, WORDS, random_corpus
from oracles import count_by_sorting


@pytest.mark.parametrize("token, expected", [
    (")", TokenClass.PUNCTUATION),
    ("”", TokenClass.PUNCTUATION),
    ("…", TokenClass.PUNCTUATION),
    ("de", TokenClass.STOPWORD),
    ("De", TokenClass.STOPWORD),
    ("cavalos", TokenClass.MEANINGFUL),
    ("NÃO", TokenClass.STOPWORD),
    ("1999", TokenClass.NUMBER),
    ("é", TokenClass.STOPWORD),
    ("§", TokenClass.PUNCTUATION),
])
def test_classify(token, expected, stopwords):
    assert classify(token, stopwords) is expected


def test_ascii_punctuation_included():
    assert set(string.punctuation) <= PUNCTUATION
    assert len(string.punctuation) == 32


def test_default_stopwords(stopwords):
    assert len(stopwords) == 207
    assert "de" in stopwords and "e" in stopwords
    assert all(w == w.lower() for w in stopwords.words)
    assert stopwords.source_label == "nltk-portuguese-207"
    assert all(w.lower() in stopwords for w in STOPWORDS)
    assert not any(w.lower() in stopwords for w in WORDS)


def test_stopword_file_format(tmp_path):
    path = tmp_path / "stop.txt"
    path.write_text("# my list\nDe  \n\nsonho\n  # indented comment\nde\n", encoding="utf-8")
    sw = load_stopwords(path)
    assert sw.words == ("de", "sonho")
    assert "sonho" in sw


def test_empty_stopword_list_rejected():
    with pytest.raises(DreamTextError):
        StopwordList.parse("# nothing\n")


@pytest.mark.parametrize("surface, expected", [("Meu", "meu"), ("NÃO", "não"), ("já", "já")])
def test_normalize(surface, expected):
    assert normalize(surface) == expected


def test_meaningful_words_small():
    sw = StopwordList(("eu", "o"))
    words = meaningful_words(load_corpus("Eu vi o mar."), sw)
    assert [t.surface for t in words] == ["vi", "mar"]
    assert words[1].position == (0, 0, 3)
    assert meaningful_words(load_corpus(""), sw) == []


def test_meaningful_words_match_full_scan(dreams, stopwords):
    brute = []
    for p in dreams.paragraphs:
        for s in p.sentences:
            for tok in s.tokens:
                if classify(tok.surface, stopwords) is TokenClass.MEANINGFUL:
                    brute.append(tok.surface.lower())
    assert [t.normalized for t in meaningful_words(dreams, stopwords)] == brute


def test_frequency_table_examples():
    table = build_frequency_table(["mar", "mar", "sol"])
    assert table.counts == {"mar": 2, "sol": 1}
    assert table.total == 3
    assert table["lua"] == 0
    empty = build_frequency_table([])
    assert empty.counts == {} and empty.total == 0


def test_frequency_table_matches_sort_oracle(dreams, stopwords):
    words = [t.normalized for t in meaningful_words(dreams, stopwords)]
    table = build_frequency_table(words)
    assert table.counts == count_by_sorting(words)
    assert table.total == sum(table.counts.values()) == len(words)


@given(st.lists(st.sampled_from(["mar", "sol", "irmão", "já", "a"]), max_size=40))
def test_frequency_round_trip(words):
    table = build_frequency_table(words)
    assert sorted(table.expand()) == sorted(words)
    assert all(c >= 1 for c in table.counts.values())


@given(st.sampled_from(WORDS + STOPWORDS))
def test_stopword_lookup_is_case_insensitive(word):
    from dreamtext.lexicon import default_stopwords

    sw = default_stopwords()
    assert classify(word, sw) is classify(word.lower(), sw) is classify(word.upper(), sw)


@pytest.mark.parametrize("seed", range(20))
def test_classes_match_generator(seed, stopwords):
    text, paragraphs = random_corpus(random.Random(seed))
    got = [t.token_class for t in classify_corpus(load_corpus(text), stopwords)]
    kinds = {"word": TokenClass.MEANINGFUL, "stop": TokenClass.STOPWORD,
             "punct": TokenClass.PUNCTUATION, "number": TokenClass.NUMBER}
    expected = [kinds[k] for p in paragraphs for s in p for _, k in s]
    assert got == expected
