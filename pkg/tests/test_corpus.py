import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dreamtext.corpus import (
    concat_corpora,
    corpus_stats,
    load_corpus,
    split_paragraphs,
    split_sentences,
    tokenize,
)
from dreamtext.errors import CorpusDecodeError

from gen import random_corpus


def test_empty_input_has_no_paragraphs():
    corpus = load_corpus("")
    assert corpus.paragraphs == ()
    assert corpus_stats(corpus).as_row() == (0, 0, 0, 0)


def test_one_line_two_sentences():
    corpus = load_corpus("Sonhei. Acordei.")
    assert len(corpus.paragraphs) == 1
    assert [s.text for s in corpus.paragraphs[0].sentences] == ["Sonhei", "Acordei"]


def test_blank_line_separates_paragraphs():
    corpus = load_corpus("Sonhei com o mar.\n\nAcordei cedo.")
    assert len(corpus.paragraphs) == 2


@pytest.mark.parametrize("text, expected", [
    ("a\n\nb", ["a", "b"]),
    ("a\nb", ["a\nb"]),
    ("a\n \n\nb", ["a", "b"]),
    ("\n\n a \n\n", [" a "]),
    ("a\r\n\r\nb", ["a", "b"]),
    ("", []),
])
def test_split_paragraphs(text, expected):
    assert split_paragraphs(text) == expected


@pytest.mark.parametrize("text, expected", [
    ("Sonhei. Acordei.", [("Sonhei", "."), ("Acordei", ".")]),
    ("Não acabou", [("Não acabou", None)]),
    ("Fugi... Corri!", [("Fugi", "."), ("Corri", "!")]),
    ("Quem?! Eu", [("Quem", "?"), ("Eu", None)]),
    ("Fim…", [("Fim", "…")]),
    ("... Sonhei.", [("Sonhei", ".")]),
    ("Às 3.5 horas", [("Às 3.5 horas", None)]),
    ("Sonhei.Acordei", [("Sonhei.Acordei", None)]),
    ("", []),
])
def test_split_sentences(text, expected):
    assert split_sentences(text) == expected


@pytest.mark.parametrize("text, expected", [
    ("Eu suada", ["Eu", "suada"]),
    ("pessoas )", ["pessoas", ")"]),
    ("guarda-chuva caiu", ["guarda-chuva", "caiu"]),
    ("d'água e d’água", ["d'água", "e", "d’água"]),
    ("Depois ”", ["Depois", "”"]),
    ("às 12h30, fui", ["às", "12", "h", "30", ",", "fui"]),
    ("-sonho- x--y", ["-", "sonho", "-", "x", "-", "-", "y"]),
    ("“Sonhei”", ["“", "Sonhei", "”"]),
])
def test_tokenize(text, expected):
    assert tokenize(text) == expected


def test_stats_fixture_hand_counted(data_dir):
    # "Eu vi o mar azul. Acordei suada!" 32 chars, 7 tokens, 2 sentences;
    # blank line 2 chars; "Pessoas fugiam na rua)" 22 chars + newline, 5 tokens
    corpus = load_corpus(data_dir / "stats_fixture.txt")
    assert corpus_stats(corpus).as_row() == (57, 12, 3, 2)


def test_decode_error_reports_offset():
    with pytest.raises(CorpusDecodeError) as info:
        load_corpus("Sonhei".encode() + b"\xff a", name="bad.txt")
    assert info.value.offset == 6
    assert "bad.txt" in str(info.value) and "6" in str(info.value)


def test_crlf_and_bom_are_normalized():
    a = load_corpus("\ufeffSonhei.\r\n\r\nAcordei.\r\n".encode())
    b = load_corpus("Sonhei.\n\nAcordei.\n")
    assert a.paragraphs == b.paragraphs
    assert corpus_stats(a) == corpus_stats(b)


def test_concat_keeps_paragraphs():
    a = load_corpus("Um. Dois.", "a")
    b = load_corpus("Três.", "b")
    both = concat_corpora([a, b])
    assert both.source_name == "a+b"
    assert len(both.paragraphs) == 2


def _structure(corpus):
    return [[s.surfaces for s in p.sentences] for p in corpus.paragraphs]


@pytest.mark.parametrize("seed", range(30))
def test_segmentation_matches_generator(seed):
    text, paragraphs = random_corpus(random.Random(seed))
    corpus = load_corpus(text)
    assert _structure(corpus) == [[[t for t, _ in s] for s in p] for p in paragraphs]


_texts = st.text(
    alphabet=st.sampled_from(list("aeiouãéç bcdmnrst.!?…,)(\n-'”3")),
    max_size=120,
)


@given(_texts)
@settings(max_examples=300)
def test_resegmenting_is_idempotent(text):
    corpus = load_corpus(text)
    rejoined = "\n\n".join(p.text for p in corpus.paragraphs)
    assert _structure(load_corpus(rejoined)) == _structure(corpus)


@given(_texts)
@settings(max_examples=300)
def test_paragraphs_keep_all_visible_characters(text):
    corpus = load_corpus(text)
    visible = lambda s: "".join(s.split())
    assert visible("".join(p.text for p in corpus.paragraphs)) == visible(corpus.raw_text)


@given(_texts)
@settings(max_examples=300)
def test_tokens_cover_sentence_text(text):
    for sentence in load_corpus(text).sentences():
        assert "".join(sentence.surfaces) == "".join(sentence.text.split())
        assert sentence.tokens
        assert sentence.terminator in (None, ".", "!", "?", "…")


@given(_texts)
@settings(max_examples=200)
def test_stats_are_additive_and_paths_unique(text):
    corpus = load_corpus(text)
    stats = corpus_stats(corpus)
    assert stats.tokens == sum(len(s.tokens) for s in corpus.sentences())
    assert stats.sentences == sum(len(p.sentences) for p in corpus.paragraphs)
    assert stats.tokens >= stats.sentences
    paths = [t.position for t in corpus.tokens()]
    assert len(paths) == len(set(paths)) == stats.tokens
    for p_index, p in enumerate(corpus.paragraphs):
        assert p.index == p_index
        assert [s.index for s in p.sentences] == list(range(len(p.sentences)))
    assert load_corpus(text.encode()) == corpus
