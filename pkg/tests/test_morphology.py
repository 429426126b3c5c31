# -*- coding: utf-8 -*-
import pytest

from balagha.morphology import (
    ARABIC_WORD,
    DEFINITE_ARTICLE,
    ENCLITIC_PRONOUN,
    NUMBER,
    PROCLITIC,
    STEM,
    Lexicon,
    LexiconError,
    count_morphemes,
    default_lexicon,
    segment_token,
    tokenize,
)

SENTENCE_1 = "مساحة بيتي 200 متر مربع."
SENTENCE_2 = "بيتي كبير جداً، مثل قصر."
SENTENCE_3 = "يستحق الشخص الناجح إقامة التي تعكس مكانته الاجتماعية."


def kinds(text):
    return [t.kind for t in tokenize(text)]


def test_tokenize_two_words():
    tokens = tokenize("بيتي كبير")
    assert [t.kind for t in tokens] == [ARABIC_WORD, ARABIC_WORD]


def test_tokenize_sentence_with_number():
    tokens = tokenize(SENTENCE_1)
    assert len(tokens) == 5
    assert tokens[2].kind == NUMBER and tokens[2].surface == "200"
    # trailing period yields no token
    assert tokens[-1].surface == "مربع"


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_offsets_reconstruct_input():
    text = "قال: بيتي كبير! (جداً) 123"
    tokens = tokenize(text)
    for t in tokens:
        assert text[t.start : t.end] == t.surface
    starts = [t.start for t in tokens]
    assert starts == sorted(starts)
    ends = [t.end for t in tokens]
    assert all(s < e for s, e in zip(starts, ends))
    # non-overlap
    assert all(ends[i] <= starts[i + 1] for i in range(len(tokens) - 1))


def segments_of(word, lexicon=None):
    (token,) = tokenize(word)
    breakdown = segment_token(token, lexicon)
    return [(s.text, s.kind, s.counted) for s in breakdown.segments], breakdown.token_count


def test_segment_possessive():
    segs, count = segments_of("بيتي")
    assert segs == [("بيت", STEM, True), ("ي", ENCLITIC_PRONOUN, True)]
    assert count == 2


def test_segment_definite_article_not_counted():
    segs, count = segments_of("الشخص")
    assert segs == [("ال", DEFINITE_ARTICLE, False), ("شخص", STEM, True)]
    assert count == 1


def test_segment_number_token():
    (token,) = tokenize("200")
    breakdown = segment_token(token)
    assert [(s.kind, s.counted) for s in breakdown.segments] == [(STEM, True)]
    assert breakdown.token_count == 1


def test_segment_conjunction_article_stem():
    segs, count = segments_of("والبيت")
    assert segs == [
        ("و", PROCLITIC, True),
        ("ال", DEFINITE_ARTICLE, False),
        ("بيت", STEM, True),
    ]
    assert count == 2


def test_segment_future_verb():
    segs, count = segments_of("سيأتي")
    assert segs[0] == ("س", PROCLITIC, True)
    assert count == 2


def test_segment_preposition_needs_article():
    # bare kaf-initial nouns stay whole; kaf before the article strips
    _, count = segments_of("كبير")
    assert count == 1
    segs, count = segments_of("كالقصر")
    assert segs[0] == ("ك", PROCLITIC, True)
    assert segs[1] == ("ال", DEFINITE_ARTICLE, False)
    assert count == 2


def test_segment_lam_article_elision():
    segs, count = segments_of("للشخص")
    assert [kind for _, kind, _ in segs] == [PROCLITIC, DEFINITE_ARTICLE, STEM]
    assert count == 2


def test_segment_relative_pronoun_whole():
    segs, count = segments_of("التي")
    assert segs == [("التي", STEM, True)]
    assert count == 1


def test_segment_lexicon_exceptions():
    _, count = segments_of("ولد")
    assert count == 1
    segs, count = segments_of("له")
    assert segs == [("ل", PROCLITIC, True), ("ه", STEM, True)]
    assert count == 2


def test_diacritics_preserved_in_segments():
    segs, count = segments_of("بَيْتِي")
    assert segs[0][0] == "بَيْتِ"
    assert segs[1][0] == "ي"
    assert count == 2


@pytest.mark.parametrize(
    "text,total",
    [(SENTENCE_1, 6), (SENTENCE_2, 6), (SENTENCE_3, 9)],
)
def test_calibration_sentences(text, total):
    assert count_morphemes(text).total == total


def test_count_empty():
    count = count_morphemes("")
    assert count.total == 0 and count.breakdowns == ()


def test_count_total_is_sum_of_breakdowns():
    count = count_morphemes(SENTENCE_3)
    assert count.total == sum(b.token_count for b in count.breakdowns)
    assert count.source == "rule_based"


def test_additivity():
    a, b = SENTENCE_1, SENTENCE_2
    assert (
        count_morphemes(a + " " + b).total
        == count_morphemes(a).total + count_morphemes(b).total
    )


def test_determinism():
    assert count_morphemes(SENTENCE_3) == count_morphemes(SENTENCE_3)


def test_lexicon_file_round_trip(tmp_path):
    path = tmp_path / "extra.lexicon"
    path.write_text("# comment line\nوجد\tوجد\n", encoding="utf-8")
    merged = default_lexicon().merged_with(Lexicon.from_file(path))
    (token,) = tokenize("وجد")
    assert segment_token(token, merged).token_count == 1
    # without the entry the conjunction rule splits it
    assert segment_token(token).token_count == 2


def test_lexicon_rejects_bad_lines():
    with pytest.raises(LexiconError):
        Lexicon.from_lines(["بيتي بيت+ي"])  # missing tab
    with pytest.raises(LexiconError):
        Lexicon.from_lines(["بيتي\tبيت+و"])  # does not concatenate back
