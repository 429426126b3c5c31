# -*- coding: utf-8 -*-
"""Randomized invariants for the document format, validator, scorer and
morpheme counter."""
import string

from hypothesis import given, strategies as st

from balagha.annotation import (
    Annotation,
    Document,
    parse_document,
    serialize_document,
    validate_document,
)
from balagha.morphology import STEM, count_morphemes, segment_token, tokenize, _is_diacritic
from balagha.scoring import score_document
from balagha.taxonomy import load_taxonomy

TAXONOMY = load_taxonomy()
ALL_CODES = [d.code.render() for d in TAXONOMY]
DEVICES = {d.code.render(): d for d in TAXONOMY}

AR_LETTERS = "ءأإآابتثجحخدذرزسشصضطظعغفقكلمنهوىيةؤئ"
AR_DIACRITICS = "ًٌٍَُِّْ"


@st.composite
def arabic_words(draw, min_letters=1, max_letters=6):
    letters = draw(
        st.lists(
            st.sampled_from(AR_LETTERS), min_size=min_letters, max_size=max_letters
        )
    )
    marks = draw(
        st.lists(
            st.sampled_from(["", *AR_DIACRITICS]),
            min_size=len(letters),
            max_size=len(letters),
        )
    )
    return "".join(l + m for l, m in zip(letters, marks))


@st.composite
def arabic_texts(draw, min_words=1, max_words=8):
    words = draw(st.lists(arabic_words(), min_size=min_words, max_size=max_words))
    return " ".join(words)


@st.composite
def annotations_for(draw, text_length):
    code = draw(st.sampled_from(ALL_CODES))
    start = draw(st.integers(min_value=0, max_value=text_length))
    end = draw(st.integers(min_value=start, max_value=text_length))
    mark = draw(st.sampled_from(sorted(DEVICES[code].allowed_marks)))
    note = draw(st.none() | st.text(max_size=12))
    return Annotation(code, start, end, mark, note)


@st.composite
def valid_documents(draw):
    text = draw(arabic_texts())
    annotations = draw(st.lists(annotations_for(len(text)), max_size=6))
    metadata = draw(
        st.dictionaries(
            st.text(string.ascii_lowercase, min_size=1, max_size=8),
            st.text(max_size=12),
            max_size=3,
        )
    )
    return Document(
        id=draw(st.text(min_size=1, max_size=16)),
        metadata=metadata,
        text=text,
        manual_morpheme_count=draw(st.none() | st.integers(1, 500)),
        annotations=annotations,
    )


@given(valid_documents())
def test_round_trip_identity(doc):
    assert parse_document(serialize_document(doc)) == doc


@given(valid_documents())
def test_serialization_is_canonical(doc):
    payload = serialize_document(doc)
    assert serialize_document(parse_document(payload)) == payload


@given(valid_documents())
def test_valid_documents_have_no_error_diagnostics(doc):
    assert all(d.severity == "warning" for d in validate_document(doc, TAXONOMY))


@given(valid_documents(), st.randoms())
def test_annotation_order_invariance(doc, rng):
    doc = Document(
        id=doc.id,
        metadata=doc.metadata,
        text=doc.text,
        manual_morpheme_count=doc.manual_morpheme_count or 100,
        annotations=doc.annotations,
    )
    shuffled_annotations = list(doc.annotations)
    rng.shuffle(shuffled_annotations)
    shuffled = Document(
        id=doc.id,
        metadata=doc.metadata,
        text=doc.text,
        manual_morpheme_count=doc.manual_morpheme_count,
        annotations=shuffled_annotations,
    )
    assert score_document(doc, TAXONOMY) == score_document(shuffled, TAXONOMY)


@given(valid_documents())
def test_domain_sums_partition_total(doc):
    doc = Document(
        id=doc.id,
        metadata=doc.metadata,
        text=doc.text,
        manual_morpheme_count=doc.manual_morpheme_count or 100,
        annotations=doc.annotations,
    )
    report = score_document(doc, TAXONOMY)
    assert report.a_sum + report.b_sum + report.c_sum == report.total_marks
    assert report.total_marks == sum(a.mark for a in doc.annotations)


BAD_CODES = ["Q-1", "Z-9", "A-15", "A-0", "B-7", "CA-15", "CE-23", "CG-2", "D-1", "banana"]


@given(
    valid_documents(),
    st.sampled_from(BAD_CODES),
    st.integers(min_value=0, max_value=6),
)
def test_validator_catches_every_unknown_code(doc, bad_code, position):
    index = min(position, len(doc.annotations))
    doc.annotations.insert(index, Annotation(bad_code, 0, 0, 1))
    diagnostics = validate_document(doc, TAXONOMY)
    hits = [
        d
        for d in diagnostics
        if d.severity == "error"
        and d.code == "unknown-device"
        and d.location[0] == index
    ]
    assert len(hits) == 1


@given(
    valid_documents(),
    st.sampled_from(ALL_CODES),
    st.integers(min_value=-5, max_value=9),
    st.integers(min_value=0, max_value=6),
)
def test_validator_catches_every_bad_mark(doc, code, mark, position):
    device = DEVICES[code]
    if mark in device.allowed_marks:
        mark = max(device.allowed_marks) + 1
    index = min(position, len(doc.annotations))
    doc.annotations.insert(index, Annotation(code, 0, 0, mark))
    diagnostics = validate_document(doc, TAXONOMY)
    hits = [
        d
        for d in diagnostics
        if d.severity == "error"
        and d.code == "mark-not-allowed"
        and d.location[0] == index
    ]
    assert len(hits) == 1


@given(valid_documents(), st.sampled_from(["A-3", "B-2", "CE-15"]), st.integers(1, 2))
def test_positive_mark_strictly_increases_density(doc, code, mark):
    base = Document(
        id=doc.id,
        metadata=doc.metadata,
        text=doc.text,
        manual_morpheme_count=min(doc.manual_morpheme_count or 100, 10_000),
        annotations=doc.annotations,
    )
    grown = Document(
        id=base.id,
        metadata=base.metadata,
        text=base.text,
        manual_morpheme_count=base.manual_morpheme_count,
        annotations=base.annotations + [Annotation(code, 0, 0, mark)],
    )
    assert score_document(grown, TAXONOMY).density > score_document(base, TAXONOMY).density


@given(valid_documents())
def test_deduction_strictly_decreases_density(doc):
    base = Document(
        id=doc.id,
        metadata=doc.metadata,
        text=doc.text,
        manual_morpheme_count=min(doc.manual_morpheme_count or 100, 10_000),
        annotations=doc.annotations,
    )
    shrunk = Document(
        id=base.id,
        metadata=base.metadata,
        text=base.text,
        manual_morpheme_count=base.manual_morpheme_count,
        annotations=base.annotations + [Annotation("CG-1", 0, 0, -1)],
    )
    assert score_document(shrunk, TAXONOMY).density < score_document(base, TAXONOMY).density


@given(arabic_texts(), arabic_texts())
def test_morpheme_count_additivity(text1, text2):
    combined = count_morphemes(text1 + " " + text2).total
    assert combined == count_morphemes(text1).total + count_morphemes(text2).total


@given(arabic_texts())
def test_diacritic_insensitivity(text):
    stripped = "".join(ch for ch in text if not _is_diacritic(ch))
    assert count_morphemes(stripped).total == count_morphemes(text).total


@given(arabic_texts(), arabic_words())
def test_appending_word_increases_total(text, word):
    before = count_morphemes(text).total
    after = count_morphemes(text + " " + word).total
    assert after >= before + 1


@given(arabic_texts())
def test_counting_is_deterministic(text):
    assert count_morphemes(text) == count_morphemes(text)


@given(arabic_words())
def test_definite_article_never_counts(word):
    (token,) = tokenize(word)
    breakdown = segment_token(token)
    if [s.kind for s in breakdown.segments] != [STEM]:
        return  # only single-stem words prefix cleanly
    prefixed = tokenize("ال" + word)
    if len(prefixed) != 1:
        return
    assert segment_token(prefixed[0]).token_count == breakdown.token_count


@given(arabic_texts())
def test_tokens_cover_input_in_order(text):
    tokens = tokenize(text)
    last_end = 0
    for t in tokens:
        assert t.start >= last_end
        assert text[t.start : t.end] == t.surface
        last_end = t.end
