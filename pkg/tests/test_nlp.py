from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from procmatch.errors import EmptyActions, MalformedCondition
from procmatch.nlp import (
    POS,
    annotate,
    default_lexicon,
    extract_actions,
    extract_conditions,
    lemmatize,
    pos_tag,
    split_sentences,
    tokenize,
)
from procmatch.nlp.lexicon import AUXILIARIES
from strategies import sentences, texts, verb_forms

ORDER_ACTIONS = ["Place", "Check", "Confirm", "Pack", "Create", "Receive", "Ship"]


def words(tokens):
    return [t.text for t in tokens]


def tag_of(sentence: str, word: str) -> POS:
    tokens = pos_tag(tokenize(sentence))
    return next(t.pos for t in tokens if t.text == word)


# tokenize

def test_tokenize_sentence():
    assert words(tokenize("The customer places an order.")) == [
        "The", "customer", "places", "an", "order", ".",
    ]


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_comma():
    assert words(tokenize("goods are received, and then")) == [
        "goods", "are", "received", ",", "and", "then",
    ]


def test_tokenize_apostrophes_and_offsets():
    text = "the customer's order isn't  ready!"
    tokens = tokenize(text)
    assert words(tokens) == ["the", "customer's", "order", "isn't", "ready", "!"]
    for tok in tokens:
        assert text[tok.start:tok.end] == tok.text
    assert [t.index for t in tokens] == list(range(len(tokens)))


# split_sentences

def test_split_order_text(order_text):
    sents = split_sentences(order_text)
    assert len(sents) == 3
    assert sents[0].text.startswith("The customer places an order")
    assert sents[1].text.startswith("If the stock is available")
    assert sents[2].text.startswith("If the stock is not available")
    assert [s.index for s in sents] == [0, 1, 2]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Approve the invoice.", ["Approve the invoice."]),
        ("No terminator here", ["No terminator here"]),
        ("Pay the bill! Ship it? Yes.", ["Pay the bill!", "Ship it?", "Yes."]),
        # lowercase after the period is not a boundary
        ("Version 2. then ship it.", ["Version 2. then ship it."]),
        ("", []),
        ("   \n ", []),
    ],
)
def test_split_sentences(text, expected):
    assert [s.text for s in split_sentences(text)] == expected


def test_sentence_text_normalizes_whitespace():
    (sent,) = split_sentences("The  clerk\n approves\tthe invoice.")
    assert sent.text == "The clerk approves the invoice."
    assert " ".join(words(sent.tokens)).replace(" .", ".") == sent.text


# pos_tag

def test_places_is_verb():
    assert tag_of("The customer places an order", "places") is POS.VERB


def test_order_after_determiner_is_noun():
    assert tag_of("The customer places an order", "order") is POS.NOUN


@pytest.mark.parametrize("aux", sorted(AUXILIARIES))
def test_auxiliaries_are_aux(aux):
    assert tag_of(f"the order {aux} shipped", aux) is POS.AUX


def test_closed_classes():
    tokens = pos_tag(tokenize("If the stock is available, then ship it."))
    assert [t.pos for t in tokens] == [
        POS.ADP, POS.DET, POS.NOUN, POS.AUX, POS.OTHER, POS.PUNCT,
        POS.ADP, POS.VERB, POS.OTHER, POS.PUNCT,
    ]


def test_unknown_word_tags():
    assert tag_of("a zorblax arrives", "zorblax") is POS.NOUN
    assert tag_of("zorblax arrives", "zorblax") is POS.OTHER


def test_lexicon_verb_in_nominal_position_is_noun():
    # "purchase" and "order" are lexicon verbs, but here they name a document
    assert tag_of("a purchase order is created", "purchase") is POS.NOUN
    assert tag_of("a purchase order is created", "order") is POS.NOUN
    assert tag_of("the system checks inventory", "system") is POS.NOUN
    assert tag_of("the system checks inventory", "checks") is POS.VERB


def test_pos_tag_is_total():
    tokens = pos_tag(tokenize("Weird ~ input 42 ... with, stuff"))
    assert all(isinstance(t.pos, POS) for t in tokens)


# lemmatize

@pytest.mark.parametrize(
    "word, lemma",
    [
        ("places", "place"),
        ("shipped", "ship"),
        ("received", "receive"),
        ("checks", "check"),
        ("confirmed", "confirm"),
        ("packed", "pack"),
        ("created", "create"),
        ("verifies", "verify"),
        ("shipping", "ship"),
        ("is", "be"),
        ("has", "have"),
        ("sent", "send"),
        ("Approves", "approve"),
    ],
)
def test_lemmatize(word, lemma):
    (token,) = annotate(tokenize(word))
    if token.pos not in (POS.VERB, POS.AUX):
        token = token.__class__(token.text, token.lemma, POS.VERB, token.index, token.start)
    assert lemmatize(token) == lemma


def test_lemmas_nonempty_lowercase(order_text):
    for sent in split_sentences(order_text):
        for tok in sent.tokens:
            assert tok.lemma and tok.lemma == tok.lemma.lower()


@given(verb_forms())
@settings(max_examples=300)
def test_lexicon_forms_lemmatize_to_their_lemma(pair):
    form, lemma = pair
    (token,) = annotate(tokenize(f"they {form}"))[1:]
    token = token.__class__(token.text, token.lemma, POS.VERB, token.index, token.start)
    assert lemmatize(token) == lemma


# extract_actions

def test_order_actions(order_text):
    assert [a.label for a in extract_actions(order_text)] == ORDER_ACTIONS


def test_single_verb():
    assert [a.label for a in extract_actions("The clerk approves the invoice.")] == ["Approve"]


def test_no_verb_raises():
    with pytest.raises(EmptyActions, match="no actions extracted"):
        extract_actions("The invoice and the receipt.")


def test_duplicates_retained():
    labels = [a.label for a in extract_actions("The clerk checks the order. The manager checks it.")]
    assert labels == ["Check", "Check"]


# extract_conditions

def test_order_conditions(order_text):
    clauses = extract_conditions(split_sentences(order_text))
    assert [c.sentence_index for c in clauses] == [1, 2]
    assert clauses[0].guard == "the stock is available"
    assert [a.label for a in clauses[0].consequent_actions] == ["Confirm", "Pack"]
    assert clauses[1].guard == "the stock is not available"
    assert [a.label for a in clauses[1].consequent_actions] == ["Create", "Receive", "Ship"]


def test_gift_is_not_a_condition():
    assert extract_conditions(split_sentences("The gift arrives.")) == []


def test_trailing_if_is_malformed():
    with pytest.raises(MalformedCondition):
        extract_conditions(split_sentences("Ship the order if."))


def test_guard_without_comma():
    (clause,) = extract_conditions(split_sentences("If the invoice is approved the clerk pays the supplier."))
    assert clause.guard == "the invoice is approved"
    assert [a.label for a in clause.consequent_actions] == ["Pay"]


def test_if_mid_sentence():
    (clause,) = extract_conditions(split_sentences("The clerk checks the order and if it is valid, ships it."))
    assert clause.guard == "it is valid"
    assert [a.label for a in clause.consequent_actions] == ["Ship"]


# properties over generated text

AUX_LEMMAS = {lemmatize(t) for t in annotate(tokenize(" ".join(sorted(AUXILIARIES))))}


@given(texts())
@settings(max_examples=200)
def test_aux_never_produces_actions(text):
    try:
        actions = extract_actions(text)
    except EmptyActions:
        return
    assert not {a.label.lower() for a in actions} & AUX_LEMMAS


@given(texts(), st.sampled_from(["gift", "Gift", "shift", "iffy", "lift", "sniff"]))
@settings(max_examples=200)
def test_if_substrings_never_trigger(text, word):
    text = text[:-1] + f" {word}."
    assert extract_conditions(split_sentences(text)) == []


@given(texts())
@settings(max_examples=200)
def test_actions_trace_to_verb_tokens(text):
    sents = split_sentences(text)
    try:
        actions = extract_actions(text)
    except EmptyActions:
        assert not any(t.pos is POS.VERB for s in sents for t in s.tokens)
        return
    verb_positions = [(s.index, t.index) for s in sents for t in s.tokens if t.pos is POS.VERB]
    assert [(a.sentence_index, a.token_index) for a in actions] == verb_positions
    for action in actions:
        token = sents[action.sentence_index].tokens[action.token_index]
        assert token.pos is POS.VERB
        assert action.label == token.lemma.capitalize()


@given(texts())
@settings(max_examples=100)
def test_pipeline_is_deterministic(text):
    first = split_sentences(text)
    second = split_sentences(text)
    assert first == second
    assert repr(first) == repr(second)


@given(sentences())
@settings(max_examples=200)
def test_tokens_reproduce_sentence_text(text):
    for sent in split_sentences(text):
        assert "".join(words(sent.tokens)) == sent.text.replace(" ", "")


def test_default_lexicon_size():
    lex = default_lexicon()
    assert len(lex.verb_lemmas) >= 500
    assert lex.verb_forms["shipped"] == "ship"
