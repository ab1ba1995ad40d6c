"""Deterministic extraction of process steps from English prose."""

from procmatch.nlp.lexicon import Lexicon, default_lexicon
from procmatch.nlp.pipeline import (
    POS,
    ActionPhrase,
    ConditionClause,
    Sentence,
    Token,
    annotate,
    extract_actions,
    extract_conditions,
    keyword_index,
    lemmatize,
    pos_tag,
    sentence_actions,
    split_sentences,
    tokenize,
)

__all__ = [
    "POS",
    "ActionPhrase",
    "ConditionClause",
    "Lexicon",
    "Sentence",
    "Token",
    "annotate",
    "default_lexicon",
    "extract_actions",
    "extract_conditions",
    "keyword_index",
    "lemmatize",
    "pos_tag",
    "sentence_actions",
    "split_sentences",
    "tokenize",
]
