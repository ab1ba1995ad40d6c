"""Rule-based sentence splitting, tagging, lemmatization and extraction.

The tagger only needs to tell verbs from everything else on process prose,
so it works from closed-class word lists, the shipped verb lexicon and a few
context rules instead of a statistical model. All functions are pure.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace

from procmatch.errors import EmptyActions, MalformedCondition
from procmatch.nlp.lexicon import (
    ADPOSITIONS,
    AUXILIARIES,
    DETERMINERS,
    NOMINAL_PREPOSITIONS,
    Lexicon,
    default_lexicon,
)


class POS(str, enum.Enum):
    VERB = "VERB"
    AUX = "AUX"
    NOUN = "NOUN"
    DET = "DET"
    ADP = "ADP"
    PUNCT = "PUNCT"
    OTHER = "OTHER"


@dataclass(frozen=True)
class Token:
    text: str
    lemma: str
    pos: POS
    index: int
    # character offset into the owning sentence (or raw text, before splitting)
    start: int

    @property
    def end(self) -> int:
        return self.start + len(self.text)


@dataclass(frozen=True)
class Sentence:
    text: str
    tokens: tuple[Token, ...]
    index: int


@dataclass(frozen=True)
class ActionPhrase:
    label: str
    sentence_index: int
    token_index: int


@dataclass(frozen=True)
class ConditionClause:
    sentence_index: int
    guard: str
    consequent_actions: tuple[ActionPhrase, ...]
    # token index of the "if" keyword in the source sentence
    keyword_index: int


_TOKEN_RE = re.compile(r"(?:[^\W_]|')+|[^\w\s]|_")
_TERMINATOR_RE = re.compile(r"[.!?]")
_WHITESPACE_RE = re.compile(r"\s*")


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into word runs and single punctuation marks.

    Tokens come back untagged (``POS.OTHER``) with the lowercased text as a
    placeholder lemma.
    """
    return [
        Token(m.group(), m.group().lower(), POS.OTHER, i, m.start())
        for i, m in enumerate(_TOKEN_RE.finditer(text))
    ]


def split_sentences(text: str, lexicon: Lexicon | None = None) -> list[Sentence]:
    """Break text after ``.``/``!``/``?`` when whitespace and an uppercase
    letter, or the end of the text, follow. Sentence text is
    whitespace-normalized and its tokens are fully annotated."""
    chunks: list[str] = []
    start = 0
    for m in _TERMINATOR_RE.finditer(text):
        end = m.end()
        gap_end = _WHITESPACE_RE.match(text, end).end()
        if gap_end == len(text) or (gap_end > end and text[gap_end].isupper()):
            chunks.append(text[start:end])
            start = end
    chunks.append(text[start:])
    sentences = []
    for chunk in chunks:
        normalized = " ".join(chunk.split())
        if normalized:
            tokens = annotate(tokenize(normalized), lexicon)
            sentences.append(Sentence(normalized, tuple(tokens), len(sentences)))
    return sentences


def _is_punct(word: str) -> bool:
    return not any(ch.isalnum() for ch in word)


def _doubled(stem: str) -> bool:
    return len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "aeiou"


def _stem_candidates(word: str) -> list[str]:
    """Possible verb lemmas for an inflected form, most specific first."""
    candidates = []
    if word.endswith(("ies", "ied")) and len(word) > 4:
        candidates.append(word[:-3] + "y")
    if word.endswith("ing") and len(word) > 4:
        stem = word[:-3]
        candidates += [stem, stem + "e"]
        if _doubled(stem):
            candidates.append(stem[:-1])
        if stem.endswith("y"):
            candidates.append(stem[:-1] + "ie")
    elif word.endswith("ed") and len(word) > 3:
        stem = word[:-2]
        candidates += [stem, stem + "e"]
        if _doubled(stem):
            candidates.append(stem[:-1])
    if word.endswith("es") and len(word) > 3:
        candidates.append(word[:-2])
    if word.endswith("s") and not word.endswith("ss") and len(word) > 2:
        candidates.append(word[:-1])
    return candidates


def _fallback_stem(word: str) -> str:
    if word.endswith(("ies", "ied")) and len(word) > 4:
        return word[:-3] + "y"
    for suffix in ("ing", "ed"):
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            stem = word[: -len(suffix)]
            return stem[:-1] if _doubled(stem) else stem
    if word.endswith(("sses", "xes", "ches", "shes", "zes")):
        return word[:-2]
    if word.endswith("s") and not word.endswith("ss") and len(word) > 2:
        return word[:-1]
    return word


def _verb_lemma(word: str, lexicon: Lexicon) -> str | None:
    if word in lexicon.verb_forms:
        return lexicon.verb_forms[word]
    if word.endswith(("s", "ed", "ing")):
        for candidate in _stem_candidates(word):
            if candidate in lexicon.verb_lemmas:
                return candidate
    return None


def lemmatize(token: Token, lexicon: Lexicon | None = None) -> str:
    """Dictionary form of a tagged token, lowercase.

    Only VERB and AUX tokens are reduced; other tags keep their lowercased
    surface form because nothing downstream consumes noun lemmas.
    """
    lexicon = lexicon or default_lexicon()
    word = token.text.lower()
    if token.pos not in (POS.VERB, POS.AUX):
        return word
    if word in lexicon.irregular:
        return lexicon.irregular[word]
    lemma = _verb_lemma(word, lexicon)
    if lemma is not None:
        return lemma
    return _fallback_stem(word) or word


def _is_participle(word: str, lexicon: Lexicon) -> bool:
    return word.endswith(("ed", "ing")) or word in lexicon.irregular


def _verb_candidate(word: str | None, lexicon: Lexicon) -> bool:
    if word is None or word in AUXILIARIES or word in DETERMINERS or word in ADPOSITIONS:
        return False
    return _verb_lemma(word, lexicon) is not None


def _closed_class(word: str) -> POS | None:
    if word in AUXILIARIES:
        return POS.AUX
    if word in DETERMINERS:
        return POS.DET
    if word in ADPOSITIONS:
        return POS.ADP
    if _is_punct(word):
        return POS.PUNCT
    return None


def pos_tag(tokens: list[Token], lexicon: Lexicon | None = None) -> list[Token]:
    """Assign a part-of-speech tag to every token of one sentence.

    Order of precedence: closed-class lists, then lexicon verbs (directly or
    through suffix stripping), then NOUN after a determiner, else OTHER.
    A lexicon verb is demoted to NOUN in a nominal context: right after a
    determiner, after ``of/in/on/at/for/with`` unless it ends in -ing, right
    after another verb, or as the head or modifier of a subject directly
    followed by an auxiliary ("the order is", "purchase orders are").
    """
    lexicon = lexicon or default_lexicon()
    words = [t.text.lower() for t in tokens]
    tagged: list[Token] = []
    for i, token in enumerate(tokens):
        word = words[i]
        prev = tagged[-1].pos if tagged else None
        prev_word = words[i - 1] if i else None
        nxt = words[i + 1] if i + 1 < len(words) else None
        after = words[i + 2] if i + 2 < len(words) else None
        pos = _closed_class(word)
        if pos is None and _verb_candidate(word, lexicon):
            finite = not _is_participle(word, lexicon)
            if (
                prev is POS.DET
                or (prev_word in NOMINAL_PREPOSITIONS and not word.endswith("ing"))
                or (prev is POS.VERB and finite)
                or (finite and nxt in AUXILIARIES)
                or (
                    finite
                    and _verb_candidate(nxt, lexicon)
                    and not _is_participle(nxt, lexicon)
                    and after in AUXILIARIES
                )
            ):
                pos = POS.NOUN
            else:
                pos = POS.VERB
        if pos is None:
            pos = POS.NOUN if prev is POS.DET else POS.OTHER
        tagged.append(replace(token, pos=pos))
    return tagged


def annotate(tokens: list[Token], lexicon: Lexicon | None = None) -> list[Token]:
    """Tag and lemmatize a sentence's tokens."""
    lexicon = lexicon or default_lexicon()
    return [replace(t, lemma=lemmatize(t, lexicon)) for t in pos_tag(tokens, lexicon)]


def sentence_actions(sentence: Sentence, start: int = 0, stop: int | None = None) -> list[ActionPhrase]:
    """Actions for the VERB tokens of ``sentence`` with index in [start, stop)."""
    tokens = sentence.tokens[start:stop]
    return [
        ActionPhrase(t.lemma.capitalize(), sentence.index, t.index)
        for t in tokens
        if t.pos is POS.VERB
    ]


def extract_actions(text: str, lexicon: Lexicon | None = None) -> list[ActionPhrase]:
    """One action per verb occurrence, in document order.

    Raises EmptyActions when the text has no verb at all.
    """
    actions = [a for s in split_sentences(text, lexicon) for a in sentence_actions(s)]
    if not actions:
        raise EmptyActions("no actions extracted: the text contains no verb")
    return actions


def keyword_index(sentence: Sentence) -> int | None:
    """Index of the first standalone "if" token, if any."""
    for token in sentence.tokens:
        if token.text.lower() == "if":
            return token.index
    return None


def _comma_free_split(tokens: tuple[Token, ...], keyword: int) -> tuple[int, int]:
    # guard runs up to its own predicate, then until "then", the subject of
    # a following clause, or the next verb, whichever comes first
    n = len(tokens)
    predicate = next(
        (k for k in range(keyword + 1, n) if tokens[k].pos in (POS.AUX, POS.VERB)), None
    )
    if predicate is None:
        return n, n
    for k in range(predicate + 1, n):
        if tokens[k].text.lower() == "then":
            return k, k + 1
    for k in range(predicate + 1, n):
        if tokens[k].pos is POS.DET and any(t.pos is POS.VERB for t in tokens[k + 1 :]):
            return k, k
    for k in range(predicate + 1, n):
        if tokens[k].pos is POS.VERB:
            return k, k
    return n, n


def extract_conditions(sentences: list[Sentence]) -> list[ConditionClause]:
    """One clause per sentence containing the word "if".

    The guard is the text between "if" and the next comma; sentences without
    that comma fall back to a verb-phrase heuristic. Raises
    MalformedCondition when the guard would be empty.
    """
    clauses = []
    for sentence in sentences:
        keyword = keyword_index(sentence)
        if keyword is None:
            continue
        tokens = sentence.tokens
        comma = next(
            (t.index for t in tokens[keyword + 1 :] if t.text == ","), None
        )
        if comma is not None:
            guard_end, rest = comma, comma + 1
        else:
            guard_end, rest = _comma_free_split(tokens, keyword)
        guard = list(tokens[keyword + 1 : guard_end])
        while guard and guard[-1].pos is POS.PUNCT:
            guard.pop()
        if not guard:
            raise MalformedCondition(
                f"sentence {sentence.index}: 'if' has no condition: {sentence.text!r}"
            )
        clauses.append(
            ConditionClause(
                sentence_index=sentence.index,
                guard=sentence.text[guard[0].start : guard[-1].end],
                consequent_actions=tuple(sentence_actions(sentence, rest)),
                keyword_index=keyword,
            )
        )
    return clauses
