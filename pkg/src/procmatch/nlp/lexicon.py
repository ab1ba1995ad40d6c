"""Closed-class word lists and the shipped verb resources."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

AUXILIARIES = frozenset(
    "be am is are was were been being have has had do does did will would "
    "can could shall should may might must".split()
)
DETERMINERS = frozenset("the a an this that these those".split())
ADPOSITIONS = frozenset("of in on at by for to with and or if then when".split())

# prepositions after which a bare or -s verb form reads as a noun ("in stock")
NOMINAL_PREPOSITIONS = frozenset("of in on at for with".split())


def read_table(text: str) -> dict[str, str]:
    """Parse ``inflected_form<TAB>lemma`` lines; ``#`` starts a comment line."""
    table: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        form, sep, lemma = line.partition("\t")
        if not sep or not form or not lemma.strip():
            raise ValueError(f"line {lineno}: expected 'form<TAB>lemma', got {raw!r}")
        table[form.lower()] = lemma.strip().lower()
    return table


@dataclass(frozen=True, eq=False)
class Lexicon:
    verb_forms: dict[str, str]
    irregular: dict[str, str]
    verb_lemmas: frozenset[str] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "verb_lemmas", frozenset(self.verb_forms.values()))


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    data = resources.files("procmatch.nlp") / "data"
    verbs = read_table((data / "verbs.tsv").read_text(encoding="utf-8"))
    irregular = read_table((data / "irregular.tsv").read_text(encoding="utf-8"))
    return Lexicon(verb_forms=verbs, irregular=irregular)
