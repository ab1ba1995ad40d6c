"""Turn a process description into a workflow Petri net.

Sentences without "if" become sequential chains. A run of consecutive
conditional sentences becomes a single exclusive choice: one branch per
sentence, all branches merging into a fresh place that continues the main
chain. Place and transition ids are generated in construction order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from procmatch.errors import EmptyActions
from procmatch.nlp import (
    ActionPhrase,
    Lexicon,
    extract_conditions,
    sentence_actions,
    split_sentences,
)
from procmatch.petri import SILENT_PREFIX, PetriNet

log = logging.getLogger(__name__)

ELSE_LABEL = SILENT_PREFIX + "else"
SKIP_LABEL = SILENT_PREFIX + "skip"


@dataclass(frozen=True)
class TranslationResult:
    net: PetriNet
    action_map: dict[str, ActionPhrase]
    branch_guards: dict[str, str]
    decision_places: tuple[str, ...]
    warnings: tuple[str, ...]


class _Builder:
    def __init__(self, name: str) -> None:
        self.net = PetriNet(name)
        self.action_map: dict[str, ActionPhrase] = {}
        self._places = 0
        self._transitions = 0

    def place(self) -> str:
        pid = f"p{self._places}"
        self._places += 1
        self.net.add_place(pid)
        return pid

    def transition(self, label: str, action: ActionPhrase | None = None) -> str:
        tid = f"t{self._transitions}"
        self._transitions += 1
        self.net.add_transition(tid, label)
        if action is not None:
            self.action_map[tid] = action
        return tid

    def chain(self, start: str, actions: list[ActionPhrase], end: str | None = None) -> tuple[str, str]:
        """Append ``actions`` after place ``start``; returns (first transition,
        last place). With ``end`` given, the last transition feeds ``end``."""
        place = start
        first = None
        for i, action in enumerate(actions):
            tid = self.transition(action.label, action)
            first = first or tid
            self.net.add_arc(place, tid)
            place = end if (end is not None and i == len(actions) - 1) else self.place()
            self.net.add_arc(tid, place)
        return first, place


def translate(text: str, name: str = "business", lexicon: Lexicon | None = None) -> TranslationResult:
    """Build the workflow net for ``text``.

    Raises EmptyActions when the text contains no verb. A lone conditional
    sentence gets a silent ``τ:else`` alternative and a warning.
    """
    sentences = split_sentences(text, lexicon)
    if not any(sentence_actions(s) for s in sentences):
        raise EmptyActions("no actions extracted: the text contains no verb")
    clauses = {c.sentence_index: c for c in extract_conditions(sentences)}

    b = _Builder(name)
    guards: dict[str, str] = {}
    decisions: list[str] = []
    warnings: list[str] = []
    current = b.place()
    i = 0
    while i < len(sentences):
        sentence = sentences[i]
        clause = clauses.get(sentence.index)
        if clause is None:
            _, current = b.chain(current, sentence_actions(sentence))
            i += 1
            continue

        # actions ahead of "if" belong to the flow leading into the decision
        _, current = b.chain(current, sentence_actions(sentence, 0, clause.keyword_index))
        group = [clause]
        i += 1
        while i < len(sentences) and sentences[i].index in clauses:
            nxt = clauses[sentences[i].index]
            if sentence_actions(sentences[i], 0, nxt.keyword_index):
                break
            group.append(nxt)
            i += 1

        decision = current
        decisions.append(decision)
        merge = b.place()
        for member in group:
            branch = sentence_actions(sentences[member.sentence_index], member.keyword_index + 1)
            if branch:
                first, _ = b.chain(decision, branch, end=merge)
            else:
                first = b.transition(SKIP_LABEL)
                b.net.add_arc(decision, first)
                b.net.add_arc(first, merge)
            guards[first] = member.guard
        if len(group) == 1:
            otherwise = b.transition(ELSE_LABEL)
            b.net.add_arc(decision, otherwise)
            b.net.add_arc(otherwise, merge)
            guards[otherwise] = f"not ({group[0].guard})"
            message = (
                f"sentence {group[0].sentence_index}: single-branch condition "
                f"{group[0].guard!r}; added silent else-branch"
            )
            log.info(message)
            warnings.append(message)
        current = merge

    return TranslationResult(b.net, b.action_map, guards, tuple(decisions), tuple(warnings))
