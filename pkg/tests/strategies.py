"""Random workflow nets and hypothesis strategies shared by the tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from procmatch.nlp import default_lexicon
from procmatch.petri import PetriNet, validate_workflow

# single-word labels present in tests/data/toy_embeddings_8d.txt
TOY_LABELS = (
    "Place Order Purchase Request Select Check Verify Inspect Review Confirm "
    "Approve Accept Reject Sign Pack Package Wrap Pick Assemble Label Create "
    "Generate Produce Record Update Schedule Receive Store Return Ship Deliver "
    "Dispatch Send Transport Notify Invoice Pay Bill Refund Cancel"
).split()


class _Grower:
    def __init__(self, labels, rng: random.Random) -> None:
        self.rng = rng
        self.labels = labels
        self.pre: dict[str, set[str]] = {}
        self.post: dict[str, set[str]] = {}
        self.label: dict[str, str] = {}
        self.places = ["p0", "p1"]
        self.new_transition(["p0"], ["p1"])

    def clone(self) -> _Grower:
        other = object.__new__(_Grower)
        other.rng, other.labels = self.rng, self.labels
        other.pre = {t: set(s) for t, s in self.pre.items()}
        other.post = {t: set(s) for t, s in self.post.items()}
        other.label = dict(self.label)
        other.places = list(self.places)
        return other

    def new_place(self) -> str:
        p = f"p{len(self.places)}"
        self.places.append(p)
        return p

    def new_transition(self, pre, post) -> str:
        t = f"t{len(self.label)}"
        self.label[t] = self.rng.choice(self.labels)
        self.pre[t] = set(pre)
        self.post[t] = set(post)
        return t

    def consumers(self, p):
        return [t for t in self.label if p in self.pre[t]]

    def producers(self, p):
        return [t for t in self.label if p in self.post[t]]

    # every rule below preserves soundness
    def refine_place(self) -> None:
        p = self.rng.choice(self.places)
        q = self.new_place()
        for t in self.consumers(p):
            self.pre[t].discard(p)
            self.pre[t].add(q)
        self.new_transition([p], [q])

    def refine_transition(self) -> None:
        t = self.rng.choice(list(self.label))
        q = self.new_place()
        outputs = self.post[t]
        self.post[t] = {q}
        self.new_transition([q], outputs)

    def alternative(self) -> None:
        t = self.rng.choice(list(self.label))
        self.new_transition(self.pre[t], self.post[t])

    def parallel(self) -> None:
        t = self.rng.choice(list(self.label))
        q1, q2 = self.new_place(), self.new_place()
        # split after t, join in a fresh transition that takes over t's outputs
        outputs = self.post[t]
        mid = self.new_place()
        self.post[t] = {mid, q1}
        self.new_transition([q1], [q2])
        self.new_transition([mid, q2], outputs)

    def loop(self) -> None:
        interior = [p for p in self.places if self.producers(p) and self.consumers(p)]
        if not interior:
            return
        p = self.rng.choice(interior)
        q = self.new_place()
        self.new_transition([p], [q])
        self.new_transition([q], [p])

    def mutate(self) -> None:
        t = self.rng.choice(list(self.label))
        p = self.rng.choice(self.places)
        kind = self.rng.randrange(3)
        if kind == 0:
            self.pre[t].add(p)
        elif kind == 1:
            self.post[t].add(p)
        elif len(self.pre[t]) > 1:
            self.pre[t].discard(p)

    def build(self, name: str) -> PetriNet:
        net = PetriNet(name)
        for p in self.places:
            net.add_place(p)
        for t, label in self.label.items():
            net.add_transition(t, label)
            for p in sorted(self.pre[t]):
                net.add_arc(p, t)
            for p in sorted(self.post[t]):
                net.add_arc(t, p)
        return net


def random_workflow_net(
    rng: random.Random,
    max_transitions: int = 12,
    max_places: int | None = None,
    mutations: int = 0,
    labels=TOY_LABELS,
    name: str = "random",
) -> PetriNet:
    """Grow a workflow net by soundness-preserving refinements, then apply up
    to ``mutations`` random arc edits that keep it a workflow net (and so may
    make it unsound). Every node id is stable: p0 is the source."""
    g = _Grower(labels, rng)
    rules = ("refine_place", "refine_transition", "alternative", "parallel", "loop")
    cap_places = max_places if max_places is not None else 10**9
    for _ in range(rng.randrange(0, 3 * max_transitions)):
        trial = g.clone()
        getattr(trial, rng.choice(rules))()
        if len(trial.label) <= max_transitions and len(trial.places) <= cap_places:
            g = trial
    net = g.build(name)
    for _ in range(mutations):
        trial = g.clone()
        trial.mutate()
        candidate = trial.build(name)
        if validate_workflow(candidate).is_workflow_net:
            g, net = trial, candidate
    return net


@st.composite
def workflow_nets(draw, max_transitions: int = 12, max_places: int | None = None, mutations: int = 0):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_workflow_net(random.Random(seed), max_transitions, max_places, mutations)


NOUNS = ("order", "customer", "invoice", "stock", "goods", "payment", "report", "shipment")
AUX_WORDS = ("is", "are", "was", "were", "be", "been", "has", "have", "had")
DETS = ("the", "a", "an", "this")


@st.composite
def verb_forms(draw):
    """An inflected form of a lexicon verb, with its lemma.

    Irregular entries win over the regular table, so "found" pairs with "find".
    """
    lex = default_lexicon()
    forms = sorted(lex.verb_forms.items())
    form, lemma = draw(st.sampled_from(forms))
    return form, lex.irregular.get(form, lemma)


@st.composite
def simple_clauses(draw):
    """'<det> <noun> [<aux>] <verb form> <det> <noun>' built from the lexicon."""
    words = [draw(st.sampled_from(DETS)), draw(st.sampled_from(NOUNS))]
    if draw(st.booleans()):
        words.append(draw(st.sampled_from(AUX_WORDS)))
    form, _ = draw(verb_forms())
    words.append(form)
    if draw(st.booleans()):
        words += [draw(st.sampled_from(DETS)), draw(st.sampled_from(NOUNS))]
    return " ".join(words)


@st.composite
def sentences(draw, max_clauses: int = 3):
    clauses = draw(st.lists(simple_clauses(), min_size=1, max_size=max_clauses))
    text = ", ".join(clauses)
    return text[0].upper() + text[1:] + "."


@st.composite
def texts(draw, max_sentences: int = 4):
    return " ".join(draw(st.lists(sentences(), min_size=1, max_size=max_sentences)))
