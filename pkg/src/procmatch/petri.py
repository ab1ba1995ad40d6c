"""Workflow Petri nets: structure, firing rule, validation and soundness.

Arcs have weight 1 and there are no inhibitor arcs. Places and transitions
share one id namespace.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Literal

from procmatch import kernels
from procmatch.errors import (
    BipartiteViolation,
    DuplicateId,
    EmptyLabel,
    NotEnabled,
    NotWorkflowNet,
    UnknownNode,
)

SILENT_PREFIX = "τ:"


def is_silent_label(label: str) -> bool:
    return label.startswith(SILENT_PREFIX)


class PetriNet:
    """A place/transition net with labeled transitions.

    Builder methods mutate the net and return it, so construction can be
    chained. Treat a net as read-only once it is handed to analysis code.
    """

    def __init__(self, name: str = "") -> None:
        self.name = name
        self._places: dict[str, None] = {}
        self._transitions: dict[str, str] = {}
        self._arcs: dict[tuple[str, str], None] = {}
        self._pre: dict[str, list[str]] = {}
        self._post: dict[str, list[str]] = {}

    # -- construction -------------------------------------------------------

    def _claim(self, node_id: str) -> None:
        if not isinstance(node_id, str) or not node_id:
            raise ValueError(f"node ids must be nonempty strings, got {node_id!r}")
        if node_id in self._places or node_id in self._transitions:
            raise DuplicateId(f"duplicate node id {node_id!r}")
        self._pre[node_id] = []
        self._post[node_id] = []

    def add_place(self, place_id: str) -> PetriNet:
        self._claim(place_id)
        self._places[place_id] = None
        return self

    def add_transition(self, transition_id: str, label: str) -> PetriNet:
        if not isinstance(label, str) or not label.strip():
            raise EmptyLabel(f"transition {transition_id!r} needs a nonempty label")
        self._claim(transition_id)
        self._transitions[transition_id] = label
        return self

    def add_arc(self, source: str, target: str) -> PetriNet:
        for node in (source, target):
            if node not in self._pre:
                raise UnknownNode(f"arc endpoint {node!r} is not in the net")
        if (source in self._places) == (target in self._places):
            kind = "place" if source in self._places else "transition"
            raise BipartiteViolation(f"arc {source!r} -> {target!r} joins {kind} to {kind}")
        if (source, target) not in self._arcs:
            self._arcs[(source, target)] = None
            self._post[source].append(target)
            self._pre[target].append(source)
        return self

    def copy(self, name: str | None = None) -> PetriNet:
        net = PetriNet(self.name if name is None else name)
        for p in self._places:
            net.add_place(p)
        for t, label in self._transitions.items():
            net.add_transition(t, label)
        for s, d in self._arcs:
            net.add_arc(s, d)
        return net

    # -- queries ------------------------------------------------------------

    @property
    def places(self) -> tuple[str, ...]:
        return tuple(self._places)

    @property
    def transitions(self) -> Mapping[str, str]:
        """Transition id -> label, in insertion order."""
        return dict(self._transitions)

    @property
    def arcs(self) -> tuple[tuple[str, str], ...]:
        return tuple(self._arcs)

    def label(self, transition_id: str) -> str:
        try:
            return self._transitions[transition_id]
        except KeyError:
            raise UnknownNode(f"no transition {transition_id!r}") from None

    def is_place(self, node_id: str) -> bool:
        return node_id in self._places

    def is_transition(self, node_id: str) -> bool:
        return node_id in self._transitions

    def preset(self, node_id: str) -> tuple[str, ...]:
        try:
            return tuple(self._pre[node_id])
        except KeyError:
            raise UnknownNode(f"no node {node_id!r}") from None

    def postset(self, node_id: str) -> tuple[str, ...]:
        try:
            return tuple(self._post[node_id])
        except KeyError:
            raise UnknownNode(f"no node {node_id!r}") from None

    def visible_transitions(self) -> list[str]:
        """Ids of transitions whose label is not silent, in insertion order."""
        return [t for t, label in self._transitions.items() if not is_silent_label(label)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PetriNet):
            return NotImplemented
        return (
            self.name == other.name
            and set(self._places) == set(other._places)
            and self._transitions == other._transitions
            and set(self._arcs) == set(other._arcs)
        )

    __hash__ = None  # mutable during construction

    def __repr__(self) -> str:
        return (
            f"PetriNet({self.name!r}, places={len(self._places)}, "
            f"transitions={len(self._transitions)}, arcs={len(self._arcs)})"
        )


class Marking(Mapping[str, int]):
    """Immutable token distribution; places without tokens are omitted."""

    __slots__ = ("_tokens",)

    def __init__(self, tokens: Mapping[str, int] | Iterable[tuple[str, int]] = ()) -> None:
        items = tokens.items() if isinstance(tokens, Mapping) else tokens
        clean: dict[str, int] = {}
        for place, count in items:
            if isinstance(count, bool) or not isinstance(count, int):
                raise TypeError(f"token count for {place!r} must be an int, got {count!r}")
            if count < 0:
                raise ValueError(f"negative token count {count} on {place!r}")
            if count:
                clean[place] = count
        self._tokens = dict(sorted(clean.items()))

    def __getitem__(self, place: str) -> int:
        return self._tokens.get(place, 0)

    def __contains__(self, place: object) -> bool:
        return place in self._tokens

    def __iter__(self) -> Iterator[str]:
        return iter(self._tokens)

    def __len__(self) -> int:
        return len(self._tokens)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Marking):
            return self._tokens == other._tokens
        if isinstance(other, Mapping):
            return self._tokens == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._tokens.items()))

    def __repr__(self) -> str:
        return f"Marking({self._tokens!r})"

    def total(self) -> int:
        return sum(self._tokens.values())


def _check_marking(net: PetriNet, marking: Marking) -> None:
    for place in marking:
        if not net.is_place(place):
            raise UnknownNode(f"marking refers to unknown place {place!r}")


def enabled(net: PetriNet, marking: Marking) -> frozenset[str]:
    _check_marking(net, marking)
    return frozenset(
        t for t in net.transitions if all(marking[p] >= 1 for p in net.preset(t))
    )


def fire(net: PetriNet, marking: Marking, transition: str) -> Marking:
    """Consume one token per input place and produce one per output place."""
    _check_marking(net, marking)
    if not net.is_transition(transition):
        raise UnknownNode(f"no transition {transition!r}")
    if any(marking[p] < 1 for p in net.preset(transition)):
        raise NotEnabled(f"transition {transition!r} is not enabled in {marking!r}")
    tokens = dict(marking)
    for p in net.preset(transition):
        tokens[p] -= 1
    for p in net.postset(transition):
        tokens[p] = tokens.get(p, 0) + 1
    return Marking(tokens)


@dataclass(frozen=True)
class WorkflowDiagnostics:
    is_workflow_net: bool
    source: str | None
    sink: str | None
    violations: tuple[str, ...]


def _reach(start: str, step) -> set[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for nxt in step(node):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def validate_workflow(net: PetriNet) -> WorkflowDiagnostics:
    """Check for a unique source place, a unique sink place, and that every
    node lies on a directed path from the source to the sink."""
    violations = []
    sources = [p for p in net.places if not net.preset(p)]
    sinks = [p for p in net.places if not net.postset(p)]
    for kind, found in (("source", sources), ("sink", sinks)):
        if not found:
            violations.append(f"no {kind} place")
        elif len(found) > 1:
            violations.append(f"multiple {kind} candidates: {', '.join(found)}")
    source = sources[0] if len(sources) == 1 else None
    sink = sinks[0] if len(sinks) == 1 else None
    if source is not None and sink is not None:
        forward = _reach(source, net.postset)
        backward = _reach(sink, net.preset)
        nodes = list(net.places) + list(net.transitions)
        for node in nodes:
            if node not in forward:
                violations.append(f"{node} is not reachable from source {source}")
            elif node not in backward:
                violations.append(f"{node} cannot reach sink {sink}")
    return WorkflowDiagnostics(not violations, source, sink, tuple(violations))


def initial_marking(net: PetriNet) -> Marking:
    diagnostics = validate_workflow(net)
    if not diagnostics.is_workflow_net:
        raise NotWorkflowNet("; ".join(diagnostics.violations))
    return Marking({diagnostics.source: 1})


@dataclass(frozen=True)
class SoundnessReport:
    status: Literal["sound", "unsound", "inconclusive"]
    # None when the exploration was cut off before the property could be decided
    option_to_complete: bool | None
    proper_completion: bool | None
    dead_transitions: tuple[str, ...]
    explored: int
    bound: int
    findings: tuple[str, ...] = field(default=())

    @property
    def sound(self) -> bool:
        return self.status == "sound"


def _describe(places: list[str], vector: tuple[int, ...]) -> str:
    return "{" + ", ".join(f"{p}:{n}" for p, n in zip(places, vector) if n) + "}"


def check_soundness(net: PetriNet, bound: int = 10_000, max_findings: int = 5) -> SoundnessReport:
    """Classical soundness from the marking with one token on the source.

    At most ``bound`` distinct markings are explored; a larger state space
    yields status ``"inconclusive"``. Raises NotWorkflowNet when the net
    fails :func:`validate_workflow`.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    diagnostics = validate_workflow(net)
    if not diagnostics.is_workflow_net:
        raise NotWorkflowNet("; ".join(diagnostics.violations))
    places = list(net.places)
    position = {p: i for i, p in enumerate(places)}
    tids = list(net.transitions)
    pre = [[position[p] for p in net.preset(t)] for t in tids]
    post = [[position[p] for p in net.postset(t)] for t in tids]
    start = [0] * len(places)
    start[position[diagnostics.source]] = 1
    final = [0] * len(places)
    final[position[diagnostics.sink]] = 1
    final = tuple(final)
    sink = position[diagnostics.sink]

    markings, edges, complete = kernels.explore_markings(pre, post, start, bound)

    findings = []
    improper = [m for m in markings if m[sink] >= 1 and m != final]
    for m in improper[:max_findings]:
        findings.append(f"improper completion: {_describe(places, m)} marks the sink plus other places")
    if not complete:
        findings.insert(0, f"state space exceeds {bound} markings; exploration stopped")
        return SoundnessReport(
            "inconclusive", None, False if improper else None, (), len(markings), bound, tuple(findings)
        )

    predecessors: list[list[int]] = [[] for _ in markings]
    for src, _, dst in edges:
        predecessors[dst].append(src)
    can_finish: set[int] = set()
    if final in markings:
        can_finish = _reach(markings.index(final), predecessors.__getitem__)
    stuck = [i for i in range(len(markings)) if i not in can_finish]
    for i in stuck[:max_findings]:
        findings.append(f"no option to complete from {_describe(places, markings[i])}")
    fired = {t for _, t, _ in edges}
    dead = tuple(tids[t] for t in range(len(tids)) if t not in fired)
    for t in dead:
        findings.append(f"dead transition {t} ({net.label(t)})")
    option = not stuck
    proper = not improper
    status = "sound" if option and proper and not dead else "unsound"
    return SoundnessReport(status, option, proper, dead, len(markings), bound, tuple(findings))
