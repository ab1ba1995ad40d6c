"""Net documents (``*.net.json``), reference libraries and DOT export."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal

from procmatch.errors import (
    PetriNetError,
    ProcMatchError,
    SchemaVersionUnsupported,
    SchemaViolation,
)
from procmatch.matcher import TaskAlignment
from procmatch.petri import Marking, PetriNet, is_silent_label

SCHEMA_VERSION = "1"
NET_SUFFIX = ".net.json"


def _pointer_token(key: str) -> str:
    return key.replace("~", "~0").replace("/", "~1")


def net_to_document(net: PetriNet, marking: Marking | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "name": net.name,
        "places": list(net.places),
        "transitions": [{"id": t, "label": label} for t, label in net.transitions.items()],
        "arcs": [{"from": s, "to": d} for s, d in net.arcs],
    }
    if marking is not None:
        doc["initial_marking"] = {p: marking[p] for p in net.places if marking[p]}
    return doc


def dumps_net(net: PetriNet, marking: Marking | None = None) -> str:
    return json.dumps(net_to_document(net, marking), indent=2, ensure_ascii=False) + "\n"


def _require(doc: dict, key: str, kind: type, pointer: str) -> Any:
    if key not in doc:
        raise SchemaViolation(f"missing required field {key!r}", pointer)
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise SchemaViolation(f"expected {kind.__name__}, got {type(value).__name__}", f"{pointer}/{key}")
    return value


def document_to_net(doc: Any, default_name: str = "") -> tuple[PetriNet, Marking | None]:
    """Validate a parsed document and build the net it describes."""
    if not isinstance(doc, dict):
        raise SchemaViolation("document must be a JSON object", "")
    version = _require(doc, "schema_version", str, "")
    if version != SCHEMA_VERSION:
        raise SchemaVersionUnsupported(
            f"schema_version {version!r} is not supported (expected {SCHEMA_VERSION!r})"
        )
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SchemaViolation("expected str", "/name")
    net = PetriNet(name or default_name)

    for i, place in enumerate(_require(doc, "places", list, "")):
        pointer = f"/places/{i}"
        if not isinstance(place, str) or not place:
            raise SchemaViolation("place id must be a nonempty string", pointer)
        try:
            net.add_place(place)
        except PetriNetError as exc:
            raise SchemaViolation(str(exc), pointer) from None

    for i, entry in enumerate(_require(doc, "transitions", list, "")):
        pointer = f"/transitions/{i}"
        if not isinstance(entry, dict):
            raise SchemaViolation("transition must be an object", pointer)
        tid = _require(entry, "id", str, pointer)
        label = _require(entry, "label", str, pointer)
        if not tid:
            raise SchemaViolation("transition id must be nonempty", f"{pointer}/id")
        if not label.strip():
            raise SchemaViolation("transition label must be nonempty", f"{pointer}/label")
        try:
            net.add_transition(tid, label)
        except PetriNetError as exc:
            raise SchemaViolation(str(exc), f"{pointer}/id") from None

    for i, entry in enumerate(_require(doc, "arcs", list, "")):
        pointer = f"/arcs/{i}"
        if not isinstance(entry, dict):
            raise SchemaViolation("arc must be an object", pointer)
        source = _require(entry, "from", str, pointer)
        target = _require(entry, "to", str, pointer)
        for key, node in (("from", source), ("to", target)):
            if not (net.is_place(node) or net.is_transition(node)):
                raise SchemaViolation(f"unknown node id {node!r}", f"{pointer}/{key}")
        try:
            net.add_arc(source, target)
        except PetriNetError as exc:
            raise SchemaViolation(str(exc), pointer) from None

    marking = None
    if "initial_marking" in doc:
        raw = doc["initial_marking"]
        if not isinstance(raw, dict):
            raise SchemaViolation("expected object", "/initial_marking")
        for place, count in raw.items():
            pointer = f"/initial_marking/{_pointer_token(place)}"
            if not net.is_place(place):
                raise SchemaViolation(f"unknown place {place!r}", pointer)
            if isinstance(count, bool) or not isinstance(count, int) or count < 0:
                raise SchemaViolation("token count must be a nonnegative integer", pointer)
        marking = Marking(raw)
    return net, marking


def _stem(path: Path) -> str:
    name = path.name
    return name[: -len(NET_SUFFIX)] if name.endswith(NET_SUFFIX) else path.stem


def save_net(net: PetriNet, path: str | os.PathLike[str], marking: Marking | None = None) -> None:
    """Write ``net`` as a UTF-8 document with LF line endings and fixed key order."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_net(net, marking))


def loads_net(text: str, default_name: str = "") -> tuple[PetriNet, Marking | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"invalid JSON: {exc}", "") from None
    return document_to_net(doc, default_name)


def load_net(path: str | os.PathLike[str]) -> tuple[PetriNet, Marking | None]:
    """Read a net document; a missing or empty name defaults to the file stem."""
    path = Path(path)
    return loads_net(path.read_text(encoding="utf-8"), default_name=_stem(path))


@dataclass(frozen=True)
class LibraryError:
    path: Path
    error: ProcMatchError

    def __str__(self) -> str:
        return f"{self.path.name}: {self.error}"


def load_reference_library(
    directory: str | os.PathLike[str],
) -> tuple[list[PetriNet], list[LibraryError]]:
    """Load every ``*.net.json`` in ``directory`` in filename order.

    Files that fail to load are skipped and reported in the second list.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise NotADirectoryError(f"not a directory: {directory}")
    nets: list[PetriNet] = []
    errors: list[LibraryError] = []
    for path in sorted(directory.glob("*" + NET_SUFFIX), key=lambda p: p.name):
        try:
            net, _ = load_net(path)
        except ProcMatchError as exc:
            errors.append(LibraryError(path, exc))
        except (OSError, UnicodeDecodeError) as exc:
            errors.append(LibraryError(path, SchemaViolation(f"unreadable: {exc}", "")))
        else:
            nets.append(net)
    return nets, errors


def _dot_string(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def export_dot(
    net: PetriNet,
    alignment: TaskAlignment | None = None,
    side: Literal["business", "reference"] = "business",
    marking: Marking | None = None,
) -> str:
    """Render ``net`` as Graphviz DOT text.

    Places are circles, transitions boxes, silent transitions filled boxes.
    With an alignment, the transitions it matches on ``side`` get an
    ``xlabel`` carrying the pair score.
    """
    scores: dict[str, float] = {}
    if alignment is not None:
        for pair in alignment.pairs:
            scores[pair.business if side == "business" else pair.reference] = pair.score
    lines = [f"digraph {_dot_string(net.name or 'net')} {{", "  rankdir=LR;"]
    for p in net.places:
        tokens = marking[p] if marking is not None else 0
        label = "●" * tokens if 0 < tokens <= 3 else (str(tokens) if tokens else "")
        lines.append(f"  {_dot_string(p)} [shape=circle, label={_dot_string(label)}, xlabel={_dot_string(p)}];")
    for t, label in net.transitions.items():
        attrs = [f"label={_dot_string(label)}"]
        if is_silent_label(label):
            attrs.append('shape=box, style=filled, fillcolor="gray25", fontcolor="white"')
        else:
            attrs.append("shape=box")
        if t in scores:
            attrs.append(f'color="darkgreen", xlabel={_dot_string(f"score={scores[t]:.3f}")}')
        lines.append(f"  {_dot_string(t)} [{', '.join(attrs)}];")
    for s, d in net.arcs:
        lines.append(f"  {_dot_string(s)} -> {_dot_string(d)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_to_json(payload: Any) -> str:
    """Serialize a report payload deterministically."""
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
