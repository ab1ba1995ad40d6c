"""Word-vector tables, label vectors and cosine similarity.

Tables are read from the plain-text format used by the public GloVe
downloads: one ``word f1 ... fd`` entry per line, no header.
"""

from __future__ import annotations

import logging
import math
import os
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from procmatch.errors import DimensionMismatch, EmptyFile, ParseError

log = logging.getLogger(__name__)

_LABEL_TOKEN_RE = re.compile(r"[^\W_]+(?:'[^\W_]+)*")


@dataclass(frozen=True, eq=False)
class EmbeddingTable:
    dimension: int
    vectors: Mapping[str, np.ndarray]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        frozen = {}
        for word, vector in self.vectors.items():
            if not word or word != word.lower() or any(ch.isspace() for ch in word):
                raise ValueError(f"invalid vocabulary key {word!r}")
            array = np.array(vector, dtype=np.float64)
            if array.shape != (self.dimension,):
                raise DimensionMismatch(
                    f"vector for {word!r} has shape {array.shape}, expected ({self.dimension},)"
                )
            array.setflags(write=False)
            frozen[word] = array
        object.__setattr__(self, "vectors", MappingProxyType(frozen))

    @classmethod
    def from_mapping(cls, vectors: Mapping[str, Sequence[float]]) -> EmbeddingTable:
        if not vectors:
            raise EmptyFile("no vectors given")
        dimension = len(next(iter(vectors.values())))
        return cls(dimension, {w.lower(): v for w, v in vectors.items()})

    def __contains__(self, word: object) -> bool:
        return word in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True, eq=False)
class LabelVector:
    label: str
    vector: np.ndarray
    # share of the label's tokens found in the table
    coverage: float


def _looks_like_header(fields: list[str]) -> bool:
    return len(fields) == 2 and all(f.isdigit() for f in fields)


def parse_embeddings(lines: Iterable[str], source: str = "<input>") -> EmbeddingTable:
    """Parse embedding lines; see :func:`load_embeddings` for the rules."""
    vectors: dict[str, np.ndarray] = {}
    dimension = None
    header_hint = ""
    for lineno, line in enumerate(lines, start=1):
        fields = line.split()
        if not fields:
            continue
        word, values = fields[0].lower(), fields[1:]
        if dimension is None:
            if not values:
                raise DimensionMismatch(f"{source}:{lineno}: entry has no vector components", lineno)
            dimension = len(values)
            if _looks_like_header(fields):
                header_hint = (
                    f" (line {lineno} looks like a 'count dimension' header; "
                    "headers are not supported, delete that line)"
                )
        elif len(values) != dimension:
            raise DimensionMismatch(
                f"{source}:{lineno}: expected {dimension} components, found {len(values)}{header_hint}",
                lineno,
            )
        try:
            vector = np.array([float(v) for v in values], dtype=np.float64)
        except ValueError as exc:
            raise ParseError(f"{source}:{lineno}: {exc}", lineno) from None
        if not np.all(np.isfinite(vector)):
            raise ParseError(f"{source}:{lineno}: non-finite component", lineno)
        if word in vectors:
            log.warning("%s:%d: duplicate entry for %r replaces the earlier vector", source, lineno, word)
        vectors[word] = vector
    if dimension is None:
        raise EmptyFile(f"{source}: no embedding entries")
    return EmbeddingTable(dimension, vectors)


def load_embeddings(path: str | os.PathLike[str]) -> EmbeddingTable:
    """Read a ``word f1 ... fd`` text file (UTF-8).

    The dimension comes from the first entry; words are stored lowercased and
    a repeated word replaces its earlier vector. Raises EmptyFile,
    DimensionMismatch (with the line number) or ParseError.
    """
    with open(path, encoding="utf-8") as fh:
        return parse_embeddings(fh, source=os.fspath(path))


def label_tokens(label: str) -> list[str]:
    return _LABEL_TOKEN_RE.findall(label.lower())


def embed_label(label: str, table: EmbeddingTable) -> LabelVector:
    """Mean vector of the label's in-vocabulary tokens.

    Out-of-vocabulary tokens are skipped; with none found the vector is all
    zeros and coverage is 0.
    """
    tokens = label_tokens(label)
    found = [table.vectors[t] for t in tokens if t in table.vectors]
    if not found:
        return LabelVector(label, np.zeros(table.dimension), 0.0)
    vector = np.sum(found, axis=0) / len(found)
    return LabelVector(label, vector, len(found) / len(tokens))


def _components(v: LabelVector | Sequence[float] | np.ndarray) -> np.ndarray:
    raw = v.vector if isinstance(v, LabelVector) else v
    return np.asarray(raw, dtype=np.float64).ravel()


def dot(v: LabelVector | Sequence[float], w: LabelVector | Sequence[float]) -> float:
    a, b = _components(v), _components(w)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot combine vectors of length {a.size} and {b.size}")
    return math.fsum(a * b)


def _rescaled(x: np.ndarray) -> np.ndarray:
    # power-of-two scaling is exact and keeps squared norms clear of overflow
    peak = float(np.max(np.abs(x))) if x.size else 0.0
    if peak == 0.0:
        return x
    return np.ldexp(x, -math.frexp(peak)[1])


def cosine(v: LabelVector | Sequence[float], w: LabelVector | Sequence[float]) -> float:
    """(v . w) / (|v| |w|), or 0 when either vector is zero."""
    a, b = _components(v), _components(w)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot combine vectors of length {a.size} and {b.size}")
    a, b = _rescaled(a), _rescaled(b)
    a2, b2 = math.fsum(a * a), math.fsum(b * b)
    if a2 == 0.0 or b2 == 0.0:
        return 0.0
    # sqrt of the product keeps cosine(v, v) exactly 1.0
    return max(-1.0, min(1.0, math.fsum(a * b) / math.sqrt(a2 * b2)))
