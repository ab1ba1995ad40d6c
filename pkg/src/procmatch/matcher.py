"""Align, score and rank a business net against reference nets.

Silent transitions (labels starting with ``τ:``) take no part in matching.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from procmatch import kernels
from procmatch.embeddings import EmbeddingTable, embed_label
from procmatch.petri import PetriNet

REPORT_SCHEMA_VERSION = "1"
DEFAULT_THRESHOLD = 0.7
DEFAULT_WEIGHT = 0.5

# scores are rounded so exact ties stay ties across kernel backends
_SCORE_DIGITS = 12


class TaskPair(NamedTuple):
    business: str
    reference: str
    score: float


@dataclass(frozen=True)
class TaskAlignment:
    pairs: tuple[TaskPair, ...]
    unmatched_business: tuple[str, ...]
    unmatched_reference: tuple[str, ...]
    threshold: float

    def mapping(self) -> dict[str, str]:
        """Business transition id -> reference transition id."""
        return {p.business: p.reference for p in self.pairs}


def _check_unit(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")


def _label_matrix(net: PetriNet, ids: list[str], table: EmbeddingTable) -> np.ndarray:
    cache: dict[str, np.ndarray] = {}
    rows = []
    for t in ids:
        label = net.label(t)
        if label not in cache:
            cache[label] = embed_label(label, table).vector
        rows.append(cache[label])
    return np.array(rows, dtype=np.float64).reshape(len(ids), table.dimension)


def align_tasks(
    business: PetriNet,
    reference: PetriNet,
    table: EmbeddingTable,
    threshold: float = DEFAULT_THRESHOLD,
) -> TaskAlignment:
    """Greedy one-to-one pairing of visible transitions by label cosine.

    Candidate pairs are taken in descending score order, ties broken by
    (business id, reference id); pairs scoring below ``threshold`` are never
    taken.
    """
    _check_unit("threshold", threshold)
    b_ids = business.visible_transitions()
    r_ids = reference.visible_transitions()
    pairs: list[TaskPair] = []
    if b_ids and r_ids:
        scores = kernels.cosine_matrix(
            _label_matrix(business, b_ids, table), _label_matrix(reference, r_ids, table)
        )
        candidates = []
        for i, b in enumerate(b_ids):
            for j, r in enumerate(r_ids):
                score = round(float(scores[i, j]), _SCORE_DIGITS)
                if score >= threshold:
                    candidates.append((-score, b, r))
        candidates.sort()
        used_b: set[str] = set()
        used_r: set[str] = set()
        for neg_score, b, r in candidates:
            if b in used_b or r in used_r:
                continue
            used_b.add(b)
            used_r.add(r)
            pairs.append(TaskPair(b, r, -neg_score))
    matched_b = {p.business for p in pairs}
    matched_r = {p.reference for p in pairs}
    return TaskAlignment(
        tuple(pairs),
        tuple(t for t in b_ids if t not in matched_b),
        tuple(t for t in r_ids if t not in matched_r),
        threshold,
    )


def _task_count(business: PetriNet, reference: PetriNet) -> int:
    return max(len(business.visible_transitions()), len(reference.visible_transitions()))


def embedding_similarity(alignment: TaskAlignment, business: PetriNet, reference: PetriNet) -> float:
    """Sum of pair scores over the larger visible-transition count."""
    n = _task_count(business, reference)
    if n == 0:
        return 1.0
    return min(1.0, math.fsum(p.score for p in alignment.pairs) / n)


def causal_pairs(net: PetriNet) -> set[tuple[str, str]]:
    """Transition pairs (t1, t2) with some place in t1's postset and t2's preset."""
    return {
        (t1, t2)
        for place in net.places
        for t1 in net.preset(place)
        for t2 in net.postset(place)
    }


def node_ratio(alignment: TaskAlignment, business: PetriNet, reference: PetriNet) -> float:
    n = _task_count(business, reference)
    return 1.0 if n == 0 else len(alignment.pairs) / n


def edge_ratio(alignment: TaskAlignment, business: PetriNet, reference: PetriNet) -> float:
    """Share of business causal pairs between matched tasks that the
    reference preserves; 1.0 when no such pair exists."""
    mapping = alignment.mapping()
    relevant = [(a, b) for a, b in causal_pairs(business) if a in mapping and b in mapping]
    if not relevant:
        return 1.0
    ref_pairs = causal_pairs(reference)
    kept = sum((mapping[a], mapping[b]) in ref_pairs for a, b in relevant)
    return kept / len(relevant)


def structure_similarity(business: PetriNet, reference: PetriNet, alignment: TaskAlignment) -> float:
    return 0.5 * node_ratio(alignment, business, reference) + 0.5 * edge_ratio(
        alignment, business, reference
    )


@dataclass(frozen=True)
class MatchReport:
    business_name: str
    reference_name: str
    embedding_similarity: float
    structure_similarity: float
    combined: float
    weight: float
    node_ratio: float
    edge_ratio: float
    alignment: TaskAlignment
    business_labels: dict[str, str] = field(default_factory=dict, repr=False)
    reference_labels: dict[str, str] = field(default_factory=dict, repr=False)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready form with a fixed key order."""
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "business": self.business_name,
            "reference": self.reference_name,
            "embedding_similarity": self.embedding_similarity,
            "structure_similarity": self.structure_similarity,
            "combined": self.combined,
            "weight": self.weight,
            "threshold": self.alignment.threshold,
            "node_ratio": self.node_ratio,
            "edge_ratio": self.edge_ratio,
            "pairs": [
                {
                    "business": p.business,
                    "business_label": self.business_labels.get(p.business, ""),
                    "reference": p.reference,
                    "reference_label": self.reference_labels.get(p.reference, ""),
                    "score": p.score,
                }
                for p in self.alignment.pairs
            ],
            "unmatched": {
                "business": list(self.alignment.unmatched_business),
                "reference": list(self.alignment.unmatched_reference),
            },
        }


def match(
    business: PetriNet,
    reference: PetriNet,
    table: EmbeddingTable,
    weight: float = DEFAULT_WEIGHT,
    threshold: float = DEFAULT_THRESHOLD,
) -> MatchReport:
    """Score ``reference`` against ``business``; ``combined`` is
    ``weight * embedding + (1 - weight) * structure``."""
    _check_unit("weight", weight)
    alignment = align_tasks(business, reference, table, threshold)
    emb = embedding_similarity(alignment, business, reference)
    nodes = node_ratio(alignment, business, reference)
    edges = edge_ratio(alignment, business, reference)
    struct = 0.5 * nodes + 0.5 * edges
    return MatchReport(
        business_name=business.name,
        reference_name=reference.name,
        embedding_similarity=emb,
        structure_similarity=struct,
        combined=weight * emb + (1.0 - weight) * struct,
        weight=weight,
        node_ratio=nodes,
        edge_ratio=edges,
        alignment=alignment,
        business_labels=dict(business.transitions),
        reference_labels=dict(reference.transitions),
    )


def rank_key(report: MatchReport) -> tuple[float, float, str]:
    return (-report.combined, -report.embedding_similarity, report.reference_name)


def rank_references(
    business: PetriNet,
    references: Sequence[PetriNet],
    table: EmbeddingTable,
    weight: float = DEFAULT_WEIGHT,
    threshold: float = DEFAULT_THRESHOLD,
    workers: int | None = None,
) -> list[MatchReport]:
    """Match every reference and sort best first (combined, then embedding
    similarity, both descending, then reference name). ``workers`` > 1 scores
    references on a thread pool; the result is identical either way."""
    if not references:
        raise ValueError("at least one reference model is required")
    _check_unit("weight", weight)
    _check_unit("threshold", threshold)

    def score(ref: PetriNet) -> MatchReport:
        return match(business, ref, table, weight, threshold)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(score, references))
    else:
        reports = [score(ref) for ref in references]
    return sorted(reports, key=rank_key)
