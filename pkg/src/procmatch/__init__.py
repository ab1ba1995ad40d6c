"""Process descriptions to workflow Petri nets, matched against reference models."""

__version__ = "0.1.0"

from procmatch.embeddings import EmbeddingTable, LabelVector, cosine, embed_label, load_embeddings
from procmatch.matcher import (
    MatchReport,
    TaskAlignment,
    TaskPair,
    align_tasks,
    embedding_similarity,
    match,
    rank_references,
    structure_similarity,
)
from procmatch.model_io import export_dot, load_net, load_reference_library, save_net
from procmatch.petri import (
    Marking,
    PetriNet,
    SoundnessReport,
    WorkflowDiagnostics,
    check_soundness,
    enabled,
    fire,
    validate_workflow,
)
from procmatch.translator import TranslationResult, translate

__all__ = [
    "EmbeddingTable",
    "LabelVector",
    "Marking",
    "MatchReport",
    "PetriNet",
    "SoundnessReport",
    "TaskAlignment",
    "TaskPair",
    "TranslationResult",
    "WorkflowDiagnostics",
    "align_tasks",
    "check_soundness",
    "cosine",
    "embed_label",
    "embedding_similarity",
    "enabled",
    "export_dot",
    "fire",
    "load_embeddings",
    "load_net",
    "load_reference_library",
    "match",
    "rank_references",
    "save_net",
    "structure_similarity",
    "translate",
    "validate_workflow",
]
