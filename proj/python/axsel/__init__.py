"""Axiom selection for first-order knowledge bases."""

from ._axsel import (
    ConfigError,
    EmbeddingStore,
    Engine,
    Error,
    Goal,
    KnowledgeBase,
    KTooLarge,
    cos_sim,
    normalize,
)

__all__ = [
    "ConfigError",
    "EmbeddingStore",
    "Engine",
    "Error",
    "Goal",
    "KnowledgeBase",
    "KTooLarge",
    "cos_sim",
    "normalize",
]
