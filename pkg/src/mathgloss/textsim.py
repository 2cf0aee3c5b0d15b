"""Word vectors and the cosine machinery used by every text scorer.

Vectors come from a plain text file, one token per line followed by its
components.  A companion stopword file lists one token per line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DimensionMismatch, EmptyVectorFile


@dataclass
class EmbeddingStore:
    dimension: int
    vectors: dict[str, np.ndarray]
    stopwords: frozenset[str]

    def __contains__(self, token: str) -> bool:
        return token in self.vectors


def load_stopwords(path: str | Path) -> frozenset[str]:
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip().lower()
            if word:
                words.add(word)
    return frozenset(words)


def load_vectors(path: str | Path, stopword_path: str | Path) -> EmbeddingStore:
    """Read the vector and stopword files; every row must share one dimension."""
    vectors: dict[str, np.ndarray] = {}
    dimension: int | None = None
    with open(path, encoding="utf-8") as fh:
        for line_number, line in enumerate(fh, 1):
            parts = line.split()
            if not parts:
                continue
            token, raw_values = parts[0], parts[1:]
            try:
                values = np.array([float(v) for v in raw_values], dtype=np.float64)
            except ValueError as exc:
                raise DimensionMismatch(f"line {line_number}: non-numeric component") from exc
            if dimension is None:
                if len(values) == 0:
                    raise DimensionMismatch(f"line {line_number}: row has no components")
                dimension = len(values)
            elif len(values) != dimension:
                raise DimensionMismatch(
                    f"line {line_number}: expected {dimension} components, found {len(values)}"
                )
            vectors[token] = values
    if dimension is None:
        raise EmptyVectorFile(f"no vector rows in {path}")
    return EmbeddingStore(dimension=dimension, vectors=vectors,
                          stopwords=load_stopwords(stopword_path))


def avg_vector(tokens, store: EmbeddingStore) -> np.ndarray | None:
    """Mean vector over non-stopword in-vocabulary tokens; None when nothing matches.

    Contributing tokens are summed in sorted order so the result does not
    depend on the ordering of the input list.
    """
    contributing = sorted(
        t for t in tokens if t not in store.stopwords and t in store.vectors
    )
    if not contributing:
        return None
    total = np.zeros(store.dimension, dtype=np.float64)
    for token in contributing:
        total += store.vectors[token]
    return total / len(contributing)


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine similarity; 0.0 when either vector has zero norm.

    The denominator is sqrt(<a,a>*<b,b>), which keeps cosine(a, 2a) exactly 1.
    """
    if a.shape != b.shape:
        raise DimensionMismatch(f"operands of dimension {a.shape[0]} and {b.shape[0]}")
    numerator = float(np.dot(a, b))
    denominator = math.sqrt(float(np.dot(a, a)) * float(np.dot(b, b)))
    if denominator == 0.0:
        return 0.0
    return numerator / denominator
