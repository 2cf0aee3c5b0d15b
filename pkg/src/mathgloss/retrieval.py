"""Rank corpus documents against a math query: expression-tree overlap plus
cosine between the query context and each document's leading paragraph."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Corpus, tokenize
from .errors import EmptyCorpus
from .mathtree import MathTree, parse_expression, tree_similarity
from .textsim import EmbeddingStore, avg_vector, cosine


@dataclass(frozen=True)
class Query:
    source: str
    expression: MathTree
    context: str
    context_tokens: tuple[str, ...]

    @classmethod
    def parse(cls, expression_source: str, context: str) -> "Query":
        return cls(
            source=expression_source,
            expression=parse_expression(expression_source),
            context=context,
            context_tokens=tuple(tokenize(context)),
        )


@dataclass(frozen=True)
class Topic:
    title: str
    score: float


def rank_topics(query: Query, corpus: Corpus, store: EmbeddingStore, k: int = 3) -> list[Topic]:
    """Top-k documents by expression similarity plus context cosine.

    The expression term is the best match over a document's math items (0 when
    it has none); ties break on ascending title.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if len(corpus) == 0:
        raise EmptyCorpus("cannot rank topics over an empty corpus")
    query_vec = avg_vector(query.context_tokens, store)
    scored = []
    for doc in corpus:
        tree_term = max(
            (tree_similarity(query.expression, item.tree) for item in doc.math_items),
            default=0.0,
        )
        lead_vec = avg_vector(tokenize(doc.leading_paragraph), store)
        if query_vec is None or lead_vec is None:
            cos_term = 0.0
        else:
            cos_term = cosine(query_vec, lead_vec)
        scored.append(Topic(title=doc.title, score=tree_term + cos_term))
    scored.sort(key=lambda t: (-t.score, t.title))
    return scored[:k]
