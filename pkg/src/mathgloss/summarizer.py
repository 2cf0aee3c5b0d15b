"""Concept-coverage sentence selection under a word budget and sentence cap.

Concepts are bigrams of consecutive non-stopword tokens.  Selecting a set of
sentences forces exactly the concepts they contain, so the 0-1 program

    maximize   sum_i (weight_i + relevance_i) * c_i
    subject to sum_j length_j * s_j <= budget,   sum_j s_j <= cap,
               s_j * occ[j][i] <= c_i,           sum_j s_j * occ[j][i] >= c_i

reduces to searching over sentence subsets.  The solver is exact: plain
depth-first enumeration with an optimistic-coverage bound when the pool has at
most EXHAUSTIVE_LIMIT sentences, best-first branch and bound above that, with
a node budget that raises InstanceTooLarge instead of returning a guess.

All objective values are evaluated with math.fsum over the covered concepts in
index order.  fsum is correctly rounded, so equal concept sets give bit-equal
objectives no matter how the search reached them, and the optimistic bound
(a superset of the positive coefficients) can never round below an achievable
value.
"""

from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass
from pathlib import Path

from .corpus import Document
from .errors import EmptyPool, InstanceTooLarge
from .retrieval import Query
from .selector import TimestampedDoc
from .textsim import EmbeddingStore, avg_vector, cosine

EXHAUSTIVE_LIMIT = 20
DEFAULT_MAX_NODES = 5_000_000


@dataclass(frozen=True)
class Concept:
    bigram: tuple[str, str]
    weight: int
    relevance: float


@dataclass(frozen=True)
class PoolSentence:
    document: str
    position: int
    text: str
    tokens: tuple[str, ...]

    @property
    def word_length(self) -> int:
        return len(self.tokens)


@dataclass
class IlpInstance:
    sentences: list[str]
    lengths: list[int]
    concepts: list[Concept]
    occurrence: list[list[int]]  # occurrence[sentence][concept] in {0, 1}
    budget: int
    sentence_cap: int


@dataclass(frozen=True)
class Selection:
    sentences: tuple[int, ...]
    concepts: tuple[int, ...]
    objective: float


@dataclass(frozen=True)
class DescribedSentence:
    text: str
    document: str
    position: int
    timestamp: float | None


@dataclass(frozen=True)
class Description:
    sentences: tuple[DescribedSentence, ...]
    word_count: int

    @property
    def texts(self) -> list[str]:
        return [s.text for s in self.sentences]


def sentence_bigrams(tokens, stopwords) -> list[tuple[str, str]]:
    """Consecutive pairs of the sentence's non-stopword tokens."""
    content = [t for t in tokens if t not in stopwords]
    return list(zip(content, content[1:]))


def extract_concepts(docs: list[Document], query: Query,
                     store: EmbeddingStore) -> tuple[list[PoolSentence], list[Concept]]:
    """Build the sentence pool and its weighted bigram concepts.

    Pool order follows the given document order, then sentence position;
    zero-token sentences are not admitted.  A bigram's weight counts every
    occurrence across the pool; its relevance is the cosine between the bigram
    token average and the query context average (0 when either is absent).
    """
    pool: list[PoolSentence] = []
    for doc in docs:
        for sentence in doc.sentences:
            if sentence.word_length >= 1:
                pool.append(PoolSentence(document=doc.title, position=sentence.position,
                                         text=sentence.text, tokens=sentence.tokens))
    weights: dict[tuple[str, str], int] = {}
    for ps in pool:
        for bigram in sentence_bigrams(ps.tokens, store.stopwords):
            weights[bigram] = weights.get(bigram, 0) + 1
    if not weights:
        raise EmptyPool("no sentence yielded a bigram")
    query_vec = avg_vector(query.context_tokens, store)
    concepts = []
    for bigram, weight in weights.items():
        bigram_vec = avg_vector(bigram, store)
        if query_vec is None or bigram_vec is None:
            relevance = 0.0
        else:
            relevance = cosine(bigram_vec, query_vec)
        concepts.append(Concept(bigram=bigram, weight=weight, relevance=relevance))
    return pool, concepts


def build_instance(pool: list[PoolSentence], concepts: list[Concept],
                   budget: int, sentence_cap: int, stopwords) -> IlpInstance:
    index = {c.bigram: i for i, c in enumerate(concepts)}
    occurrence = []
    for ps in pool:
        row = [0] * len(concepts)
        for bigram in sentence_bigrams(ps.tokens, stopwords):
            if bigram in index:
                row[index[bigram]] = 1
        occurrence.append(row)
    return IlpInstance(
        sentences=[ps.text for ps in pool],
        lengths=[ps.word_length for ps in pool],
        concepts=list(concepts),
        occurrence=occurrence,
        budget=budget,
        sentence_cap=sentence_cap,
    )


def _validate_instance(instance: IlpInstance) -> None:
    n, m = len(instance.lengths), len(instance.concepts)
    if len(instance.sentences) != n or len(instance.occurrence) != n:
        raise ValueError("sentence fields disagree on length")
    if any(len(row) != m for row in instance.occurrence):
        raise ValueError("occurrence rows disagree with the concept count")
    if any(v not in (0, 1) for row in instance.occurrence for v in row):
        raise ValueError("occurrence entries must be 0 or 1")
    if any(l < 0 for l in instance.lengths):
        raise ValueError("negative sentence length")
    if instance.budget < 0 or instance.sentence_cap < 0:
        raise ValueError("budget and sentence_cap must be non-negative")


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _objective(coefficients: list[float], mask: int) -> float:
    return math.fsum(coefficients[i] for i in _iter_bits(mask))


def _bound(coefficients: list[float], covered: int, reachable: int) -> float:
    """fsum over covered coefficients plus every positive still-reachable one."""
    terms = [coefficients[i] for i in _iter_bits(covered)]
    terms.extend(coefficients[i] for i in _iter_bits(reachable & ~covered)
                 if coefficients[i] > 0.0)
    return math.fsum(terms)


class _Search:
    def __init__(self, instance: IlpInstance, max_nodes: int):
        self.lengths = instance.lengths
        self.budget = instance.budget
        self.cap = instance.sentence_cap
        self.coefficients = [c.weight + c.relevance for c in instance.concepts]
        self.masks = []
        for row in instance.occurrence:
            mask = 0
            for i, v in enumerate(row):
                if v:
                    mask |= 1 << i
            self.masks.append(mask)
        self.n = len(self.lengths)
        self.suffix = [0] * (self.n + 1)
        for j in range(self.n - 1, -1, -1):
            self.suffix[j] = self.suffix[j + 1] | self.masks[j]
        self.max_nodes = max_nodes
        self.nodes = 0
        self.best_objective = -math.inf
        self.best_chosen: tuple[int, ...] | None = None
        self.best_mask = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise InstanceTooLarge(self.nodes)

    def _offer(self, chosen: tuple[int, ...], mask: int) -> None:
        objective = _objective(self.coefficients, mask)
        if objective > self.best_objective or (
            objective == self.best_objective
            and (self.best_chosen is None or chosen < self.best_chosen)
        ):
            self.best_objective = objective
            self.best_chosen = chosen
            self.best_mask = mask

    def depth_first(self) -> None:
        lengths, masks, cap, budget = self.lengths, self.masks, self.cap, self.budget

        def visit(index: int, chosen: tuple[int, ...], used_len: int, covered: int) -> None:
            self._tick()
            if index == self.n:
                self._offer(chosen, covered)
                return
            # prune only on strictly worse bounds so objective ties still
            # reach _offer and the lexicographic rule decides
            if _bound(self.coefficients, covered, self.suffix[index]) < self.best_objective:
                return
            if len(chosen) < cap and used_len + lengths[index] <= budget:
                visit(index + 1, chosen + (index,),
                      used_len + lengths[index], covered | masks[index])
            visit(index + 1, chosen, used_len, covered)

        visit(0, (), 0, 0)

    def best_first(self) -> None:
        counter = 0
        start_bound = _bound(self.coefficients, 0, self.suffix[0])
        heap = [(-start_bound, counter, 0, (), 0, 0)]
        while heap:
            neg_bound, _, index, chosen, used_len, covered = heapq.heappop(heap)
            self._tick()
            if -neg_bound < self.best_objective:
                break  # heap is bound-ordered: nothing left can win or tie
            if index == self.n:
                self._offer(chosen, covered)
                continue
            if len(chosen) < self.cap and used_len + self.lengths[index] <= self.budget:
                new_covered = covered | self.masks[index]
                counter += 1
                heap_bound = _bound(self.coefficients, new_covered, self.suffix[index + 1])
                heapq.heappush(heap, (-heap_bound, counter, index + 1,
                                      chosen + (index,),
                                      used_len + self.lengths[index], new_covered))
            counter += 1
            skip_bound = _bound(self.coefficients, covered, self.suffix[index + 1])
            heapq.heappush(heap, (-skip_bound, counter, index + 1, chosen, used_len, covered))


def solve_ilp(instance: IlpInstance, max_nodes: int = DEFAULT_MAX_NODES) -> Selection:
    """Return the optimal selection; among equal optima the lexicographically
    smallest sentence-index tuple wins.  Raises InstanceTooLarge when the node
    budget runs out before optimality is proven."""
    _validate_instance(instance)
    search = _Search(instance, max_nodes)
    if search.n <= EXHAUSTIVE_LIMIT:
        search.depth_first()
    else:
        search.best_first()
    chosen = search.best_chosen if search.best_chosen is not None else ()
    covered = tuple(sorted(_iter_bits(search.best_mask)))
    selection = Selection(
        sentences=tuple(chosen),
        concepts=covered,
        objective=_objective(search.coefficients, search.best_mask),
    )
    verify_selection(instance, selection)
    return selection


def verify_selection(instance: IlpInstance, selection: Selection) -> None:
    """Recheck every constraint from the raw instance; raises ValueError.

    This recomputes coverage and sums from instance data alone, so a solver
    bookkeeping bug cannot hide behind its own accounting.
    """
    n, m = len(instance.lengths), len(instance.concepts)
    chosen = list(selection.sentences)
    if chosen != sorted(set(chosen)) or any(j < 0 or j >= n for j in chosen):
        raise ValueError("sentence indices must be distinct, sorted, in range")
    picked = list(selection.concepts)
    if picked != sorted(set(picked)) or any(i < 0 or i >= m for i in picked):
        raise ValueError("concept indices must be distinct, sorted, in range")
    if sum(instance.lengths[j] for j in chosen) > instance.budget:
        raise ValueError("word budget exceeded")
    if len(chosen) > instance.sentence_cap:
        raise ValueError("sentence cap exceeded")
    picked_set = set(picked)
    for i in range(m):
        covered = any(instance.occurrence[j][i] for j in chosen)
        if covered and i not in picked_set:
            raise ValueError(f"concept {i} is covered but not selected")
        if not covered and i in picked_set:
            raise ValueError(f"concept {i} is selected but uncovered")
    expected = math.fsum(
        instance.concepts[i].weight + instance.concepts[i].relevance for i in picked
    )
    if selection.objective != expected:
        raise ValueError("objective does not match the selected concepts")


def order_sentences(selection: Selection, pool: list[PoolSentence],
                    timeline: list[TimestampedDoc]) -> Description:
    """Arrange the chosen sentences for reading.

    Sentences from a single document keep their original positions.  Across
    documents the timeline order applies (it already encodes timestamp order,
    assignment-order tie-breaks, and trailing never-timestamped documents),
    with position ordering inside each document.
    """
    rank = {td.document: i for i, td in enumerate(timeline)}
    stamps = {td.document: td.timestamp for td in timeline}
    chosen = [pool[j] for j in selection.sentences]
    if len({ps.document for ps in chosen}) <= 1:
        chosen.sort(key=lambda ps: ps.position)
    else:
        chosen.sort(key=lambda ps: (rank[ps.document], ps.position))
    described = tuple(
        DescribedSentence(text=ps.text, document=ps.document, position=ps.position,
                          timestamp=stamps.get(ps.document))
        for ps in chosen
    )
    return Description(sentences=described,
                       word_count=sum(ps.word_length for ps in chosen))


def instance_to_dict(instance: IlpInstance) -> dict:
    return {
        "sentences": list(instance.sentences),
        "lengths": list(instance.lengths),
        "concepts": [list(c.bigram) for c in instance.concepts],
        "weights": [c.weight for c in instance.concepts],
        "relevances": [c.relevance for c in instance.concepts],
        "occurrence": [list(row) for row in instance.occurrence],
        "budget": instance.budget,
        "sentence_cap": instance.sentence_cap,
    }


def instance_from_dict(data: dict) -> IlpInstance:
    concepts = [
        Concept(bigram=(b[0], b[1]), weight=w, relevance=r)
        for b, w, r in zip(data["concepts"], data["weights"], data["relevances"])
    ]
    return IlpInstance(
        sentences=list(data["sentences"]),
        lengths=list(data["lengths"]),
        concepts=concepts,
        occurrence=[list(row) for row in data["occurrence"]],
        budget=data["budget"],
        sentence_cap=data["sentence_cap"],
    )


def dump_instance(instance: IlpInstance, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(instance), fh, ensure_ascii=False, indent=2)


def load_instance(path: str | Path) -> IlpInstance:
    with open(path, encoding="utf-8") as fh:
        return instance_from_dict(json.load(fh))
