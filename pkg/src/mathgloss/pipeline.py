"""End-to-end description construction and the command-line front end.

Stages: load corpus and vectors, rank topics for the query, build the
citation graph, select documents, extract the timeline, mine bigram concepts,
solve the coverage program, and order the chosen sentences.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import load_corpus
from .errors import MathGlossError, ParseError, QueryParseError
from .retrieval import Query, Topic, rank_topics
from .selector import TimestampedDoc, extract_timeline, select_relevant
from .summarizer import (DEFAULT_MAX_NODES, Description, build_instance,
                         extract_concepts, order_sentences, solve_ilp)
from .textsim import load_vectors
from .trg import BuildReport, build_trg

DEFAULT_TOPICS = 3
DEFAULT_MAX_WORDS = 130
DEFAULT_MAX_SENTENCES = 5


@dataclass
class PipelineConfig:
    corpus_path: str | Path
    vectors_path: str | Path
    stopwords_path: str | Path
    k_topics: int = DEFAULT_TOPICS
    max_words: int = DEFAULT_MAX_WORDS
    max_sentences: int = DEFAULT_MAX_SENTENCES
    solver_max_nodes: int = DEFAULT_MAX_NODES
    trace: bool = False


@dataclass
class Trace:
    topics: list[Topic] = field(default_factory=list)
    documents: list[str] = field(default_factory=list)
    timeline: list[TimestampedDoc] = field(default_factory=list)
    graph_report: BuildReport | None = None
    pool_size: int = 0
    concept_count: int = 0
    budget: int = 0
    sentence_cap: int = 0
    selected: tuple[int, ...] = ()
    objective: float = 0.0

    def to_dict(self) -> dict:
        return {
            "topics": [{"title": t.title, "score": t.score} for t in self.topics],
            "documents": list(self.documents),
            "timeline": [
                {"document": td.document, "timestamp": td.timestamp}
                for td in self.timeline
            ],
            "graph": {
                "edges_kept": self.graph_report.edges_kept,
                "dangling_dropped": self.graph_report.dangling_dropped,
                "self_dropped": self.graph_report.self_dropped,
            } if self.graph_report else None,
            "pool_size": self.pool_size,
            "concept_count": self.concept_count,
            "budget": self.budget,
            "sentence_cap": self.sentence_cap,
            "selected": list(self.selected),
            "objective": self.objective,
        }


def describe(query: Query, config: PipelineConfig) -> tuple[Description, Trace]:
    """Run every stage for one query and return the description with its trace."""
    corpus = load_corpus(config.corpus_path)
    store = load_vectors(config.vectors_path, config.stopwords_path)
    topics = rank_topics(query, corpus, store, k=config.k_topics)
    graph, report = build_trg(corpus)
    documents = select_relevant(graph, topics, query, store)
    timeline = extract_timeline(graph, topics, documents)
    ordered_docs = [corpus.get(td.document) for td in timeline]
    pool, concepts = extract_concepts(ordered_docs, query, store)
    instance = build_instance(pool, concepts, config.max_words,
                              config.max_sentences, store.stopwords)
    selection = solve_ilp(instance, max_nodes=config.solver_max_nodes)
    description = order_sentences(selection, pool, timeline)
    trace = Trace(
        topics=topics,
        documents=[d.title for d in documents],
        timeline=timeline,
        graph_report=report,
        pool_size=len(pool),
        concept_count=len(concepts),
        budget=config.max_words,
        sentence_cap=config.max_sentences,
        selected=selection.sentences,
        objective=selection.objective,
    )
    return description, trace


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="mathgloss",
                     description="Construct a short textual description for a math expression.")
    parser.add_argument("--corpus", required=True, help="corpus file, one JSON document per line")
    parser.add_argument("--vectors", required=True, help="word vector file")
    parser.add_argument("--stopwords", required=True, help="stopword file, one token per line")
    parser.add_argument("--expr", required=True, help="query expression")
    parser.add_argument("--context", required=True, help="query context text")
    parser.add_argument("--k", type=int, default=DEFAULT_TOPICS, help="number of topics")
    parser.add_argument("--max-words", type=int, default=DEFAULT_MAX_WORDS,
                        help="word budget for the description")
    parser.add_argument("--max-sentences", type=int, default=DEFAULT_MAX_SENTENCES,
                        help="sentence cap for the description")
    parser.add_argument("--trace", action="store_true", help="report intermediate stages")
    parser.add_argument("--json", action="store_true", dest="as_json",
                        help="emit JSON instead of plain text")
    return parser


def _print_trace(trace: Trace, stream) -> None:
    print("topics:", file=stream)
    for topic in trace.topics:
        print(f"  {topic.title}\t{topic.score:.6f}", file=stream)
    print("documents:", file=stream)
    for title in trace.documents:
        print(f"  {title}", file=stream)
    print("timeline:", file=stream)
    for td in trace.timeline:
        stamp = "-" if td.timestamp is None else f"{td.timestamp:.1f}"
        print(f"  {stamp}\t{td.document}", file=stream)
    print(f"pool: {trace.pool_size} sentences, {trace.concept_count} concepts", file=stream)
    print(f"selected: {list(trace.selected)} objective {trace.objective:.6f}", file=stream)


def cli_run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(parser.format_usage(), end="", file=sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    config = PipelineConfig(
        corpus_path=args.corpus,
        vectors_path=args.vectors,
        stopwords_path=args.stopwords,
        k_topics=args.k,
        max_words=args.max_words,
        max_sentences=args.max_sentences,
        trace=args.trace,
    )
    try:
        try:
            query = Query.parse(args.expr, args.context)
        except ParseError as exc:
            raise QueryParseError(f"cannot parse --expr: {exc}") from exc
        description, trace = describe(query, config)
    except MathGlossError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.as_json:
        payload = {"description": description.texts, "trace": trace.to_dict()}
        print(json.dumps(payload, ensure_ascii=False))
    else:
        for text in description.texts:
            print(text)
        if args.trace:
            _print_trace(trace, sys.stderr)
    return 0


def main() -> None:
    raise SystemExit(cli_run())


if __name__ == "__main__":
    main()
