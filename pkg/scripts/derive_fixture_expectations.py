"""Recompute the frozen test expectations for the bundled fixture corpus.

Every stage is re-derived here with plain-Python arithmetic and exhaustive
enumeration: own tokenizer, own cosine, own selection and timeline walk, and
a brute-force sweep over sentence subsets instead of the library solver.  The
only shared code is the expression parser (the path multisets it produces for
the decisive pairs are small enough to check by eye).  Running the script
prints the same literals that tests/test_acceptance.py pins, so the golden
values can be audited without trusting the library.

Usage:  python3 scripts/derive_fixture_expectations.py [--fixtures DIR]
"""

import argparse
import itertools
import json
import math
import sys
import unicodedata
from collections import Counter
from pathlib import Path

try:
    from mathgloss.mathtree import parse_expression, path_multiset
except ImportError:  # running from a checkout without an editable install
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
    from mathgloss.mathtree import parse_expression, path_multiset

QUERY_EXPR = "a^2+b^2=c^2"
QUERY_CONTEXT = "pythagorean theorem for the sides of a right triangle"
TOP_K = 3
BUDGET, CAP = 130, 5


def tokenize(text: str) -> list[str]:
    out = []
    for raw in text.lower().split():
        start, end = 0, len(raw)
        while start < end and unicodedata.category(raw[start]).startswith("P"):
            start += 1
        while end > start and unicodedata.category(raw[end - 1]).startswith("P"):
            end -= 1
        if raw[start:end]:
            out.append(raw[start:end])
    return out


def load_fixture(fixtures: Path):
    vectors = {}
    for line in (fixtures / "vectors.txt").read_text().splitlines():
        parts = line.split()
        if parts:
            vectors[parts[0]] = [float(x) for x in parts[1:]]
    stopwords = {w.strip().lower()
                 for w in (fixtures / "stopwords.txt").read_text().splitlines()
                 if w.strip()}
    docs = [json.loads(line)
            for line in (fixtures / "corpus.jsonl").read_text().splitlines()
            if line.strip()]
    return vectors, stopwords, docs


def make_avg(vectors, stopwords):
    dimension = len(next(iter(vectors.values())))

    def avg(tokens):
        keep = sorted(t for t in tokens if t not in stopwords and t in vectors)
        if not keep:
            return None
        total = [0.0] * dimension
        for token in keep:
            for i, value in enumerate(vectors[token]):
                total[i] += value
        return [x / len(keep) for x in total]

    return avg


def cos(a, b) -> float:
    if a is None or b is None:
        return 0.0
    num = sum(x * y for x, y in zip(a, b))
    den = math.sqrt(sum(x * x for x in a) * sum(y * y for y in b))
    return 0.0 if den == 0.0 else num / den


def tree_sim(source_a: str, source_b: str) -> float:
    paths_a = path_multiset(parse_expression(source_a))
    paths_b = path_multiset(parse_expression(source_b))
    shared = sum((paths_a & paths_b).values())
    return 2.0 * shared / (sum(paths_a.values()) + sum(paths_b.values()))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    default = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    parser.add_argument("--fixtures", type=Path, default=default,
                        help="directory holding corpus.jsonl, vectors.txt, stopwords.txt")
    args = parser.parse_args(argv)

    vectors, stopwords, docs = load_fixture(args.fixtures)
    by_title = {d["title"]: d for d in docs}
    avg = make_avg(vectors, stopwords)
    query_vec = avg(tokenize(QUERY_CONTEXT))

    # stage 1: topic ranking = best tree similarity + lead-paragraph cosine
    scores = {}
    for doc in docs:
        tree_term = max((tree_sim(QUERY_EXPR, m["source"]) for m in doc["math"]),
                        default=0.0)
        cos_term = cos(query_vec, avg(tokenize(doc["leading_paragraph"])))
        scores[doc["title"]] = tree_term + cos_term
    ranked = sorted(scores, key=lambda t: (-scores[t], t))
    topics = ranked[:TOP_K]
    print("topics:")
    for title in topics:
        print(f"  {title}: {scores[title]!r}")
    margins = [scores[ranked[i]] - scores[ranked[i + 1]] for i in range(TOP_K)]
    assert all(m > 0.04 for m in margins), f"ranking cut is not clear: {margins}"

    # stage 2: citation graph (dangling and self citations dropped)
    edges = []
    dangling = self_cites = 0
    for doc in docs:
        for item in doc["math"]:
            for cited in item["cites"]:
                if cited == doc["title"]:
                    self_cites += 1
                elif cited not in by_title:
                    dangling += 1
                else:
                    edges.append((doc["title"], cited, item["source"], item["context"]))
    print(f"graph: {len(edges)} edges kept, {dangling} dangling, {self_cites} self")

    def edge_score(edge):
        return cos(avg(tokenize(edge[3])), query_vec) + tree_sim(edge[2], QUERY_EXPR)

    def lead_cos(title):
        return cos(avg(tokenize(by_title[title]["leading_paragraph"])), query_vec)

    # stage 3: per topic keep the seed, its best citing and best cited neighbour
    selected_titles = []
    for topic in topics:
        selected_titles.append(topic)
        inlinks = [e for e in edges if e[1] == topic]
        if inlinks:
            selected_titles.append(max(
                inlinks, key=lambda e: edge_score(e) + lead_cos(e[0]))[0])
        outlinks = [e for e in edges if e[0] == topic]
        if outlinks:
            selected_titles.append(max(
                outlinks, key=lambda e: edge_score(e) + lead_cos(e[1]))[1])
    print("documents:", selected_titles)

    # stage 4: timeline — seed i at rank i, cited neighbours i-0.1, citing i+0.1
    pool_titles = list(dict.fromkeys(selected_titles))
    has_edge = {(e[0], e[1]) for e in edges}
    assigned = []
    for rank, topic in enumerate(topics, 1):
        if topic not in pool_titles:
            continue
        assigned.append((topic, float(rank)))
        pool_titles.remove(topic)
        for other in list(pool_titles):
            if (topic, other) in has_edge:
                assigned.append((other, rank - 0.1))
                pool_titles.remove(other)
        for other in list(pool_titles):
            if (other, topic) in has_edge:
                assigned.append((other, rank + 0.1))
                pool_titles.remove(other)
    timeline = sorted(assigned, key=lambda p: p[1]) + [(t, None) for t in pool_titles]
    print("timeline:", timeline)

    # stage 5: sentence pool, bigram concepts, exhaustive coverage sweep
    pool = []
    for title, _ in timeline:
        for position, text in enumerate(by_title[title]["sentences"]):
            tokens = tokenize(text)
            if tokens:
                pool.append((title, position, text, tokens))

    def bigrams(tokens):
        content = [t for t in tokens if t not in stopwords]
        return list(zip(content, content[1:]))

    weights = Counter(g for _, _, _, tokens in pool for g in bigrams(tokens))
    concepts = list(weights)
    coefficient = [weights[g] + cos(avg(list(g)), query_vec) for g in concepts]
    lengths = [len(tokens) for _, _, _, tokens in pool]
    occurrence = [set(bigrams(tokens)) for _, _, _, tokens in pool]
    print(f"pool: {len(pool)} sentences, {len(concepts)} concepts")

    best_obj, best_set = -1.0, None
    for size in range(0, min(CAP, len(pool)) + 1):
        for combo in itertools.combinations(range(len(pool)), size):
            if sum(lengths[j] for j in combo) > BUDGET:
                continue
            covered = [i for i, g in enumerate(concepts)
                       if any(g in occurrence[j] for j in combo)]
            objective = math.fsum(coefficient[i] for i in covered)
            if objective > best_obj or (objective == best_obj and combo < best_set):
                best_obj, best_set = objective, combo
    words = sum(lengths[j] for j in best_set)
    assert words <= BUDGET and len(best_set) <= CAP

    # stage 6: order by timeline rank then original sentence position
    rank_of = {title: i for i, (title, _) in enumerate(timeline)}
    ordered = sorted(best_set, key=lambda j: (rank_of[pool[j][0]], pool[j][1]))

    print("\nfrozen literals:")
    print(f"  TOPIC_SCORES = {[scores[t] for t in topics]!r}")
    print(f"  SELECTED = {best_set}")
    print(f"  OBJECTIVE = {best_obj!r}")
    print(f"  WORD_COUNT = {words}")
    print("\ndescription:")
    for j in ordered:
        print(f"  [{pool[j][0]} #{pool[j][1]}] {pool[j][2]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
