"""Line-delimited JSON corpus: document records, loading, and tokenization.

Each input line is one object with fields id, title, leading_paragraph,
sentences and math.  Unknown fields are ignored so corpora can carry extra
metadata without breaking older readers.
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass
from pathlib import Path

from .errors import DuplicateTitle, EmptyCorpus, MalformedRecord, ParseError
from .mathtree import MathTree, parse_expression


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _strip_punct(token: str) -> str:
    start, end = 0, len(token)
    while start < end and _is_punct(token[start]):
        start += 1
    while end > start and _is_punct(token[end - 1]):
        end -= 1
    return token[start:end]


def tokenize(text: str) -> list[str]:
    """Lowercase, split on whitespace, strip edge punctuation, drop empties.

    Interior punctuation survives, so "cassini's" stays one token.  The
    function is idempotent on its own space-joined output.
    """
    tokens = []
    for raw in text.lower().split():
        token = _strip_punct(raw)
        if token:
            tokens.append(token)
    return tokens


@dataclass(frozen=True)
class Sentence:
    text: str
    tokens: tuple[str, ...]
    position: int

    @property
    def word_length(self) -> int:
        return len(self.tokens)

    @classmethod
    def make(cls, text: str, position: int) -> "Sentence":
        return cls(text=text, tokens=tuple(tokenize(text)), position=position)


@dataclass(frozen=True)
class MathItem:
    source: str
    tree: MathTree
    context: str
    cites: tuple[str, ...]


@dataclass(frozen=True)
class Document:
    id: str
    title: str
    leading_paragraph: str
    sentences: tuple[Sentence, ...]
    math_items: tuple[MathItem, ...]


@dataclass
class Corpus:
    """Documents keyed by title, in file order."""

    documents: dict[str, Document]

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents.values())

    def __contains__(self, title: str) -> bool:
        return title in self.documents

    def get(self, title: str) -> Document:
        return self.documents[title]

    @property
    def titles(self) -> list[str]:
        return list(self.documents)


_REQUIRED = ("id", "title", "leading_paragraph", "sentences", "math")
_MATH_REQUIRED = ("source", "context", "cites")


def _parse_math_item(raw: dict, line_number: int, index: int) -> MathItem:
    for key in _MATH_REQUIRED:
        if key not in raw:
            raise MalformedRecord(line_number, f"math item {index} missing field {key!r}")
    source, context, cites = raw["source"], raw["context"], raw["cites"]
    if not isinstance(source, str) or not isinstance(context, str):
        raise MalformedRecord(line_number, f"math item {index}: source and context must be strings")
    if not isinstance(cites, list) or any(not isinstance(c, str) for c in cites):
        raise MalformedRecord(line_number, f"math item {index}: cites must be a list of strings")
    if any(not c for c in cites):
        raise MalformedRecord(line_number, f"math item {index}: empty citation title")
    try:
        tree = parse_expression(source)
    except ParseError as exc:
        raise MalformedRecord(line_number, f"math item {index}: {source!r}: {exc}") from exc
    return MathItem(source=source, tree=tree, context=context, cites=tuple(cites))


def _parse_record(raw: object, line_number: int) -> Document:
    if not isinstance(raw, dict):
        raise MalformedRecord(line_number, "record is not a JSON object")
    for key in _REQUIRED:
        if key not in raw:
            raise MalformedRecord(line_number, f"missing field {key!r}")
    doc_id, title = raw["id"], raw["title"]
    if not isinstance(doc_id, str) or not doc_id:
        raise MalformedRecord(line_number, "id must be a non-empty string")
    if not isinstance(title, str) or not title:
        raise MalformedRecord(line_number, "title must be a non-empty string")
    lead = raw["leading_paragraph"]
    if not isinstance(lead, str):
        raise MalformedRecord(line_number, "leading_paragraph must be a string")
    if not isinstance(raw["sentences"], list) or any(not isinstance(s, str) for s in raw["sentences"]):
        raise MalformedRecord(line_number, "sentences must be a list of strings")
    if raw["sentences"] and not lead:
        raise MalformedRecord(line_number, "leading_paragraph empty but sentences present")
    if not isinstance(raw["math"], list):
        raise MalformedRecord(line_number, "math must be a list")
    sentences = tuple(Sentence.make(text, i) for i, text in enumerate(raw["sentences"]))
    math_items = []
    for i, m in enumerate(raw["math"]):
        if not isinstance(m, dict):
            raise MalformedRecord(line_number, f"math item {i} is not an object")
        math_items.append(_parse_math_item(m, line_number, i))
    return Document(id=doc_id, title=title, leading_paragraph=lead,
                    sentences=sentences, math_items=tuple(math_items))


def load_corpus(path: str | Path) -> Corpus:
    """Read one document per line; reject malformed records with the line number."""
    documents: dict[str, Document] = {}
    seen_ids: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for line_number, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(line_number, f"invalid JSON: {exc.msg}") from exc
            doc = _parse_record(raw, line_number)
            if doc.title in documents:
                raise DuplicateTitle(doc.title)
            if doc.id in seen_ids:
                raise MalformedRecord(line_number, f"duplicate document id {doc.id!r}")
            seen_ids.add(doc.id)
            documents[doc.title] = doc
    if not documents:
        raise EmptyCorpus(f"no records in {path}")
    return Corpus(documents)


def document_to_record(doc: Document) -> dict:
    return {
        "id": doc.id,
        "title": doc.title,
        "leading_paragraph": doc.leading_paragraph,
        "sentences": [s.text for s in doc.sentences],
        "math": [
            {"source": m.source, "context": m.context, "cites": list(m.cites)}
            for m in doc.math_items
        ],
    }


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write the corpus back out; load_corpus(save_corpus(c)) round-trips."""
    with open(path, "w", encoding="utf-8") as fh:
        for doc in corpus:
            fh.write(json.dumps(document_to_record(doc), ensure_ascii=False))
            fh.write("\n")
