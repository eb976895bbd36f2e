"""Free-text matching of problem descriptions to entry points.

People describe problems ("I have just been made homeless"), not bodies
or procedures, so entry points carry per-language keyword phrases and the
matcher scores against those. Queries are matched and thrown away — they
are never stored or logged anywhere.

Tokenization lowercases, strips punctuation and removes stop words from
the fixed published lists shipped with the package (one file per
language; see ``data/stopwords.*.txt``). Diacritics are preserved: Welsh
needs its circumflexes.

Scoring: each keyword phrase wholly contained in the query tokens (as an
order-preserving token subsequence) scores 2; each remaining distinct
keyword token that intersects the query tokens scores 1. Zero-score entry
points are omitted. Adding a token that appears in none of an entry
point's keyword phrases leaves that entry point's score unchanged, so
unrelated words never hurt a match.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable

from .errors import InvalidValue
from .model import LANGUAGES, PathwayGraph

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


@lru_cache(maxsize=None)
def _stopwords(lang: str) -> frozenset[str]:
    if lang not in LANGUAGES:
        raise InvalidValue(f"unsupported language {lang!r}")
    text = resources.files("artemus.data").joinpath(f"stopwords.{lang}.txt").read_text("utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


def tokenize(text: str, lang: str) -> list[str]:
    """Lowercased word tokens with the language's stop words removed."""
    stops = _stopwords(lang)
    return [t for t in _TOKEN_RE.findall(text.lower()) if t not in stops]


def _is_subsequence(needle: Iterable[str], haystack: list[str]) -> bool:
    it = iter(haystack)
    return all(token in it for token in needle)


@dataclass(frozen=True)
class SearchMatch:
    entry_point_id: str
    score: int
    matched_phrases: tuple[str, ...]


def search(graph: PathwayGraph, query: str, lang: str, k: int) -> list[SearchMatch]:
    """Top-``k`` entry points for a query, best first.

    Ties rank by entry-point declaration order. An empty or all-stop-word
    query matches nothing; the caller decides what browsing looks like.
    """
    if k <= 0:
        raise InvalidValue(f"k must be positive, got {k}")
    query_tokens = tokenize(query, lang)
    query_set = set(query_tokens)
    ranked: list[tuple[int, SearchMatch]] = []
    for index, entry in enumerate(graph.entry_points):
        phrases = entry.keywords.get(lang, ())
        matched: list[str] = []
        leftover_tokens: set[str] = set()
        for phrase in phrases:
            phrase_tokens = tokenize(phrase, lang)
            if phrase_tokens and _is_subsequence(phrase_tokens, query_tokens):
                matched.append(phrase)
            else:
                leftover_tokens.update(phrase_tokens)
        single_hits = sorted(leftover_tokens & query_set)
        score = 2 * len(matched) + len(single_hits)
        if score > 0:
            ranked.append(
                (
                    index,
                    SearchMatch(
                        entry_point_id=entry.id,
                        score=score,
                        matched_phrases=tuple(matched) + tuple(single_hits),
                    ),
                )
            )
    ranked.sort(key=lambda pair: (-pair[1].score, pair[0]))
    return [match for _, match in ranked[:k]]
