"""Encoding-indexed dictionary lookup.

A lexicon is indexed by every key its words encode to; a lookup encodes
the query the same way and unions the hits. Ranking is by match tier
(how speculative the shared key is), then edit distance, then the word
itself.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from . import ethiopic
from .encoder import EncoderConfig, Tier, config_fingerprint, encode
from .errors import ConfigMismatchError, InvalidInputError, LoadError

try:
    from ._speedups import levenshtein as _levenshtein

    DISTANCE_BACKEND = "c-extension"
except ImportError:  # pragma: no cover - depends on how the wheel was built
    from ._distance_py import levenshtein as _levenshtein

    DISTANCE_BACKEND = "pure-python"

__all__ = [
    "DISTANCE_BACKEND",
    "Lexicon",
    "EncodingIndex",
    "Suggestion",
    "distance",
    "load_lexicon",
    "build_index",
    "suggest",
    "dump_index",
    "load_index",
]

_INDEX_MAGIC = "# amharic-metaphone-index v1"


def distance(a: str, b: str) -> int:
    """Unit-cost Levenshtein distance over Unicode scalars."""
    return _levenshtein(a, b)


@dataclass(frozen=True)
class Lexicon:
    """A set of known-good words."""

    words: frozenset[str]

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __iter__(self):
        return iter(sorted(self.words))


@dataclass(frozen=True)
class Suggestion:
    word: str
    match_tier: Tier
    distance: int


@dataclass
class EncodingIndex:
    """Inverted index: key -> {word: best tier that produced the key}."""

    mapping: dict[str, dict[str, Tier]] = field(default_factory=dict)
    fingerprint: str = ""

    def __len__(self) -> int:
        return len(self.mapping)

    def add(self, key: str, word: str, tier: Tier) -> None:
        bucket = self.mapping.setdefault(key, {})
        current = bucket.get(word)
        if current is None or tier < current:
            bucket[word] = tier

    def lookup(self, key: str) -> Mapping[str, Tier]:
        return self.mapping.get(key, {})


def load_lexicon(path: Path | str) -> Lexicon:
    """Read one word per line; '#' comments and blank lines are skipped.

    Words are NFC-normalized. A line containing anything other than
    Ethiopic syllables is a LoadError naming the line.
    """
    path = Path(path)
    tables = ethiopic.default_tables()
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise LoadError("lexicon file not found", path=path)
    except UnicodeDecodeError as exc:
        raise LoadError(f"not valid UTF-8: {exc}", path=path)
    words: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word = unicodedata.normalize("NFC", line)
        for ch in word:
            if not ethiopic.is_ethiopic(ch, tables):
                raise LoadError(
                    f"non-Ethiopic character {ch!r} in word {word!r}",
                    path=path,
                    line=lineno,
                )
        words.add(word)
    return Lexicon(words=frozenset(words))


def build_index(lexicon: Lexicon, config: EncoderConfig | None = None) -> EncodingIndex:
    """Index every lexicon word under all keys it encodes to."""
    if config is None:
        config = EncoderConfig()
    index = EncodingIndex(fingerprint=config_fingerprint(config))
    for word in sorted(lexicon.words):
        try:
            encodings = encode(word, config)
        except InvalidInputError as exc:
            raise InvalidInputError(exc.char, exc.position, word) from exc
        for entry in encodings:
            index.add(entry.key, word, entry.tier)
    return index


def suggest(
    query: str,
    index: EncodingIndex,
    config: EncoderConfig | None = None,
    limit: int = 10,
) -> list[Suggestion]:
    """Ranked lexicon words sharing at least one key with the query.

    A candidate's match tier is the max of the query-side and
    lexicon-side tiers of the shared key (the weaker end of the bridge),
    minimized over all shared keys.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    if config is None:
        config = EncoderConfig()
    if index.fingerprint and index.fingerprint != config_fingerprint(config):
        raise ConfigMismatchError(
            "index was built under a different encoder config; rebuild it"
        )
    best: dict[str, Tier] = {}
    for entry in encode(query, config):
        for word, word_tier in index.lookup(entry.key).items():
            tier = max(entry.tier, word_tier)
            current = best.get(word)
            if current is None or tier < current:
                best[word] = tier
    ranked = [
        Suggestion(word=word, match_tier=tier, distance=distance(query, word))
        for word, tier in best.items()
    ]
    ranked.sort(key=lambda s: (s.match_tier, s.distance, s.word))
    return ranked[:limit]


def dump_index(index: EncodingIndex, path: Path | str) -> None:
    """Write the index as sorted key/word/tier lines, reload-ready."""
    path = Path(path)
    lines = [_INDEX_MAGIC, f"# fingerprint {index.fingerprint}"]
    for key in sorted(index.mapping):
        bucket = index.mapping[key]
        for word in sorted(bucket):
            lines.append(f"{key}\t{word}\t{int(bucket[word])}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_index(path: Path | str) -> EncodingIndex:
    """Reload a dump_index() file without re-encoding the lexicon."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except FileNotFoundError:
        raise LoadError("index file not found", path=path)
    except UnicodeDecodeError as exc:
        raise LoadError(f"not valid UTF-8: {exc}", path=path)
    if not lines or lines[0].strip() != _INDEX_MAGIC:
        raise LoadError("not an index dump (bad header)", path=path, line=1)
    fingerprint = ""
    index = EncodingIndex()
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("# fingerprint"):
            fingerprint = line.split()[-1] if len(line.split()) > 2 else ""
            continue
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise LoadError("expected key<TAB>word<TAB>tier", path=path, line=lineno)
        key, word, tier_token = parts
        try:
            tier = Tier(int(tier_token))
        except ValueError:
            raise LoadError(f"bad tier {tier_token!r}", path=path, line=lineno)
        index.add(key, word, tier)
    index.fingerprint = fingerprint
    return index
