"""Phonetic key encoding for Amharic words.

A word is reduced to a canonical sound key in two steps: homophone
simplification (simplify) and vowel removal (remove_vowels). Around the
canonical key the encoder grows a small prioritized set of alternates:

    tier 0  canonical        the key itself
    tier 1  phonological     nasal alternation ም/ን before ብ or ፍ
    tier 2  glyph            visually confusable key characters swapped
    tier 3  input method     every shifted consonant downgraded to the
                             plain key it shares on phonetic keyboards

Lower tiers are more trustworthy matches. Keys contain only sixth-order
(sadis) consonants, except a single leading አ marking a word-initial
vowel.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import IntEnum
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterator

from . import ethiopic
from .errors import (
    EmptyWordError,
    InvalidInputError,
    InvalidOrderError,
    LoadError,
)

__all__ = [
    "Tier",
    "Encoding",
    "EncodingSet",
    "MistrikeProfile",
    "GlyphPair",
    "EncoderConfig",
    "load_mistrike_profile",
    "load_glyph_pairs",
    "default_mistrike_profile",
    "default_glyph_pairs",
    "simplify",
    "remove_vowels",
    "phonological_alternates",
    "glyph_alternates",
    "lcd_mistrike",
    "encode",
    "config_fingerprint",
]

_ALEF = "አ"  # አ
_WAW = "ው"   # ው
_YOD = "ይ"   # ይ

# Nasal alternation: ም and ን trade places before these consonants.
_NASAL_SWAP = {"ም": "ን", "ን": "ም"}
_NASAL_TRIGGERS = frozenset({"ብ", "ፍ"})


class Tier(IntEnum):
    """Confidence rank of a key; lower is closer to the written word."""

    CANONICAL = 0
    PHONOLOGICAL = 1
    GLYPH = 2
    INPUT_METHOD = 3


@dataclass(frozen=True)
class Encoding:
    key: str
    tier: Tier


@dataclass(frozen=True)
class EncodingSet:
    """Prioritized, deduplicated encodings of one word.

    The first entry is always the canonical key and tiers never decrease
    along the sequence.
    """

    encodings: tuple[Encoding, ...]

    def __iter__(self) -> Iterator[Encoding]:
        return iter(self.encodings)

    def __len__(self) -> int:
        return len(self.encodings)

    @property
    def canonical(self) -> str:
        return self.encodings[0].key

    def keys(self) -> tuple[str, ...]:
        return tuple(e.key for e in self.encodings)

    def key_set(self) -> frozenset[str]:
        return frozenset(e.key for e in self.encodings)


@dataclass(frozen=True)
class MistrikeProfile:
    """Shifted/plain consonant pairs of an input method.

    pairs holds (shifted, plain) family heads as written (first-order
    forms); sadis_pairs holds the same mapping in key alphabet. The
    downgrade runs in the shifted-to-plain direction only: typing the
    shifted form requires deliberate effort, mistyping it does not.
    """

    pairs: tuple[tuple[str, str], ...]
    sadis_pairs: tuple[tuple[str, str], ...]

    def key_table(self) -> dict[int, str]:
        return {ord(a): b for a, b in self.sadis_pairs}


@dataclass(frozen=True)
class GlyphPair:
    """Two key characters whose letterforms are routinely confused."""

    a: str
    b: str
    anywhere: bool  # False: applies at word-initial position only

    def partner(self, ch: str) -> str | None:
        if ch == self.a:
            return self.b
        if ch == self.b:
            return self.a
        return None


def _rules_records(path: Path):
    # Same grammar as the script tables: comments, [section], tokens.
    from .ethiopic import _records

    return _records(path)


def load_mistrike_profile(
    path: Path | str, tables: ethiopic.ScriptTables | None = None
) -> MistrikeProfile:
    """Load a [mistrike-pairs] file of (shifted, plain) family pairs."""
    path = Path(path)
    tables = tables or ethiopic.default_tables()
    pairs: list[tuple[str, str]] = []
    sadis_pairs: list[tuple[str, str]] = []
    seen_shifted: set[str] = set()
    for lineno, section, tokens in _rules_records(path):
        if section != "mistrike-pairs":
            raise LoadError(f"unknown section {section!r}", path=path, line=lineno)
        if len(tokens) != 2:
            raise LoadError("expected: <shifted family> <plain family>",
                            path=path, line=lineno)
        shifted, plain = tokens
        for family in (shifted, plain):
            info = tables.by_char.get(family)
            if info is None or info[1] != 1:
                raise LoadError(f"{family!r} is not a first-order family form",
                                path=path, line=lineno)
        if shifted in seen_shifted:
            raise LoadError(f"family {shifted!r} shifted in more than one pair",
                            path=path, line=lineno)
        seen_shifted.add(shifted)
        pairs.append((shifted, plain))
        sadis_pairs.append(
            (ethiopic.compose(shifted, ethiopic.SADIS, tables),
             ethiopic.compose(plain, ethiopic.SADIS, tables))
        )
    return MistrikeProfile(pairs=tuple(pairs), sadis_pairs=tuple(sadis_pairs))


def load_glyph_pairs(
    path: Path | str, tables: ethiopic.ScriptTables | None = None
) -> tuple[GlyphPair, ...]:
    """Load a [glyph-pairs] file of confusable key characters."""
    path = Path(path)
    tables = tables or ethiopic.default_tables()
    pairs: list[GlyphPair] = []
    used: set[str] = set()
    for lineno, section, tokens in _rules_records(path):
        if section != "glyph-pairs":
            raise LoadError(f"unknown section {section!r}", path=path, line=lineno)
        if len(tokens) != 3 or tokens[2] not in ("initial", "any"):
            raise LoadError("expected: <char> <char> initial|any",
                            path=path, line=lineno)
        a, b, position = tokens
        for ch in (a, b):
            info = tables.by_char.get(ch)
            if info is None or info[1] != ethiopic.SADIS:
                raise LoadError(f"{ch!r} is not a sadis-order key character",
                                path=path, line=lineno)
            if ch in used:
                raise LoadError(f"{ch!r} appears in more than one pair",
                                path=path, line=lineno)
            used.add(ch)
        pairs.append(GlyphPair(a=a, b=b, anywhere=position == "any"))
    return tuple(pairs)


@lru_cache(maxsize=None)
def _cached_profile(path_str: str) -> MistrikeProfile:
    return load_mistrike_profile(Path(path_str))


@lru_cache(maxsize=None)
def _cached_glyph_pairs(path_str: str) -> tuple[GlyphPair, ...]:
    return load_glyph_pairs(Path(path_str))


def default_mistrike_profile() -> MistrikeProfile:
    """The bundled phonetic-keyboard profile."""
    return _cached_profile(str(ethiopic.data_dir() / "mistrike_profile.txt"))


def default_glyph_pairs() -> tuple[GlyphPair, ...]:
    """The bundled glyph-confusion table."""
    return _cached_glyph_pairs(str(ethiopic.data_dir() / "glyph_pairs.txt"))


@dataclass(frozen=True)
class EncoderConfig:
    """Knobs for encode().

    wy_as_vowels treats non-initial ው and ይ as vowels and drops them
    from keys. profile=None disables input-method alternates entirely,
    the right call when the writer's keyboard layout is unknown.
    max_encodings caps the set size; the canonical key is never evicted.
    """

    wy_as_vowels: bool = False
    profile: MistrikeProfile | None = field(default_factory=default_mistrike_profile)
    glyph_pairs: tuple[GlyphPair, ...] = field(default_factory=default_glyph_pairs)
    max_encodings: int = 16

    def __post_init__(self):
        if self.max_encodings < 1:
            raise ValueError("max_encodings must be at least 1")


def simplify(word: str, tables: ethiopic.ScriptTables | None = None) -> str:
    """Collapse every character onto its homophone-class head.

    Vowel carriers of any order become bare አ. If the head family has no
    member at the source character's column (only the rare ʷ columns),
    the original character is kept so the labiovelar subkind survives;
    remove_vowels resolves the family then.
    """
    tables = tables or ethiopic.default_tables()
    out: list[str] = []
    for pos, ch in enumerate(word):
        info = ethiopic.decompose(ch, tables)
        if info is None:
            raise InvalidInputError(ch, pos, word)
        family = tables.representative_of(info.family)
        if family in tables.vowel_carriers:
            out.append(_ALEF)
            continue
        try:
            out.append(ethiopic.compose(family, info.order, tables))
        except InvalidOrderError:
            out.append(ch)
    return "".join(out)


def remove_vowels(
    word: str,
    config: EncoderConfig | None = None,
    tables: ethiopic.ScriptTables | None = None,
) -> str:
    """Reduce a simplified word to its consonant key.

    Non-initial vowel carriers are dropped; a word-initial carrier stays
    as a leading አ. Everything else becomes its family's sadis form,
    with fourth-order labiovelars (Cʷa) expanding to [sadis, ው] and the
    remaining ʷ-vowels collapsing to the bare sadis. With wy_as_vowels
    set, non-initial ው and ይ are dropped from the finished key no matter
    which rule emitted them, so equal default keys stay equal.
    """
    tables = tables or ethiopic.default_tables()
    wy = config.wy_as_vowels if config is not None else False
    out: list[str] = []
    for pos, ch in enumerate(word):
        info = ethiopic.decompose(ch, tables)
        if info is None:
            raise InvalidInputError(ch, pos, word)
        family = tables.representative_of(info.family)
        if family in tables.vowel_carriers:
            if pos == 0:
                out.append(_ALEF)
            continue
        out.append(ethiopic.compose(family, ethiopic.SADIS, tables))
        if info.order == ethiopic.WA:
            out.append(_WAW)
    if wy:
        out = out[:1] + [c for c in out[1:] if c != _WAW and c != _YOD]
    return "".join(out)


def _swap_sites(key: str, sites: tuple[int, ...], table: dict[str, str]) -> str:
    chars = list(key)
    for i in sites:
        chars[i] = table[chars[i]]
    return "".join(chars)


def _phonological_alternates(key: str) -> list[str]:
    sites = [
        i
        for i in range(len(key) - 1)
        if key[i] in _NASAL_SWAP and key[i + 1] in _NASAL_TRIGGERS
    ]
    alts: list[str] = []
    for r in range(1, len(sites) + 1):
        for combo in combinations(sites, r):
            alts.append(_swap_sites(key, combo, _NASAL_SWAP))
    return alts


def phonological_alternates(key: str) -> set[str]:
    """Keys with ም/ን swapped before ብ or ፍ, at every site combination."""
    return set(_phonological_alternates(key))


def _glyph_alternates(key: str, pairs: tuple[GlyphPair, ...]) -> list[str]:
    sites: list[tuple[int, str]] = []
    for i, ch in enumerate(key):
        for pair in pairs:
            if not pair.anywhere and i != 0:
                continue
            partner = pair.partner(ch)
            if partner is not None:
                sites.append((i, partner))
                break
    alts: list[str] = []
    for r in range(1, len(sites) + 1):
        for combo in combinations(sites, r):
            chars = list(key)
            for i, partner in combo:
                chars[i] = partner
            alts.append("".join(chars))
    return alts


def glyph_alternates(
    key: str, pairs: tuple[GlyphPair, ...] | None = None
) -> set[str]:
    """Keys with visually confusable characters swapped per the pair table."""
    if pairs is None:
        pairs = default_glyph_pairs()
    return set(_glyph_alternates(key, pairs))


def lcd_mistrike(key: str, profile: MistrikeProfile) -> str:
    """Downgrade every shifted consonant in the key to its plain partner.

    The output may equal the input when the key holds no shifted forms.
    """
    return key.translate(profile.key_table())


def encode(
    word: str,
    config: EncoderConfig | None = None,
    tables: ethiopic.ScriptTables | None = None,
) -> EncodingSet:
    """Encode a word into its prioritized key set."""
    if not word:
        raise EmptyWordError("cannot encode an empty word")
    if config is None:
        config = EncoderConfig()
    tables = tables or ethiopic.default_tables()

    canonical = remove_vowels(simplify(word, tables), config, tables)
    staged: list[tuple[str, Tier]] = [(canonical, Tier.CANONICAL)]
    for alt in _phonological_alternates(canonical):
        staged.append((alt, Tier.PHONOLOGICAL))
    for key, _ in list(staged):
        for alt in _glyph_alternates(key, config.glyph_pairs):
            staged.append((alt, Tier.GLYPH))
    if config.profile is not None:
        for key, _ in list(staged):
            downgraded = lcd_mistrike(key, config.profile)
            if downgraded != key:
                staged.append((downgraded, Tier.INPUT_METHOD))

    seen: set[str] = set()
    unique: list[Encoding] = []
    for key, tier in staged:
        if key in seen:
            continue
        seen.add(key)
        unique.append(Encoding(key=key, tier=tier))
    return EncodingSet(encodings=tuple(unique[: config.max_encodings]))


def config_fingerprint(
    config: EncoderConfig, tables: ethiopic.ScriptTables | None = None
) -> str:
    """Stable digest of everything that shapes key sets.

    Indexes store this so a query under a different config is rejected
    instead of silently missing.
    """
    tables = tables or ethiopic.default_tables()
    parts = [
        f"wy={int(config.wy_as_vowels)}",
        f"max={config.max_encodings}",
        "profile=" + (
            "none"
            if config.profile is None
            else ",".join(a + b for a, b in config.profile.pairs)
        ),
        "glyph=" + ",".join(
            p.a + p.b + ("*" if p.anywhere else "^") for p in config.glyph_pairs
        ),
        "classes=" + ",".join(
            m + h for m, h in sorted(tables.representative.items())
        ),
        "carriers=" + "".join(sorted(tables.vowel_carriers)),
        "labiovelar=" + ",".join(
            f"{ch}{base}{order}"
            for ch, (base, order) in sorted(tables.labiovelar_map.items())
        ),
    ]
    return hashlib.sha256("\n".join(parts).encode("utf-8")).hexdigest()[:16]
