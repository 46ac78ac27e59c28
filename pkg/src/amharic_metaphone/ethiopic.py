"""Structural model of the Ethiopic syllabary.

Every supported syllable is a (consonant family, vocalic order) pair.
Families are identified by their first-order member ('ለ' for the l
family). Orders 1-7 are the plain vocalic columns; the remaining codes
cover the rounded and labiovelar columns:

    1..7   plain columns (a, u, i, aa, ee, sadis, o)
    11     ʷa first-order  (standalone series base, e.g. ቈ)
    13     ʷi              (e.g. ቊ)
    14     ʷaa, the fourth-order labiovelar (ቋ, ኳ, and the eighth-column
           -wa forms such as ሏ, ጧ)
    15     ʷee             (e.g. ቌ)
    16     ʷe              (e.g. ቍ)
    18     -oa, the rounded variant of the seventh column (ሇ, ቇ, ...)

The sixth column ("sadis") is the vowel-less form every syllable reduces
to when vowels are stripped.

The codepoint layout is a generated table keyed by scalar, not
arithmetic on codepoints; tests cross-check every entry against the
Unicode character database names. U+1358..U+135A (RYA, MYA, FYA) have no
family/order structure and are treated as unsupported, like punctuation
and numerals.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Mapping

from .errors import InvalidOrderError, LoadError, NotEthiopicError

__all__ = [
    "SADIS",
    "WA",
    "OA",
    "SERIES_ORDERS",
    "PLAIN_ORDERS",
    "Labiovelar",
    "SyllableInfo",
    "ScriptTables",
    "load_script_tables",
    "default_tables",
    "data_dir",
    "decompose",
    "compose",
    "to_sadis",
    "classify_labiovelar",
    "is_vowel_carrier",
    "is_ethiopic",
]

PLAIN_ORDERS = (1, 2, 3, 4, 5, 6, 7)
SADIS = 6
WA = 14
OA = 18
SERIES_ORDERS = (11, 13, 14, 15, 16)

# Offset of each standalone-series member within its row, by order.
_SERIES_OFFSETS = {0: 11, 2: 13, 3: 14, 4: 15, 5: 16}

# Regular family rows: base codepoint and the kind of the eighth column.
#   "wa"  = fourth-order labiovelar (order 14)
#   "oa"  = rounded seventh variant (order 18)
#   None  = seven members only
# ጘ's eighth column (GGWAA) and አ's (GLOTTAL WA) are ʷa forms and map
# to order 14 like the rest of the -wa column.
_FAMILY_ROWS = (
    (0x1200, "oa"),   # ሀ
    (0x1208, "wa"),   # ለ
    (0x1210, "wa"),   # ሐ
    (0x1218, "wa"),   # መ
    (0x1220, "wa"),   # ሠ
    (0x1228, "wa"),   # ረ
    (0x1230, "wa"),   # ሰ
    (0x1238, "wa"),   # ሸ
    (0x1240, "oa"),   # ቀ
    (0x1250, None),   # ቐ
    (0x1260, "wa"),   # በ
    (0x1268, "wa"),   # ቨ
    (0x1270, "wa"),   # ተ
    (0x1278, "wa"),   # ቸ
    (0x1280, "oa"),   # ኀ
    (0x1290, "wa"),   # ነ
    (0x1298, "wa"),   # ኘ
    (0x12A0, "wa"),   # አ
    (0x12A8, "oa"),   # ከ
    (0x12B8, None),   # ኸ
    (0x12C8, "oa"),   # ወ
    (0x12D0, None),   # ዐ
    (0x12D8, "wa"),   # ዘ
    (0x12E0, "wa"),   # ዠ
    (0x12E8, "oa"),   # የ
    (0x12F0, "wa"),   # ደ
    (0x12F8, "wa"),   # ዸ
    (0x1300, "wa"),   # ጀ
    (0x1308, "oa"),   # ገ
    (0x1318, "wa"),   # ጘ
    (0x1320, "wa"),   # ጠ
    (0x1328, "wa"),   # ጨ
    (0x1330, "wa"),   # ጰ
    (0x1338, "wa"),   # ጸ
    (0x1340, "oa"),   # ፀ
    (0x1348, "wa"),   # ፈ
    (0x1350, "wa"),   # ፐ
)

_ENV_DATA_DIR = "AMHARIC_METAPHONE_DATA"


class Labiovelar(Enum):
    """How a syllable participates in labiovelar handling."""

    FOURTH_ORDER_WA = "fourth-order-wa"
    OTHER = "other"


@dataclass(frozen=True)
class SyllableInfo:
    """Decomposition of one syllable: family, vocalic order, source char."""

    family: str
    order: int
    char: str


@dataclass(frozen=True)
class ScriptTables:
    """Script data driving the encoder.

    by_char and by_family hold the full codepoint layout (regular rows
    plus the standalone ʷ-series merged into their base families).
    representative maps each family to its homophone-class head; families
    absent from the mapping are their own head.
    """

    by_char: Mapping[str, tuple[str, int]]
    by_family: Mapping[tuple[str, int], str]
    representative: Mapping[str, str]
    vowel_carriers: frozenset[str]
    labiovelar_map: Mapping[str, tuple[str, int]]

    def representative_of(self, family: str) -> str:
        return self.representative.get(family, family)


def _base_layout() -> tuple[dict[str, tuple[str, int]], dict[tuple[str, int], str]]:
    """Codepoint layout of the regular family rows."""
    by_char: dict[str, tuple[str, int]] = {}
    by_family: dict[tuple[str, int], str] = {}
    for base, eighth in _FAMILY_ROWS:
        family = chr(base)
        for offset in range(7):
            ch = chr(base + offset)
            by_char[ch] = (family, offset + 1)
            by_family[(family, offset + 1)] = ch
        if eighth is not None:
            ch = chr(base + 7)
            order = WA if eighth == "wa" else OA
            by_char[ch] = (family, order)
            by_family[(family, order)] = ch
    return by_char, by_family


def data_dir() -> Path:
    """Directory holding the bundled table files.

    The AMHARIC_METAPHONE_DATA environment variable overrides the
    packaged default.
    """
    override = os.environ.get(_ENV_DATA_DIR)
    if override:
        return Path(override)
    return Path(str(resources.files("amharic_metaphone").joinpath("data")))


def _records(path: Path):
    """Yield (line_number, section, tokens) for a table file."""
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise LoadError("table file not found", path=path)
    except UnicodeDecodeError as exc:
        raise LoadError(f"not valid UTF-8: {exc}", path=path)
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            continue
        if section is None:
            raise LoadError("record before any [section] header", path=path, line=lineno)
        yield lineno, section, line.split()


def load_script_tables(path: Path | str) -> ScriptTables:
    """Load homophone classes, the labiovelar map, and vowel carriers.

    The file format is line-oriented UTF-8: '#' starts a comment,
    [section] headers group records, and records are whitespace-separated
    tokens. See data/script_tables.txt for the grammar in use.
    """
    path = Path(path)
    by_char, by_family = _base_layout()
    representative: dict[str, str] = {}
    carriers: set[str] = set()
    labiovelar: dict[str, tuple[str, int]] = {}

    def _family(token: str, lineno: int) -> str:
        info = by_char.get(token)
        if info is None or info[1] != 1:
            raise LoadError(
                f"{token!r} is not a first-order family form", path=path, line=lineno
            )
        return token

    for lineno, section, tokens in _records(path):
        if section == "homophone-classes":
            if len(tokens) < 2:
                raise LoadError("class needs a head and at least one member",
                                path=path, line=lineno)
            head = _family(tokens[0], lineno)
            for member in tokens[1:]:
                member = _family(member, lineno)
                if member in representative or member == head:
                    raise LoadError(f"family {member!r} listed twice",
                                    path=path, line=lineno)
                representative[member] = head
        elif section == "labiovelar-map":
            if len(tokens) != 3:
                raise LoadError("expected: <char> <base family> <order>",
                                path=path, line=lineno)
            ch, base, order_token = tokens
            base = _family(base, lineno)
            try:
                order = int(order_token)
            except ValueError:
                raise LoadError(f"bad order {order_token!r}", path=path, line=lineno)
            if order not in SERIES_ORDERS:
                raise LoadError(f"order {order} is not a ʷ-series order",
                                path=path, line=lineno)
            if ch in by_char or (base, order) in by_family:
                raise LoadError(f"{ch!r} collides with an existing slot",
                                path=path, line=lineno)
            by_char[ch] = (base, order)
            by_family[(base, order)] = ch
            labiovelar[ch] = (base, order)
        elif section == "vowel-carriers":
            if len(tokens) != 1:
                raise LoadError("expected one family per record", path=path, line=lineno)
            carriers.add(_family(tokens[0], lineno))
        else:
            raise LoadError(f"unknown section {section!r}", path=path, line=lineno)

    for member, head in representative.items():
        if head in representative:
            raise LoadError(f"class head {head!r} is itself a member of another class",
                            path=path)
    for family, _ in _FAMILY_ROWS:
        if (chr(family), SADIS) not in by_family:
            raise LoadError(f"family {chr(family)!r} has no sadis member", path=path)
    return ScriptTables(
        by_char=by_char,
        by_family=by_family,
        representative=representative,
        vowel_carriers=frozenset(carriers),
        labiovelar_map=labiovelar,
    )


@lru_cache(maxsize=None)
def _cached_tables(path_str: str) -> ScriptTables:
    return load_script_tables(Path(path_str))


def default_tables() -> ScriptTables:
    """The bundled script tables (or the AMHARIC_METAPHONE_DATA override)."""
    return _cached_tables(str(data_dir() / "script_tables.txt"))


def decompose(ch: str, tables: ScriptTables | None = None) -> SyllableInfo | None:
    """Split one character into (family, order), or None if unsupported."""
    if len(ch) != 1:
        raise ValueError(f"expected a single character, got {ch!r}")
    tables = tables or default_tables()
    info = tables.by_char.get(ch)
    if info is None:
        return None
    return SyllableInfo(family=info[0], order=info[1], char=ch)


def compose(family: str, order: int, tables: ScriptTables | None = None) -> str:
    """Return the syllable at (family, order); InvalidOrderError if empty."""
    tables = tables or default_tables()
    ch = tables.by_family.get((family, order))
    if ch is None:
        raise InvalidOrderError(f"family {family!r} has no member at order {order}")
    return ch


def to_sadis(ch: str, tables: ScriptTables | None = None) -> str:
    """Map a syllable to the vowel-less (sixth-order) member of its family."""
    info = decompose(ch, tables)
    if info is None:
        raise NotEthiopicError(f"{ch!r} is not a supported Ethiopic syllable")
    return compose(info.family, SADIS, tables)


def classify_labiovelar(
    ch: str, tables: ScriptTables | None = None
) -> Labiovelar | None:
    """Labiovelar role of a syllable: ʷa, other ʷ-vowel, or None."""
    info = decompose(ch, tables)
    if info is None:
        raise NotEthiopicError(f"{ch!r} is not a supported Ethiopic syllable")
    if info.order == WA:
        return Labiovelar.FOURTH_ORDER_WA
    if info.order in (11, 13, 15, 16):
        return Labiovelar.OTHER
    return None


def is_vowel_carrier(ch: str, tables: ScriptTables | None = None) -> bool:
    """True for members of the pure-vowel families (አ and ዐ by default)."""
    tables = tables or default_tables()
    info = decompose(ch, tables)
    if info is None:
        raise NotEthiopicError(f"{ch!r} is not a supported Ethiopic syllable")
    return info.family in tables.vowel_carriers


def is_ethiopic(ch: str, tables: ScriptTables | None = None) -> bool:
    """True if the character is a supported Ethiopic syllable."""
    return decompose(ch, tables) is not None
