"""Adjective names for degrees, e.g. ``3-hyper^2-richly-Mahlo``.

The adjectives hyper, richly, utterly, deeply, truly, eternally and vastly
mark the powers ``W^1`` through ``W^7``; an adjective's exponent is the
coefficient of its power and the leading ordinal prefix is the constant::

    hyper-richly-inaccessible       <->  W^2+W
    utterly^2-inaccessible          <->  W^3*2
    3-hyper^2-Mahlo                 <->  W*2+3   (kind Mahlo)

Names are written with adjectives in increasing power.  A name with no
adjectives and prefix 0 is plain ``inaccessible`` / ``Mahlo``.
"""

import enum
from dataclasses import dataclass
from typing import Tuple

from .errors import NotNameable, ParseError
from .metaordinal import mo_normalize
from .ordinal import ONE, ZERO, Ordinal, _wrap, is_natural, nat, ord_parse, to_int

WORDS = ("hyper", "richly", "utterly", "deeply", "truly", "eternally", "vastly")
POWER = {w: i + 1 for i, w in enumerate(WORDS)}

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")


class Kind(enum.Enum):
    INACCESSIBLE = "inaccessible"
    MAHLO = "Mahlo"

    @classmethod
    def parse(cls, text):
        low = text.lower()
        for k in cls:
            if k.value.lower() == low:
                return k
        raise ParseError(f"unknown kind {text!r} (expected inaccessible or Mahlo)")


@dataclass(frozen=True)
class DegreeName:
    constant_prefix: Ordinal = ZERO
    adjectives: Tuple[Tuple[str, Ordinal], ...] = ()
    kind: Kind = Kind.INACCESSIBLE

    def __post_init__(self):
        powers = [POWER[w] for w, _ in self.adjectives]
        if any(a >= b for a, b in zip(powers, powers[1:])):
            raise ValueError("adjectives must appear in strictly increasing power")
        if any(e == ZERO for _, e in self.adjectives):
            raise ValueError("adjective exponents must be at least 1")

    def __str__(self):
        return name_print(self)


def name_to_term(name):
    """The W-term of a name; the kind is carried separately by the name."""
    raw = [(nat(POWER[w]), e) for w, e in name.adjectives]
    return mo_normalize(raw, name.constant_prefix)


def term_to_name(t, kind=Kind.INACCESSIBLE):
    adjectives = []
    for e, c in reversed(t.terms):
        if not is_natural(e) or not 1 <= to_int(e) <= len(WORDS):
            raise NotNameable(e)
        adjectives.append((WORDS[to_int(e) - 1], c))
    return DegreeName(t.constant, tuple(adjectives), kind)


def name_print(name):
    parts = []
    if name.constant_prefix != ZERO:
        parts.append(_wrap(name.constant_prefix))
    for word, e in name.adjectives:
        parts.append(word if e == ONE else f"{word}^{_wrap(e)}")
    parts.append(name.kind.value)
    return "-".join(parts)


def _parse_adjective(part, text, pos):
    word, _, exp = part.translate(_SUPERSCRIPTS).partition("^")
    if word not in POWER:
        # superscripts written without a caret, e.g. "utterly2" from "utterly²"
        stripped = word.rstrip("0123456789")
        if stripped in POWER and part != word:
            return stripped, nat(int(word[len(stripped):]))
        return None
    if not exp:
        if "^" in part:
            raise ParseError("missing exponent", text, pos)
        return word, ONE
    try:
        return word, ord_parse(exp)
    except ParseError as err:
        raise ParseError(f"bad exponent ({err})", text, pos) from None


def name_parse(text):
    parts = text.strip().split("-")
    if not parts[-1]:
        raise ParseError("missing kind suffix", text, len(text))
    kind = Kind.parse(parts[-1])
    prefix = ZERO
    adjectives = []
    pos = 0
    for i, part in enumerate(parts[:-1]):
        adj = _parse_adjective(part, text, pos) if part else None
        if adj is None:
            if i != 0 or not part:
                raise ParseError(f"unknown adjective {part!r}", text, pos)
            try:
                prefix = ord_parse(part)
            except ParseError as err:
                raise ParseError(f"bad ordinal prefix ({err})", text, pos) from None
        else:
            word, e = adj
            if adjectives and POWER[adjectives[-1][0]] >= POWER[word]:
                raise ParseError("adjectives must appear in increasing order hyper < richly < ... < vastly",
                                 text, pos)
            if e != ZERO:  # hyper^0-inaccessible is plain inaccessible
                adjectives.append((word, e))
        pos += len(part) + 1
    return DegreeName(prefix, tuple(adjectives), kind)


def as_name(x):
    return name_parse(x) if isinstance(x, str) else x
