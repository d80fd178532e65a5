import random
from functools import cmp_to_key

import pytest
from hypothesis import given, settings

from degcalc.errors import NotNameable, ParseError
from degcalc.metaordinal import mo_cmp, mo_parse, mo_print
from degcalc.names import POWER, WORDS, DegreeName, Kind, name_parse, name_print, name_to_term, term_to_name
from degcalc.ordinal import OMEGA, ONE, nat, ord_cmp, ord_print
from degcalc.sampling import random_ordinal
from strategies import metas

ALL_ADJ = "hyper-richly-utterly-deeply-truly-eternally-vastly"

# the eleven displayed degree equivalences; the last row is instantiated at alpha = 5 and w
TABLE = [
    ("W", "hyper-inaccessible"),
    ("W^2", "richly-inaccessible"),
    ("W^2+W", "hyper-richly-inaccessible"),
    ("W^3", "utterly-inaccessible"),
    ("W^3+W^2", "richly-utterly-inaccessible"),
    ("W^3*2", "utterly^2-inaccessible"),
    ("W^4", "deeply-inaccessible"),
    ("W^5", "truly-inaccessible"),
    ("W^6", "eternally-inaccessible"),
    ("W^7", "vastly-inaccessible"),
    ("W^7+W^6+W^5+W^4+W^3+W^2+W+5", f"5-{ALL_ADJ}-inaccessible"),
    ("W^7+W^6+W^5+W^4+W^3+W^2+W+w", f"w-{ALL_ADJ}-inaccessible"),
]


@pytest.mark.parametrize("term,name", TABLE)
def test_table_both_directions(term, name):
    assert name_print(term_to_name(mo_parse(term))) == name
    assert mo_print(name_to_term(name_parse(name))) == term


def test_name_examples():
    assert mo_print(name_to_term(name_parse("utterly²-inaccessible"))) == "W^3*2"
    mahlo = name_parse("3-hyper^2-Mahlo")
    assert mahlo.kind is Kind.MAHLO
    assert mo_print(name_to_term(mahlo)) == "W*2+3"
    assert name_print(term_to_name(mo_parse("W*2+3"), Kind.MAHLO)) == "3-hyper^2-Mahlo"
    assert name_print(term_to_name(mo_parse("0"))) == "inaccessible"
    assert name_print(term_to_name(mo_parse("7"))) == "7-inaccessible"
    assert name_parse("hyper^0-inaccessible") == name_parse("inaccessible")


def test_not_nameable():
    with pytest.raises(NotNameable) as info:
        term_to_name(mo_parse("W^w"))
    assert info.value.exponent == OMEGA
    with pytest.raises(NotNameable):
        term_to_name(mo_parse("W^8+W"))


@pytest.mark.parametrize("bad", [
    "richly-hyper-inaccessible", "hyper-hyper-inaccessible", "super-inaccessible", "hyper-",
    "hyper^-inaccessible", "hyper-inaccessible-cardinal", "w+-inaccessible", "hyper-3-inaccessible",
])
def test_bad_names(bad):
    with pytest.raises(ParseError):
        name_parse(bad)


def test_decreasing_adjectives_rejected_by_constructor():
    with pytest.raises(ValueError):
        DegreeName(adjectives=(("richly", ONE), ("hyper", ONE)))


def _random_name(rng):
    words = sorted(rng.sample(WORDS, rng.randint(0, len(WORDS))), key=POWER.get)
    adjectives = []
    for w in words:
        e = random_ordinal(rng, 1, 1)
        adjectives.append((w, e if e else ONE))
    prefix = random_ordinal(rng, 1, 1) if rng.random() < 0.6 else nat(0)
    return DegreeName(prefix, tuple(adjectives), rng.choice(list(Kind)))


def test_random_names_round_trip():
    rng = random.Random(7)
    for _ in range(1000):
        name = _random_name(rng)
        assert term_to_name(name_to_term(name), name.kind) == name
        assert name_parse(name_print(name)) == name


def test_name_order_agrees_with_term_order():
    rng = random.Random(11)
    names = [_random_name(rng) for _ in range(400)]
    for a, b in zip(names, names[1:]):
        ka, kb = _name_key(a), _name_key(b)
        expected = (ka > kb) - (ka < kb)
        assert mo_cmp(name_to_term(a), name_to_term(b)) == expected


def _name_key(name):
    """Independent comparison key: exponents by descending power, then the prefix."""
    key = []
    for p in range(len(WORDS), 0, -1):
        e = dict((POWER[w], e) for w, e in name.adjectives).get(p)
        key.append(cmp_to_key(ord_cmp)(e if e is not None else nat(0)))
    key.append(cmp_to_key(ord_cmp)(name.constant_prefix))
    return key


@settings(max_examples=300)
@given(metas)
def test_nameable_terms_round_trip(t):
    try:
        name = term_to_name(t)
    except NotNameable as err:
        assert any(e == err.exponent for e, _ in t.terms)
        return
    assert name_to_term(name) == t
    assert mo_parse(mo_print(name_to_term(name_parse(name_print(name))))) == t
    assert ord_print(name.constant_prefix) == ord_print(t.constant)
