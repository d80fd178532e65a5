import random

import pytest
from hypothesis import given, settings

from degcalc.errors import NotInBase, OutOfFragment, OutOfRange
from degcalc.metaordinal import from_ordinal, mo_admissible_at, mo_cmp, mo_parse, mo_print, mo_succ
from degcalc.model import (
    MultOmega, VeblenImage, apply_I, base_class, class_least, class_member, class_of, diagonal_const_family,
    diagonal_level_family, exact_degree, iterate_I, least, least_above, member, oracle_member_const,
    probe_diagonal, probe_limit_point, validate_rules,
)
from degcalc.ordinal import OMEGA, ONE, ZERO, fund_seq, nat, omega_pow, ord_cmp, ord_parse, ord_succ, veblen
from degcalc.sampling import cantor_ordinal, fragment_term, random_limit, random_ordinal
from strategies import fragment, limits

P, M = ord_parse, mo_parse
EPS0 = veblen(ONE, ZERO)

ANCHORS = [("0", "w"), ("1", "w^2"), ("2", "w^3"), ("W", "phi(1,0)"), ("W+1", "phi(1,w)"), ("W*2", "phi(2,0)")]


@pytest.mark.parametrize("t,expected", ANCHORS)
def test_least_anchors(t, expected):
    k = least(M(t))
    assert k == P(expected)
    assert member(M(t), k)
    for i in range(8):
        assert not member(M(t), fund_seq(k, i))


def test_class_examples():
    assert base_class() == MultOmega(ONE)
    assert class_member(base_class(), OMEGA) and not class_member(base_class(), nat(5))
    assert class_of(M("0")) == MultOmega(ONE)
    assert class_of(M("W")) == VeblenImage(ONE, ZERO)
    assert class_of(M("W*w+3")) == VeblenImage(OMEGA, nat(3))
    with pytest.raises(OutOfFragment):
        class_of(M("W^2"))
    with pytest.raises(OutOfFragment):
        member(M("W^2+1"), EPS0)


def test_operator_examples():
    assert apply_I(MultOmega(ONE)) == MultOmega(nat(2))
    assert apply_I(MultOmega(nat(3))) == MultOmega(nat(4))
    assert apply_I(VeblenImage(ONE, ZERO)) == VeblenImage(ONE, ONE)
    assert iterate_I(MultOmega(ONE), nat(2)) == MultOmega(nat(3))
    assert iterate_I(MultOmega(ONE), OMEGA) == MultOmega(OMEGA)
    x = VeblenImage(nat(2), OMEGA)
    assert iterate_I(x, ZERO) == x
    assert diagonal_const_family() == VeblenImage(ONE, ZERO)
    assert diagonal_level_family(ONE) == VeblenImage(nat(2), ZERO)
    assert diagonal_level_family(nat(2)) == VeblenImage(nat(3), ZERO)


def test_operator_spot_checks():
    # limit points of the epsilon numbers: eps_w is one, eps_0 and eps_5 are not
    eps = VeblenImage(ONE, ZERO)
    assert probe_limit_point(eps, veblen(ONE, OMEGA))
    assert not probe_limit_point(eps, EPS0)
    assert not probe_limit_point(eps, veblen(ONE, nat(5)))
    w_iter = iterate_I(MultOmega(ONE), OMEGA)
    assert class_member(w_iter, omega_pow(OMEGA)) and not class_member(w_iter, omega_pow(nat(5)))
    const_family = lambda al: iterate_I(base_class(), al)
    assert probe_diagonal(const_family, EPS0) and not probe_diagonal(const_family, omega_pow(OMEGA))
    level1 = lambda al: VeblenImage(ONE, al)
    assert probe_diagonal(level1, veblen(nat(2), ZERO)) and not probe_diagonal(level1, EPS0)


def test_member_examples():
    assert member(M("2"), P("w^3"))
    assert member(M("W+1"), P("phi(1,w)"))
    assert not member(M("W+2"), P("phi(1,w)"))
    assert not member(M("W"), omega_pow(OMEGA))
    assert member(M("W"), veblen(nat(2), ZERO))  # higher-level points are fixed points too
    assert not member(M("W"), P("phi(1,0)*2"))


def test_exact_degree_examples():
    assert exact_degree(P("w^2")) == M("1")
    assert exact_degree(EPS0) == M("W")
    assert exact_degree(P("phi(1,w)")) == M("W+1")
    assert exact_degree(P("phi(2,phi(1,0))")) == M("W*2+phi(1,0)")
    assert exact_degree(P("w^w")) == M("w")
    assert exact_degree(P("w^(w+3)")) == M("w+3")
    for bad in ("0", "w+1", "5"):
        with pytest.raises(NotInBase):
            exact_degree(P(bad))


def test_oracle_examples():
    assert oracle_member_const(1, P("w^2"))
    assert not oracle_member_const(2, P("w^2"))
    assert not oracle_member_const(0, nat(7))
    with pytest.raises(OutOfRange):
        oracle_member_const(7, P("w^2"))
    with pytest.raises(OutOfRange):
        oracle_member_const(1, P("w^8"))


def test_oracle_agrees_with_member():
    rng = random.Random(2024)
    for _ in range(500):
        k = cantor_ordinal(rng, 6)
        for n in range(5):
            assert oracle_member_const(n, k) == member(from_ordinal(nat(n)), k), (n, str(k))


def test_rules_validate():
    report = validate_rules(random.Random(5), 200)
    assert len(report) == 6
    for rule, (agree, total, bad) in report.items():
        assert agree == total == 200, (rule, bad)


# ------------------------------------------------------------ lemma analogues

def _point(rng, t):
    """A random ordinal near the class of ``t``: often a member, sometimes just above one."""
    k = least_above(class_of(t), random_ordinal(rng, 2, 2))
    if rng.random() < 0.3:
        k = ord_succ(k) if rng.random() < 0.2 else k + omega_pow(random_ordinal(rng, 1, 1))
    return k


def test_downward_monotonicity():
    rng = random.Random(31)
    checked = hits = 0
    while checked < 1000:
        s, t = fragment_term(rng), fragment_term(rng)
        if mo_cmp(s, t) == 0:
            continue
        if mo_cmp(s, t) > 0:
            s, t = t, s
        k = _point(rng, t)
        if not mo_admissible_at(s, k):
            continue
        checked += 1
        if member(t, k):
            hits += 1
            assert member(s, k), (mo_print(s), mo_print(t), str(k))
    assert hits > 300


def _base_point(rng):
    if rng.random() < 0.4:
        return random_limit(rng, 2, 2)
    return _point(rng, fragment_term(rng)) if rng.random() < 0.8 else least(fragment_term(rng))


def test_no_self_exceeding():
    rng = random.Random(37)
    for _ in range(1000):
        k = _base_point(rng)
        if ord_cmp(k, ZERO) == 0 or not class_member(base_class(), k):
            k = random_limit(rng)
        assert not member(from_ordinal(ord_succ(k)), k), str(k)


def test_exact_degree_coherence():
    rng = random.Random(41)
    checked = 0
    while checked < 1000:
        k = _base_point(rng)
        if not class_member(base_class(), k):
            continue
        checked += 1
        d = exact_degree(k)
        assert member(d, k) and not member(mo_succ(d), k), (str(k), mo_print(d))


def test_least_coherence():
    rng = random.Random(43)
    for _ in range(50):
        t = fragment_term(rng)
        k = least(t)
        assert member(t, k)
        below = [fund_seq(k, i) for i in range(8)] + [random_ordinal(rng, 2, 2) for _ in range(30)]
        for x in below:
            if ord_cmp(x, k) < 0:
                assert not member(t, x), (mo_print(t), str(x))


@settings(max_examples=200)
@given(fragment)
def test_least_is_class_least(t):
    assert least(t) == class_least(class_of(t))
    assert least_above(class_of(t), ZERO) == least(t)


@settings(max_examples=200)
@given(limits)
def test_veblen_images_are_omega_power_fixed_points(k):
    x = VeblenImage(ONE, ZERO)
    y = least_above(x, k)
    assert class_member(x, y)
    assert omega_pow(y) == y
    for c in (ONE, nat(3), OMEGA, k):
        assert class_member(MultOmega(c), y)
