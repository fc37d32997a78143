import random

import pytest
from hypothesis import given, settings, strategies as st

from PalWidth import words as WD
from PalWidth import magnus as MG
from PalWidth import nil2 as N2
from strategies import words, palindromes, nil2Elements

X1 = WD.Generator(1)
X2 = WD.Generator(2)
X3 = WD.Generator(3)

def test_from_word_examples(ctx22):
    e = N2.FromWord(X1*X2*X1*X2, ctx22)
    assert e.getAlpha() == (2, 2) and e.betaEntry(2, 1) == 1
    e = N2.FromWord(WD.CommutatorWord(X2, X1), ctx22)
    assert e.getAlpha() == (0, 0) and e.betaEntry(2, 1) == 1
    e = N2.FromWord(WD.Invert(X1), ctx22)
    assert e == N2.N22Element(-1, 0, 0)

def test_from_word_needs_class_2():
    with pytest.raises(N2.ClassError):
        N2.FromWord(X1, WD.GroupContext(2, 3))

def test_to_word(ctx22):
    e = N2.N22Element(2, 2, 1)
    expected = WD.ConcatAll([WD.Generator(1, 2), WD.Generator(2, 2), WD.CommutatorWord(X2, X1)])
    assert N2.ToWord(e) == expected
    assert N2.ToWord(N2.Identity(3)).isEmpty()

def test_mul_and_inv(ctx22):
    e = N2.Mul(N2.FromWord(X2, ctx22), N2.FromWord(X1, ctx22))
    assert e == N2.N22Element(1, 1, 1)
    e = N2.Inv(N2.FromWord(X1*X2, ctx22))
    assert e == N2.N22Element(-1, -1, 1)
    assert N2.Inv(N2.Identity(2)).isIdentity()
    with pytest.raises(N2.RankMismatch):
        N2.Mul(N2.Identity(2), N2.Identity(3))

def test_element_validation():
    with pytest.raises(Exception):
        N2.Nil2Element([1, 2], {(1, 2): 1})
    with pytest.raises(Exception):
        N2.Nil2Element([1, 2], [[0, 1], [0, 0]])
    e = N2.Nil2Element([1, 2, 3], [[0, 0, 0], [4, 0, 0], [5, 6, 0]])
    assert e.betaDict() == {(2, 1): 4, (3, 1): 5, (3, 2): 6}

def test_format():
    assert N2.FormatNil2(N2.N22Element(2, 2, 1)) == "x1^2 x2^2 [x2,x1]"
    assert N2.FormatNil2(N2.N22Element(0, 0, -3)) == "[x2,x1]^-3"
    assert N2.FormatNil2(N2.Identity(3)) == "1"
    assert str(N2.Nil2Element([1, 0, -1], {(3, 1): 2})) == "x1 x3^-1 [x3,x1]^2"

def test_parity_vector():
    assert N2.ParityVector(X1*WD.Generator(2, 2)*X3, 3) == (1, 0, 1)
    assert N2.ParityVector(WD.EMPTY, 3) == (0, 0, 0)

def test_commutator_grouping():
    e = N2.Nil2Element([1, 2, 3], {(2, 1): 4, (3, 1): 5, (3, 2): 6})
    v = N2.CommutatorGrouping(e)
    assert v[0] == WD.Word(((3, 5), (2, 4)))
    assert v[1] == WD.Generator(3, 6)
    assert v[2].isEmpty()

def test_power():
    e = N2.N22Element(1, 2, 3)
    assert N2.Power(e, 3) == e*e*e
    assert N2.Power(e, -2) == N2.Inv(e*e)
    assert N2.Power(e, 0).isIdentity()

@given(nil2Elements(3))
def test_to_word_round_trip(e):
    assert N2.FromWordN(N2.ToWord(e), 3) == e

@given(nil2Elements(4, 8))
def test_grouping_spells_commutator_part(e):
    n = e.n
    v = N2.CommutatorGrouping(e)
    word = WD.ConcatAll([WD.CommutatorWord(v[j], WD.Generator(j+1)) for j in range(n)])
    assert N2.FromWordN(word, n) == N2.Nil2Element([0]*n, e.betaDict())

@settings(max_examples=100)
@given(words(3, 8), words(3, 8))
def test_oracle_equivalence(u, v):
    ctx = WD.GroupContext(3, 2)
    eu = N2.FromWord(u, ctx)
    ev = N2.FromWord(v, ctx)
    assert N2.FromWord(WD.Concat(u, v), ctx) == N2.Mul(eu, ev)
    assert N2.FromWord(WD.Invert(u), ctx) == N2.Inv(eu)
    assert MG.EqualInGroup(u, v, ctx) == (eu == ev)
    assert MG.EqualInGroup(N2.ToWord(eu), u, ctx)

@given(words(3, 8))
def test_equal_words_collect_equally(u):
    # a different spelling of the same element
    ctx = WD.GroupContext(3, 2)
    w = WD.ConcatAll([u, WD.CommutatorWord(u, X1), WD.Invert(WD.CommutatorWord(u, X1))])
    assert N2.FromWord(w, ctx) == N2.FromWord(u, ctx)

@given(words(3, 6), words(3, 6))
def test_parity_homomorphism(u, v):
    pu = N2.ParityVector(u, 3)
    pv = N2.ParityVector(v, 3)
    assert N2.ParityVector(WD.Concat(u, v), 3) == tuple((a + b) % 2 for a, b in zip(pu, pv))

@given(palindromes(3))
def test_palindrome_parity(p):
    assert sum(N2.ParityVector(p, 3)) <= 1

@given(words(3, 8))
def test_gamma2_iff_trivial_abelianization(w):
    ctx = WD.GroupContext(3, 2)
    e = N2.FromWord(w, ctx)
    assert (not any(N2.Abelianization(e))) == MG.IsInGamma(w, 2, ctx)

def test_seeded_random_agreement():
    rng = random.Random(7)
    ctx = WD.GroupContext(3, 2)
    for _ in range(50):
        u = WD.Word(tuple((rng.randint(1, 3), rng.choice((-2, -1, 1, 2))) for _ in range(rng.randint(0, 10))))
        e = N2.FromWord(u, ctx)
        assert MG.EvalWord(u, ctx) == MG.EvalWord(N2.ToWord(e), ctx)
