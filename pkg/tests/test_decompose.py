import random

import pytest
from hypothesis import given, settings

from PalWidth import pwexception as BE
from PalWidth import certkeys as CK
from PalWidth import words as WD
from PalWidth import magnus as MG
from PalWidth import nil2 as N2
from PalWidth import palcalc as PC
from PalWidth import decompose as DC
from strategies import words, nil2Elements, n22Elements

X1 = WD.Generator(1)
X2 = WD.Generator(2)
X3 = WD.Generator(3)

def W(*syl):
    return WD.Word(syl)

def test_abelian_decompose():
    w = W((1, 3), (2, -2), (1, 1))
    f = DC.AbelianDecompose(w, 3)
    assert f.verified
    assert list(f.factors) == [WD.Generator(1, 4), WD.Generator(2, -2)]
    assert DC.AbelianDecompose(WD.EMPTY, 2).count() == 0

def test_abelian_exact():
    c1 = WD.GroupContext(3, 1)
    assert DC.AbelianExactDecompose(W((1, 2), (2, 4)), 3).count() == 1
    assert DC.AbelianExactDecompose(W((1, 1), (2, 1), (3, 1)), 3).count() == 3
    f = DC.AbelianExactDecompose(W((1, 2), (2, 1)), 3)
    assert list(f.factors) == [W((1, 1), (2, 1), (1, 1))]
    assert DC.AbelianExactDecompose(WD.CommutatorWord(X1, X2), 3).count() == 0
    assert DC.TrivialityLowerBound(W((1, 2)), c1) == 1

def test_parity_bounds(ctx22):
    assert DC.ParityLowerBound(W((1, 1), (2, 1)), ctx22) == 2
    assert DC.ParityLowerBound(WD.CommutatorWord(X2, X1), ctx22) == 0
    assert DC.TrivialityLowerBound(WD.CommutatorWord(X2, X1), ctx22) == 1
    assert DC.TrivialityLowerBound(WD.EMPTY, ctx22) == 0

def test_palindrome_form():
    form = DC.N22PalindromeForm(N2.N22Element(2, 3, 3))
    assert form == DC.PalindromeFormN22(DC.TYPE_A, 1, 3)
    assert form.word() == W((1, 1), (2, 3), (1, 1))
    assert DC.N22PalindromeForm(N2.N22Element(0, 0, 1)) is None
    form = DC.N22PalindromeForm(N2.N22Element(1, 2, 1))
    assert form == DC.PalindromeFormN22(DC.TYPE_B, 1, 1)
    assert form.word() == W((2, 1), (1, 1), (2, 1))
    assert DC.N22PalindromeForm(N2.N22Element(1, 1, 0)) is None

def test_palindrome_form_needs_rank_2():
    with pytest.raises(N2.RankMismatch):
        DC.N22PalindromeForm(N2.Identity(3))

def test_form_validation():
    with pytest.raises(BE.DomainError):
        DC.PalindromeFormN22("TypeC", 1, 1)

def test_two_palindrome_test():
    assert DC.N22TwoPalindromeTest(N2.N22Element(0, 0, 1)) is None
    assert DC.N22TwoPalindromeTest(N2.N22Element(0, 0, -4)) is None
    for comps in ((0, 0, 0), (2, 1, 5), (1, 1, 0), (3, 5, 7)):
        e = N2.N22Element(*comps)
        p, q = DC.N22TwoPalindromeTest(e)
        assert N2.Mul(p.element(), q.element()) == e

def test_exact_length_examples():
    cases = {(0, 0, 1): 3, (2, 3, 3): 1, (0, 0, 0): 0, (1, 1, 0): 2, (2, 2, 1): 2}
    for comps, length in cases.items():
        cert = DC.N22ExactLength(N2.N22Element(*comps))
        assert cert.exact
        assert cert.lower == cert.upper == length
        assert cert.lowerMethod == CK.N22_METHOD

def test_n22_decompose_commutator():
    f = DC.N22Decompose(N2.N22Element(0, 0, 1))
    assert list(f.factors) == [WD.Generator(2, -1), WD.Generator(1, -2), W((1, 1), (2, 1), (1, 1))]
    assert f.target == WD.CommutatorWord(X2, X1)
    assert DC.N22Decompose(N2.N22Element(0, 0, 0)).count() == 0

def test_certificate_rules(ctx22):
    z = WD.CommutatorWord(X2, X1)
    f = DC.N22Decompose(N2.N22Element(0, 0, 1))
    with pytest.raises(BE.InvariantBreach):
        DC.LengthCertificate(ctx22, z, 4, CK.PARITY_METHOD, f)
    with pytest.raises(BE.InvariantBreach):
        DC.LengthCertificate(ctx22, z, 1, CK.PARITY_METHOD, f, exact=True)
    with pytest.raises(BE.InvariantBreach):
        DC.LengthCertificate(ctx22, z, 1, CK.PARITY_METHOD, PC.Factorization(ctx22, z, f.factors))
    with pytest.raises(BE.DomainError):
        DC.LengthCertificate(ctx22, z, 1, "guess", f)
    cert = DC.LengthCertificate(ctx22, z, 1, CK.PARITY_METHOD, f)
    assert not cert.exact and str(cert) == "1 <= l_P <= 3"

@settings(max_examples=200)
@given(n22Elements())
def test_n22_decompose_at_most_three(e):
    f = DC.N22Decompose(e)
    assert f.verified and f.count() <= 3

@settings(max_examples=200)
@given(n22Elements(6))
def test_exact_length_classification(e):
    cert = DC.N22ExactLength(e)
    alpha, beta, gamma = N2.N22Components(e)
    palindrome = (alpha*beta) % 2 == 0 and 2*gamma == alpha*beta
    if (e.isIdentity()):
        assert cert.upper == 0
    elif (palindrome):
        assert cert.upper == 1
    elif (DC.N22TwoPalindromeTest(e) is not None):
        assert cert.upper == 2
    else:
        assert cert.upper == 3
        assert alpha == 0 or beta == 0 or gamma % _Gcd(alpha, beta) != 0

def _Gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)

@settings(max_examples=100)
@given(nil2Elements(3, 6))
def test_nn2_decompose(e):
    f = DC.NN2Decompose(e)
    assert f.verified and f.count() <= 6

@given(nil2Elements(5, 4))
def test_nn2_decompose_rank5(e):
    f = DC.NN2Decompose(e)
    assert f.verified and f.count() <= 12

def test_nn2_rank1():
    e = N2.Nil2Element([5])
    assert list(DC.NN2Decompose(e).factors) == [WD.Generator(1, 5)]

def test_layer_class3(ctx23):
    d = WD.LeftNormedWord([X2, X1, X1])
    a = DC.LayerDecompose(d, 3, ctx23)
    assert a[0] == WD.CommutatorWord(X2, X1)
    assert a[1].isEmpty()

def test_layer_class2(ctx22):
    d = WD.Power(WD.CommutatorWord(X2, X1), 4)
    a = DC.LayerDecompose(d, 2, ctx22)
    assert a == [WD.Generator(2, 4), WD.EMPTY]

def test_layer_trivial_and_errors(ctx22, ctx23):
    assert DC.LayerDecompose(WD.EMPTY, 2, ctx22) == [WD.EMPTY, WD.EMPTY]
    with pytest.raises(DC.MembershipError):
        DC.LayerDecompose(X1, 2, ctx22)
    with pytest.raises(DC.MembershipError):
        DC.LayerDecompose(WD.CommutatorWord(X2, X1), 3, ctx23)
    with pytest.raises(DC.MembershipError):
        DC.LayerDecompose(WD.CommutatorWord(X2, X1), 2, ctx23)

@settings(max_examples=50)
@given(words(3, 6))
def test_commutator_form_class2(w):
    ctx = WD.GroupContext(3, 2)
    u, alpha = DC.CommutatorFormDecompose(w, ctx)
    e = N2.FromWord(w, ctx)
    assert u == N2.CommutatorGrouping(e)
    assert tuple(alpha) == e.getAlpha()

@settings(max_examples=30)
@given(words(2, 6))
def test_commutator_form_class4(w):
    ctx = WD.GroupContext(2, 4)
    u, alpha = DC.CommutatorFormDecompose(w, ctx)
    assert MG.EqualInGroup(DC.CommutatorFormWord(u, alpha), w, ctx)

def test_nnr_decompose_seeded():
    rng = random.Random(11)
    for n, r in ((2, 3), (3, 3), (2, 4)):
        ctx = WD.GroupContext(n, r)
        for _ in range(10):
            w = WD.Word(tuple((rng.randint(1, n), rng.choice((-2, -1, 1, 2))) for _ in range(rng.randint(0, 10))))
            f = DC.NNRDecompose(w, ctx)
            assert f.verified and f.count() <= 3*n

def test_decompose_any(ctx22):
    f = DC.DecomposeAny(WD.CommutatorWord(X2, X1), ctx22)
    assert f.count() == 3
    f = DC.DecomposeAny(W((1, 1), (2, 1)), WD.GroupContext(2, 1))
    assert f.count() == 2
    with pytest.raises(WD.GeneratorRangeError):
        DC.DecomposeAny(X3, ctx22)

def test_exact_or_bracket():
    cert = DC.ExactOrBracketLength(W((1, 2), (2, 1)), WD.GroupContext(2, 1))
    assert cert.exact and cert.upper == 1
    cert = DC.ExactOrBracketLength(WD.CommutatorWord(X2, X1), WD.GroupContext(2, 2))
    assert cert.exact and cert.upper == 3
    cert = DC.ExactOrBracketLength(X1*X2*X3, WD.GroupContext(3, 3))
    assert not cert.exact
    assert cert.lower == cert.upper == 3
    assert cert.lowerMethod == CK.PARITY_METHOD
    cert = DC.ExactOrBracketLength(WD.EMPTY, WD.GroupContext(3, 2))
    assert cert.lower == cert.upper == 0
