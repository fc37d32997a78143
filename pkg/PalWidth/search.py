'''
Brute force oracles for palindromic length.

    EnumeratePalindromeWords      bounded palindromes u a^e rev(u)
    RestrictedPalindromicLength   shortest product of bounded palindromes
    ExhaustiveL1Check             two palindromes in N(2,2) with trivial
                                  abelian part multiply to the identity
    ClassifiedLengthTable         length 0..3 over a box of N(2,2), from the
                                  classified palindromes only
    N22LengthSweep                the exact procedure over the same box

The bounded search only gives upper bounds; finding nothing proves nothing.
'''
import numpy as np
import pandas as pd
import progressbar as pb

from . import pwexception as BE
from . import messagelogger as ML
from . import certkeys as CK
from . import words as WD
from . import magnus as MG
from . import nil2 as N2
from . import palcalc as PC
from . import decompose as DC

#############################################################################

class SearchBounds:
    '''
    Bounds on the palindromes and the number of factors tried
    '''
    def __init__(self, maxSyllables=CK.DEFAULT_MAX_SYLLABLES, maxExponent=CK.DEFAULT_MAX_EXPONENT,
                 maxFactors=CK.DEFAULT_MAX_FACTORS):
        for name, v in (("max_syllables", maxSyllables), ("max_exponent", maxExponent),
                        ("max_factors", maxFactors)):
            if (not isinstance(v, int) or v < 1):
                raise BE.DomainError("Search bound {:s} must be a positive integer, got {}".format(name, v))
        self.maxSyllables = maxSyllables
        self.maxExponent = maxExponent
        self.maxFactors = maxFactors

    def __repr__(self):
        return "SearchBounds(max_syllables={:d}, max_exponent={:d}, max_factors={:d})".format(
                self.maxSyllables, self.maxExponent, self.maxFactors)

def _Exponents(m):
    return [e for e in range(-m, m+1) if e != 0]

def _Halves(n, h, exps, last=None):
    '''
    Syllable tuples of length h over x1..xn, adjacent generators distinct
    (internal generator)
    '''
    if (h == 0):
        yield ()
        return
    for g in range(1, n+1):
        if (g == last): continue
        for e in exps:
            for rest in _Halves(n, h-1, exps, g):
                yield ((g, e),) + rest

def EnumeratePalindromeWords(ctx, b):
    '''
    All nonempty reduced palindrome words with at most b.maxSyllables
    syllables and exponents in [-b.maxExponent, b.maxExponent], each once.
    A reduced palindrome has an odd number of syllables s1..sh m sh..s1.
    '''
    n = ctx.n
    exps = _Exponents(b.maxExponent)
    for h in range((b.maxSyllables-1)//2 + 1):
        for half in _Halves(n, h, exps):
            lastGen = half[-1][0] if half else None
            for a in range(1, n+1):
                if (a == lastGen): continue
                for alpha in exps:
                    yield WD.WrapReduced(half + ((a, alpha),) + half[::-1])

#############################################################################

class _Arithmetic:
    '''
    Element arithmetic used by the search: exponent sums for r = 1,
    collection for r = 2, truncated series above (internal class)
    '''
    def __init__(self, ctx):
        self.ctx = ctx
        if (ctx.r <= 2):
            self.element = lambda w: N2.FromWordN(w, ctx.n)
            self.mul = N2.Mul
            self.key = (lambda e: e.getAlpha()) if ctx.r == 1 else (lambda e: e.key())
        else:
            self.element = lambda w: MG.EvalWord(w, ctx)
            self.mul = MG.SeriesMul
            self.key = MG.SeriesKey

class PalindromeBall:
    '''
    Products of up to k bounded palindromes, layer by layer. Each group
    element is stored once, with the first (shortest) product reaching it.
    Layers are built on demand and shared between targets.
    '''
    def __init__(self, ctx, bounds):
        self.ctx = ctx
        self.bounds = bounds
        self._arith = _Arithmetic(ctx)
        ar = self._arith
        self.palindromes = [(p, ar.element(p)) for p in EnumeratePalindromeWords(ctx, bounds)]
        self._seen = {ar.key(ar.element(WD.EMPTY))}
        self._layers = [{ar.key(ar.element(WD.EMPTY)): (ar.element(WD.EMPTY), ())}]
        ML.LogMessage("palindrome ball in N({:d},{:d}): {:d} palindromes".
                format(ctx.n, ctx.r, len(self.palindromes)), severity=-1)

    def layer(self, k):
        '''
        Elements first reached with exactly k palindromes: key -> (element, words)
        '''
        ar = self._arith
        while (len(self._layers) <= k):
            prev = self._layers[-1]
            nxt = dict()
            for elem, ws in prev.values():
                for p, pe in self.palindromes:
                    e = ar.mul(elem, pe)
                    key = ar.key(e)
                    if (key in self._seen): continue
                    self._seen.add(key)
                    nxt[key] = (e, ws + (p,))
            self._layers.append(nxt)
            ML.LogMessage("layer {:d}: {:d} new elements".format(len(self._layers)-1, len(nxt)), severity=-1)
        return self._layers[k]

    def shortestProduct(self, w):
        '''
        Shortest tuple of palindromes multiplying to w, or None within the bounds.
        The last factor is matched against the quotients w.p^-1, so only
        layers up to maxFactors-1 are materialized.
        '''
        ar = self._arith
        target = ar.key(ar.element(w))
        if (target in self._layers[0]):
            return ()
        quotients = dict()
        for p, _ in self.palindromes:
            key = ar.key(ar.element(WD.Concat(w, WD.Invert(p))))
            quotients.setdefault(key, p)
        for k in range(1, self.bounds.maxFactors+1):
            layer = self.layer(k-1)
            for key, (_, ws) in layer.items():
                if (key in quotients):
                    return ws + (quotients[key],)
        return None

def RestrictedPalindromicLength(w, ctx, b, ball=None):
    '''
    Minimal k <= b.maxFactors with w a product of k enumerated palindromes,
    as a certificate, or None. The lower bound is the N(2,2) classification
    when it applies, otherwise parity.
    '''
    WD.CheckAlphabet(w, ctx.n)
    if (ball is None):
        ball = PalindromeBall(ctx, b)
    elif (ball.ctx != ctx):
        raise MG.ContextMismatch(ball.ctx, ctx)
    factors = ball.shortestProduct(w)
    if (factors is None):
        return None
    witness = PC.RequireVerified(PC.Factorization(ctx, w, factors), "bounded search")
    if (ctx.n == 2 and ctx.r == 2):
        lower = DC.N22ExactLength(N2.FromWord(w, ctx), target=w).lower
        method = CK.N22_METHOD
    else:
        lower = DC.TrivialityLowerBound(w, ctx)
        method = CK.PARITY_METHOD
    return DC.LengthCertificate(ctx, w, lower, method, witness, exact=(lower == witness.count()))

#############################################################################
# N(2,2) replays

_FORM_KINDS = (DC.TYPE_A, DC.TYPE_B)

def _FormComponents(kind, a, b):
    '''
    (alpha, beta, gamma) arrays of the palindrome forms (internal function)
    '''
    if (kind == DC.TYPE_A):
        return 2*a, b, a*b
    return a, 2*b, a*b

class L1Report:
    '''
    Outcome of ExhaustiveL1Check
    '''
    def __init__(self, bound, pairsChecked, counterexamples):
        self.bound = bound
        self.pairsChecked = pairsChecked
        self.counterexamples = counterexamples

    def holds(self):
        return len(self.counterexamples) == 0

    def __str__(self):
        return "bound={:d} pairs_checked={:d} holds={}".format(self.bound, self.pairsChecked, self.holds())

def ExhaustiveL1Check(B):
    '''
    All pairs of palindrome forms P, Q with parameters in [-B, B] and all
    four type combinations: whenever P.Q has alpha = beta = 0, its gamma
    must vanish. Counterexamples are (kindP, a1, b1, kindQ, a2, b2).
    '''
    if (B < 0):
        raise BE.DomainError("Bound must be >= 0, got {}".format(B))
    r = np.arange(-B, B+1, dtype=np.int64)
    a1, b1, a2, b2 = np.meshgrid(r, r, r, r, indexing='ij')
    counterexamples = []
    pairs = 0
    for kindP in _FORM_KINDS:
        alphaP, betaP, gammaP = _FormComponents(kindP, a1, b1)
        for kindQ in _FORM_KINDS:
            alphaQ, betaQ, gammaQ = _FormComponents(kindQ, a2, b2)
            gamma = gammaP + gammaQ + betaP*alphaQ
            bad = (alphaP + alphaQ == 0) & (betaP + betaQ == 0) & (gamma != 0)
            pairs += a1.size
            for idx in zip(*np.nonzero(bad)):
                counterexamples.append((kindP, int(a1[idx]), int(b1[idx]), kindQ, int(a2[idx]), int(b2[idx])))
    return L1Report(B, pairs, counterexamples)

def DefaultParamBound(boxAB, boxC):
    '''
    Parameter bound that covers a minimal two-palindrome witness of every
    element with |alpha|, |beta| <= boxAB and |gamma| <= boxC
    '''
    # mixed types reach |b| <= 3A + 2C, equal types |b| <= A + A^2 + C
    return 2*boxC + 2*boxAB*boxAB + 3*boxAB

def _BoxFrame(boxAB, boxC, length):
    ab = np.arange(-boxAB, boxAB+1)
    c = np.arange(-boxC, boxC+1)
    alpha, beta, gamma = np.meshgrid(ab, ab, c, indexing='ij')
    return pd.DataFrame({CK.ALPHA_COL: alpha.ravel(), CK.BETA_COL: beta.ravel(),
                         CK.GAMMA_COL: gamma.ravel(), CK.LENGTH_COL: length.ravel()})

def ClassifiedLengthTable(boxAB, boxC, paramBound=None, progress=False):
    '''
    Palindromic length over the box |alpha|, |beta| <= boxAB, |gamma| <= boxC
    of N(2,2), computed only from the classified palindrome forms with
    |a|, |b| <= paramBound: 0 at the identity, 1 on forms, 2 on products
    of two forms, 3 elsewhere. For two forms P.Q the abelian part of Q is
    fixed by the target, so Q is found by one division per type.
    '''
    if (paramBound is None):
        paramBound = DefaultParamBound(boxAB, boxC)
    K = paramBound
    shape = (2*boxAB+1, 2*boxAB+1, 2*boxC+1)
    reach1 = np.zeros(shape, dtype=bool)
    reach2 = np.zeros(shape, dtype=bool)

    r = np.arange(-K, K+1, dtype=np.int64)
    aa, bb = np.meshgrid(r, r, indexing="ij")
    aa = aa.ravel()
    bb = bb.ravel()
    forms = [_FormComponents(kind, aa, bb) for kind in _FORM_KINDS]
    alphaP = np.concatenate([f[0] for f in forms])
    betaP = np.concatenate([f[1] for f in forms])
    gammaP = np.concatenate([f[2] for f in forms])

    inBox = (np.abs(alphaP) <= boxAB) & (np.abs(betaP) <= boxAB) & (np.abs(gammaP) <= boxC)
    reach1[alphaP[inBox]+boxAB, betaP[inBox]+boxAB, gammaP[inBox]+boxC] = True

    targets = [(al, be) for al in range(-boxAB, boxAB+1) for be in range(-boxAB, boxAB+1)]
    if (progress):
        targets = pb.progressbar(targets, redirect_stdout=True)
    for al, be in targets:
        alphaQ = al - alphaP
        betaQ = be - betaP
        # TypeA needs alpha even, TypeB needs beta even
        for even, aQ, bQ in ((alphaQ % 2 == 0, alphaQ//2, betaQ), (betaQ % 2 == 0, alphaQ, betaQ//2)):
            ok = even & (np.abs(aQ) <= K) & (np.abs(bQ) <= K)
            gamma = gammaP + aQ*bQ + betaP*alphaQ
            ok &= np.abs(gamma) <= boxC
            reach2[al+boxAB, be+boxAB, gamma[ok]+boxC] = True

    length = np.full(shape, 3, dtype=np.int64)
    length[reach2] = 2
    length[reach1] = 1
    length[boxAB, boxAB, boxC] = 0
    ML.LogMessage("classified table: {:d} points, parameter bound {:d}".format(length.size, K), severity=-1)
    return _BoxFrame(boxAB, boxC, length)

def N22LengthSweep(boxAB, boxC, progress=False):
    '''
    n22 exact length over the box, with the verification flag of each witness
    '''
    points = [(al, be, ga) for al in range(-boxAB, boxAB+1) for be in range(-boxAB, boxAB+1)
              for ga in range(-boxC, boxC+1)]
    if (progress):
        points = pb.progressbar(points, redirect_stdout=True)
    rows = {CK.ALPHA_COL: [], CK.BETA_COL: [], CK.GAMMA_COL: [], CK.LENGTH_COL: [], CK.VERIFIED_KEY: []}
    for al, be, ga in points:
        cert = DC.N22ExactLength(N2.N22Element(al, be, ga))
        rows[CK.ALPHA_COL].append(al)
        rows[CK.BETA_COL].append(be)
        rows[CK.GAMMA_COL].append(ga)
        rows[CK.LENGTH_COL].append(cert.upper)
        rows[CK.VERIFIED_KEY].append(cert.witness.verified)
    return pd.DataFrame(rows)
