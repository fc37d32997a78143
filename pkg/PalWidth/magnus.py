'''
Exact arithmetic in N(n,r) through truncated non-commutative power series.

A generator x_i is sent to 1 + X_i, and x_i^e to the truncated binomial
series sum_k C(e,k) X_i^k (for e = -1 the alternating geometric series).
Monomials of degree > r are discarded, so two words are equal in N(n,r)
exactly when their series are equal, and a word lies in the k-th term of
the lower central series exactly when its series has no terms of degree
1..k-1. All coefficients are Python integers.
'''
import functools

from . import pwexception as BE
from . import words as WD

#############################################################################

class ContextMismatch(BE.DomainError):
    '''
    Series from different groups were combined
    '''
    def __init__(self, ctxA, ctxB):
        BE.DomainError.__init__(self, "Context mismatch: {} versus {}".format(ctxA, ctxB))

class DegreeError(BE.DomainError):
    '''
    Degree or lower central series index out of range
    '''
    def __init__(self, cause):
        BE.DomainError.__init__(self, "Degree out of range: " + cause)

def MonomialKey(m):
    '''
    Canonical monomial order: length first, then lexicographic
    '''
    return (len(m), m)

class Series:
    '''
    Truncated non-commutative integer power series: dict monomial -> coefficient.
    A monomial is a tuple of generator indices, () being the unit monomial.
    Zero coefficients are never stored. Immutable.
    '''
    def __init__(self, terms, ctx):
        clean = dict()
        for m, c in terms.items():
            if (c == 0): continue
            if (len(m) > ctx.r):
                raise DegreeError("monomial {} exceeds class {:d}".format(m, ctx.r))
            clean[tuple(m)] = int(c)
        self._terms = clean
        self.ctx = ctx
        self._key = None

    def coefficient(self, m):
        return self._terms.get(tuple(m), 0)

    def items(self):
        '''
        (monomial, coefficient) pairs in canonical monomial order
        '''
        return sorted(self._terms.items(), key=lambda t: MonomialKey(t[0]))

    def degrees(self):
        return sorted(set(len(m) for m in self._terms))

    def isZero(self):
        return len(self._terms) == 0

    def isGroupLike(self):
        '''
        True if the unit coefficient is 1, as for every image of a group element
        '''
        return self._terms.get((), 0) == 1

    def key(self):
        '''
        Hashable canonical form
        '''
        if (self._key is None):
            self._key = tuple(self.items())
        return self._key

    def _check(self, other):
        if (self.ctx != other.ctx):
            raise ContextMismatch(self.ctx, other.ctx)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return (isinstance(other, Series) and self.ctx == other.ctx
                and self._terms == other._terms)

    def __hash__(self):
        return hash(self.key())

    def __mul__(self, other):
        return SeriesMul(self, other)

    def __str__(self):
        return FormatSeries(self)

    def __repr__(self):
        return "Series('{:s}', {})".format(FormatSeries(self), self.ctx)

#############################################################################

def _WrapSeries(terms, ctx):
    '''
    Series from a clean dict without checks (internal function)
    '''
    s = object.__new__(Series)
    s._terms = terms
    s.ctx = ctx
    s._key = None
    return s

def UnitSeries(ctx):
    '''
    The series 1 (image of the identity)
    '''
    return _WrapSeries({(): 1}, ctx)

def ZeroSeries(ctx):
    return _WrapSeries(dict(), ctx)

def SeriesMul(a, b):
    '''
    Truncated product a.b: monomials of degree > r are discarded
    '''
    a._check(b)
    r = a.ctx.r
    bTerms = sorted(b._terms.items(), key=lambda t: len(t[0]))
    out = dict()
    for m1, c1 in a._terms.items():
        room = r - len(m1)
        for m2, c2 in bTerms:
            if (len(m2) > room): break
            m = m1 + m2
            v = out.get(m, 0) + c1*c2
            if (v == 0):
                out.pop(m, None)
            else:
                out[m] = v
    return _WrapSeries(out, a.ctx)

@functools.lru_cache(maxsize=4096)
def _GeneratorPowerTerms(i, e, r):
    '''
    Terms of the truncated series of x_i^e: C(e,k) X_i^k for k <= r
    (internal function)
    '''
    terms = dict()
    c = 1
    for k in range(r+1):
        if (k > 0):
            c = c*(e-k+1)//k
        if (c == 0): break
        terms[(i,)*k] = c
    return terms

def GeneratorSeries(i, e, ctx):
    '''
    Series of x_i^e
    '''
    return _WrapSeries(dict(_GeneratorPowerTerms(i, e, ctx.r)), ctx)

def EvalWord(w, ctx):
    '''
    Series of a word in N(n,r). Multiplicative; the empty word maps to 1.
    '''
    WD.CheckAlphabet(w, ctx.n)
    s = UnitSeries(ctx)
    for g, e in w:
        s = SeriesMul(s, GeneratorSeries(g, e, ctx))
    return s

def EqualInGroup(a, b, ctx):
    '''
    True if the words a and b are the same element of N(n,r)
    '''
    return EvalWord(a, ctx) == EvalWord(b, ctx)

def IsIdentity(w, ctx):
    return EvalWord(w, ctx).key() == (((), 1),)

def HomogeneousComponent(s, k):
    '''
    Degree k part of a series
    '''
    if (k < 0 or k > s.ctx.r):
        raise DegreeError("degree {:d} not in 0..{:d}".format(k, s.ctx.r))
    return _WrapSeries({m: c for m, c in s._terms.items() if len(m) == k}, s.ctx)

def IsInGamma(w, k, ctx):
    '''
    True if w lies in the k-th term of the lower central series of N(n,r),
    i.e. its series has no terms of degree 1..k-1
    '''
    if (k < 1 or k > ctx.r+1):
        raise DegreeError("lower central series index {:d} not in 1..{:d}".format(k, ctx.r+1))
    s = EvalWord(w, ctx)
    return all(len(m) == 0 or len(m) >= k for m in s._terms)

def IsCentral(w, ctx):
    '''
    True if w commutes with every generator in N(n,r)
    '''
    if (ctx.r == 1):
        return True
    s = EvalWord(w, ctx)
    for i in range(1, ctx.n+1):
        x = GeneratorSeries(i, 1, ctx)
        if (SeriesMul(s, x) != SeriesMul(x, s)):
            return False
    return True

def ProjectSeries(s, r):
    '''
    Image of a series under N(n,R) -> N(n,r), r <= R (truncation)
    '''
    if (r < 1 or r > s.ctx.r):
        raise DegreeError("projection class {:d} not in 1..{:d}".format(r, s.ctx.r))
    ctx = s.ctx.withClass(r)
    return _WrapSeries({m: c for m, c in s._terms.items() if len(m) <= r}, ctx)

def SeriesKey(s):
    return s.key()

def FormatMonomial(m):
    return "".join("X{:d}".format(i) for i in m)

def FormatSeries(s):
    '''
    Canonical text, e.g. "1 + 2*X1 - 1*X1X2"; the zero series prints as "0"
    '''
    items = s.items()
    if (not items):
        return "0"
    parts = []
    for idx, (m, c) in enumerate(items):
        body = str(abs(c)) if len(m) == 0 else "{:d}*{:s}".format(abs(c), FormatMonomial(m))
        if (idx == 0):
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
