'''
Exponent normal form for N(n,2):

    g = x1^a1 ... xn^an . prod_{1 <= j < i <= n} [xi,xj]^b_ij

The commutators [xi,xj] are central, so collection only has to account
for the swap x_i^a x_j^b = x_j^b x_i^a [x_i,x_j]^(ab). That gives the closed
formulas used here:

    (a, b) . (a', b')  = (a + a', b + b' + a_i a'_j)       (i > j)
    (a, b)^-1          = (-a, -b + a_i a_j)                (i > j)
'''
import numpy as np

from . import pwexception as BE
from . import words as WD

#############################################################################

class RankMismatch(BE.DomainError):
    '''
    Elements of different rank combined
    '''
    def __init__(self, n1, n2):
        BE.DomainError.__init__(self, "Rank mismatch: {:d} versus {:d}".format(n1, n2))

class ClassError(BE.DomainError):
    '''
    Normal form requested outside class 2
    '''
    def __init__(self, ctx):
        BE.DomainError.__init__(self, "Exponent normal form needs class r=2, got {}".format(ctx))

def _LowerOuter(a, b):
    '''
    Strictly lower triangular part of the outer product a_i b_j (internal function)
    '''
    return np.tril(np.outer(a, b), -1)

class Nil2Element:
    '''
    Element (alpha, beta) of N(n,2). alpha is a length n vector, beta a
    strictly lower triangular n x n array, beta[i-1, j-1] being the
    exponent of [x_i, x_j]. Entries are Python integers (object arrays).
    '''
    def __init__(self, alpha, beta=None):
        n = len(alpha)
        if (n < 1):
            raise BE.DomainError("Rank must be >= 1")
        a = np.empty(n, dtype=object)
        a[:] = [int(v) for v in alpha]
        b = np.zeros((n, n), dtype=object)
        if (beta is not None):
            if isinstance(beta, dict):
                for (i, j), v in beta.items():
                    if not (1 <= j < i <= n):
                        raise BE.DomainError("Commutator index ({:d},{:d}) needs 1 <= j < i <= {:d}".
                                format(i, j, n))
                    b[i-1, j-1] = int(v)
            else:
                for i in range(n):
                    for j in range(n):
                        v = int(beta[i][j])
                        if (v != 0 and j >= i):
                            raise BE.DomainError("Beta must be strictly lower triangular")
                        b[i, j] = v
        self._set(n, a, b)

    def _set(self, n, a, b):
        a.flags.writeable = False
        b.flags.writeable = False
        self.n = n
        self._alpha = a
        self._beta = b
        self._key = None

    def getAlpha(self):
        return tuple(int(v) for v in self._alpha)

    def betaEntry(self, i, j):
        '''
        Exponent of [x_i, x_j], 1 <= j < i <= n
        '''
        return int(self._beta[i-1, j-1])

    def betaDict(self):
        '''
        Nonzero exponents keyed on (i, j), 1-based
        '''
        n = self.n
        return {(i+1, j+1): int(self._beta[i, j])
                for i in range(n) for j in range(i) if self._beta[i, j] != 0}

    def key(self):
        if (self._key is None):
            n = self.n
            self._key = (self.getAlpha(), tuple(int(self._beta[i, j]) for i in range(n) for j in range(i)))
        return self._key

    def isIdentity(self):
        return not any(self.key()[0]) and not any(self.key()[1])

    def __eq__(self, other):
        return isinstance(other, Nil2Element) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __mul__(self, other):
        return Mul(self, other)

    def __str__(self):
        return FormatNil2(self)

    def __repr__(self):
        return "Nil2Element('{:s}')".format(FormatNil2(self))

def _WrapArrays(a, b):
    '''
    Element from arrays, without checks (internal function)
    '''
    e = object.__new__(Nil2Element)
    e._set(len(a), a, b)
    return e

def Identity(n):
    return Nil2Element([0]*n)

def N22Element(alpha, beta, gamma):
    '''
    Element x1^alpha x2^beta [x2,x1]^gamma of N(2,2)
    '''
    return Nil2Element((alpha, beta), {(2, 1): gamma})

def N22Components(e):
    '''
    (alpha, beta, gamma) of an element of N(2,2)
    '''
    if (e.n != 2):
        raise RankMismatch(e.n, 2)
    return (e.getAlpha()[0], e.getAlpha()[1], e.betaEntry(2, 1))

#############################################################################

def FromWordN(w, n):
    '''
    Collect a word into normal form in N(n,2)
    '''
    WD.CheckAlphabet(w, n)
    alpha = [0]*n
    beta = [[0]*n for _ in range(n)]
    for g, e in w:
        j = g-1
        for i in range(j+1, n):
            if (alpha[i]):
                beta[i][j] += alpha[i]*e
        alpha[j] += e
    a = np.empty(n, dtype=object)
    a[:] = alpha
    b = np.empty((n, n), dtype=object)
    for i in range(n):
        b[i, :] = beta[i]
    return _WrapArrays(a, b)

def FromWord(w, ctx):
    '''
    Collect a word into normal form; ctx must have class 2
    '''
    if (ctx.r != 2):
        raise ClassError(ctx)
    return FromWordN(w, ctx.n)

def ToWord(e):
    '''
    Canonical spelling x1^a1 ... xn^an prod [x_i, x_j]^b_ij, each central
    factor spelled [x_i^b, x_j] (equal to [x_i, x_j]^b in class 2)
    '''
    parts = [WD.Generator(i+1, a) for i, a in enumerate(e.getAlpha()) if a != 0]
    n = e.n
    for i in range(1, n):
        for j in range(i):
            b = int(e._beta[i, j])
            if (b != 0):
                parts.append(WD.CommutatorWord(WD.Generator(i+1, b), WD.Generator(j+1)))
    return WD.ConcatAll(parts)

def Mul(a, b):
    '''
    Product in N(n,2)
    '''
    if (a.n != b.n):
        raise RankMismatch(a.n, b.n)
    return _WrapArrays(a._alpha + b._alpha, a._beta + b._beta + _LowerOuter(a._alpha, b._alpha))

def Inv(e):
    '''
    Inverse in N(n,2)
    '''
    return _WrapArrays(-e._alpha, -e._beta + _LowerOuter(e._alpha, e._alpha))

def Power(e, m):
    '''
    e^m by repeated squaring
    '''
    if (m < 0):
        e = Inv(e)
        m = -m
    out = Identity(e.n)
    base = e
    while (m):
        if (m & 1):
            out = Mul(out, base)
        base = Mul(base, base)
        m >>= 1
    return out

def Abelianization(e):
    '''
    Image in N(n,1): the exponent vector alpha
    '''
    return e.getAlpha()

def ParityVector(w, n):
    '''
    Exponent sums mod 2 (the hat map onto Z_2^n)
    '''
    return tuple(s % 2 for s in WD.ExponentSums(w, n))

def CommutatorGrouping(e):
    '''
    Words v_j = x_n^b_nj ... x_(j+1)^b_(j+1)j, j = 1..n, so that the
    commutator part of e equals [v_1, x_1] ... [v_n, x_n] (v_n is empty)
    '''
    n = e.n
    out = []
    for j in range(n):
        out.append(WD.Word(tuple((i+1, int(e._beta[i, j])) for i in range(n-1, j, -1))))
    return out

def FormatNil2(e):
    '''
    Normal form text "x1^a1 ... xn^an [x2,x1]^b21 ...", zero exponents omitted
    '''
    parts = [WD.FormatSyllable(i+1, a) for i, a in enumerate(e.getAlpha()) if a != 0]
    n = e.n
    for i in range(1, n):
        for j in range(i):
            b = int(e._beta[i, j])
            if (b == 0): continue
            c = "[x{:d},x{:d}]".format(i+1, j+1)
            parts.append(c if b == 1 else "{:s}^{:d}".format(c, b))
    if (not parts):
        return "1"
    return " ".join(parts)
