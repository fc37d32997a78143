'''
Palindrome decompositions of elements of free nilpotent groups and
palindromic length certificates.

    N(n,1)   at most n palindromes (x_i^a_i), exact length from parity
    N(2,2)   at most 3 palindromes, exact length 0..3 by classification
    N(n,2)   at most 3(n-1) palindromes
    N(n,r)   at most 3n palindromes via g = prod [u_i, x_i] x_i^a_i

The last form is built class by class: the residual of each class is a
product of commutators with the generators, found by solving an integer
system over the left-normed brackets.
'''
import itertools
import functools

from sympy.core.intfunc import igcdex

from . import pwexception as BE
from . import messagelogger as ML
from . import certkeys as CK
from . import words as WD
from . import magnus as MG
from . import nil2 as N2
from . import palcalc as PC
from . import hermite as HN

#############################################################################

class MembershipError(BE.DomainError):
    '''
    Element not in the required term of the lower central series
    '''
    def __init__(self, cause):
        BE.DomainError.__init__(self, "Membership precondition failed: " + cause)

TYPE_A="TypeA"
TYPE_B="TypeB"

class PalindromeFormN22:
    '''
    Palindrome of N(2,2) = <x, y>, z = [y, x]:
        TypeA (a, b):  x^2a y^b z^ab,  spelled x^a y^b x^a
        TypeB (a, b):  x^a y^2b z^ab,  spelled y^b x^a y^b
    '''
    def __init__(self, kind, a, b):
        if (kind not in (TYPE_A, TYPE_B)):
            raise BE.DomainError("Unknown palindrome type '{}'".format(kind))
        self.kind = kind
        self.a = int(a)
        self.b = int(b)

    def components(self):
        '''
        (alpha, beta, gamma) of the element
        '''
        a, b = self.a, self.b
        if (self.kind == TYPE_A):
            return (2*a, b, a*b)
        return (a, 2*b, a*b)

    def element(self):
        return N2.N22Element(*self.components())

    def word(self):
        '''
        Witness palindrome word
        '''
        if (self.kind == TYPE_A):
            return WD.Word(((1, self.a), (2, self.b), (1, self.a)))
        return WD.Word(((2, self.b), (1, self.a), (2, self.b)))

    def maxParameter(self):
        return max(abs(self.a), abs(self.b))

    def __eq__(self, other):
        return (isinstance(other, PalindromeFormN22) and
                (self.kind, self.a, self.b) == (other.kind, other.a, other.b))

    def __hash__(self):
        return hash((self.kind, self.a, self.b))

    def __repr__(self):
        return "PalindromeFormN22({:s}, a={:d}, b={:d})".format(self.kind, self.a, self.b)

class LengthCertificate:
    '''
    Bracket lower <= l_P(target) <= upper; the upper bound is witnessed by a
    verified factorization with exactly 'upper' factors. 'exact' is only
    claimed by the exact procedures, and then lower == upper.
    '''
    def __init__(self, ctx, target, lower, lowerMethod, witness, exact=False):
        if (lowerMethod not in CK.LOWER_METHODS):
            raise BE.DomainError("Unknown lower bound method '{}'".format(lowerMethod))
        if (not witness.verified):
            raise BE.InvariantBreach("certificate witness not verified: " + witness.reason)
        upper = witness.count()
        if (lower > upper):
            raise BE.InvariantBreach("lower bound {:d} exceeds upper bound {:d} for {:s}".
                    format(lower, upper, WD.FormatWord(target)))
        if (exact and lower != upper):
            raise BE.InvariantBreach("exact length claimed with bracket {:d}..{:d}".format(lower, upper))
        self.exact = exact
        self.ctx = ctx
        self.target = target
        self.lower = lower
        self.lowerMethod = lowerMethod
        self.upper = upper
        self.witness = witness

    def __str__(self):
        if (self.exact):
            return "l_P = {:d}".format(self.upper)
        return "{:d} <= l_P <= {:d}".format(self.lower, self.upper)

#############################################################################
# Abelian case and parity

def AbelianDecompose(w, n):
    '''
    Factors x_i^a_i (zero exponents omitted): at most n palindromes in N(n,1)
    '''
    ctx = WD.GroupContext(n, 1)
    sums = WD.ExponentSums(w, n)
    factors = [WD.Generator(i+1, a) for i, a in enumerate(sums) if a != 0]
    return PC.RequireVerified(PC.Factorization(ctx, w, factors), "abelian decomposition")

def AbelianExactDecompose(w, n):
    '''
    Shortest palindrome factorization in N(n,1): max(1, #odd exponents)
    factors for a nontrivial element. The even coordinates are absorbed
    into the first palindrome u x_a^e rev(u).
    '''
    ctx = WD.GroupContext(n, 1)
    sums = WD.ExponentSums(w, n)
    odd = [i for i, a in enumerate(sums) if a % 2 != 0]
    nonzero = [i for i, a in enumerate(sums) if a != 0]
    factors = []
    if (nonzero):
        first = odd[0] if odd else nonzero[0]
        half = WD.Word(tuple((i+1, sums[i]//2) for i in nonzero if i not in odd and i != first))
        factors.append(WD.MakePalindrome(half, first+1, sums[first]))
        factors += [WD.Generator(i+1, sums[i]) for i in odd if i != first]
    return PC.RequireVerified(PC.Factorization(ctx, w, factors), "abelian decomposition")

def ParityLowerBound(w, ctx):
    '''
    Number of odd exponent sums. Every palindrome has at most one, so this
    bounds l_P from below in every N(n,r).
    '''
    return sum(N2.ParityVector(w, ctx.n))

def TrivialityLowerBound(w, ctx):
    '''
    Parity bound, raised to 1 for a nontrivial element
    '''
    lower = ParityLowerBound(w, ctx)
    if (lower == 0 and not PC.EqualInContext(w, WD.EMPTY, ctx)):
        lower = 1
    return lower

#############################################################################
# N(2,2)

def _RequireRank2(e):
    if (e.n != 2):
        raise N2.RankMismatch(e.n, 2)

def N22PalindromeForm(e):
    '''
    The palindrome form of e, or None if e is not a palindrome.
    e = x^a y^b z^c is a palindrome iff ab is even and 2c = ab.
    '''
    _RequireRank2(e)
    alpha, beta, gamma = N2.N22Components(e)
    if ((alpha*beta) % 2 != 0 or 2*gamma != alpha*beta):
        return None
    if (alpha % 2 == 0):
        return PalindromeFormN22(TYPE_A, alpha//2, beta)
    return PalindromeFormN22(TYPE_B, alpha, beta//2)

def _SolveLinear(p, q, c):
    '''
    Integer (s, t) with p s + q t = c and the kernel step (ds, dt),
    or None (internal function)
    '''
    if (p == 0 and q == 0):
        return ((0, 0), (0, 0)) if c == 0 else None
    g = igcdex(p, q)
    x, y, d = int(g[0]), int(g[1]), int(g[2])
    if (c % d != 0):
        return None
    k = c//d
    return ((x*k, y*k), (q//d, -(p//d)))

def _BestShift(affine):
    '''
    Integer k minimizing max |c0 + c1 k| over the affine functions
    (internal function). The optimum of this convex piecewise linear
    function lies next to a breakpoint.
    '''
    candidates = {0}
    funcs = [(c0, c1) for c0, c1 in affine]
    for (c0, c1) in funcs:
        if (c1 != 0):
            candidates.update((-c0//c1, -(-(-c0)//c1)))
    for (c0, c1), (d0, d1) in itertools.combinations(funcs, 2):
        for sign in (1, -1):
            den = c1 - sign*d1
            if (den != 0):
                num = -(c0 - sign*d0)
                candidates.update((num//den, -(-num//den)))
    return min(sorted(candidates, key=abs),
               key=lambda k: max(abs(c0 + c1*k) for c0, c1 in funcs))

def _CasePair(kind, alpha, beta, gamma):
    '''
    Solve one of the four two-palindrome case systems (internal function).
    Returns (P, Q) or None.
    '''
    if (kind == (TYPE_A, TYPE_A)):
        if (alpha % 2 != 0): return None
        A = alpha//2
        # A b1 - beta a1 = gamma - A beta; a2 = A - a1, b2 = beta - b1
        sol = _SolveLinear(A, -beta, gamma - A*beta)
        if (sol is None): return None
        (b1, a1), (db, da) = sol
        params = lambda k: (a1 + da*k, b1 + db*k, A - a1 - da*k, beta - b1 - db*k)
    elif (kind == (TYPE_B, TYPE_B)):
        if (beta % 2 != 0): return None
        B = beta//2
        # alpha b1 - B a1 = gamma - alpha B; a2 = alpha - a1, b2 = B - b1
        sol = _SolveLinear(alpha, -B, gamma - alpha*B)
        if (sol is None): return None
        (b1, a1), (db, da) = sol
        params = lambda k: (a1 + da*k, b1 + db*k, alpha - a1 - da*k, B - b1 - db*k)
    elif (kind == (TYPE_A, TYPE_B)):
        # beta a1 + alpha b2 = alpha beta - gamma; a2 = alpha - 2 a1, b1 = beta - 2 b2
        sol = _SolveLinear(beta, alpha, alpha*beta - gamma)
        if (sol is None): return None
        (a1, b2), (da, db) = sol
        params = lambda k: (a1 + da*k, beta - 2*(b2 + db*k), alpha - 2*(a1 + da*k), b2 + db*k)
    else:
        # alpha b1 + beta a2 = gamma; a1 = alpha - 2 a2, b2 = beta - 2 b1
        sol = _SolveLinear(alpha, beta, gamma)
        if (sol is None): return None
        (b1, a2), (db, da) = sol
        params = lambda k: (alpha - 2*(a2 + da*k), b1 + db*k, a2 + da*k, beta - 2*(b1 + db*k))

    p0 = params(0)
    p1 = params(1)
    k = _BestShift([(v0, v1 - v0) for v0, v1 in zip(p0, p1)])
    a1, b1, a2, b2 = params(k)
    return (PalindromeFormN22(kind[0], a1, b1), PalindromeFormN22(kind[1], a2, b2))

_CASES = ((TYPE_A, TYPE_A), (TYPE_A, TYPE_B), (TYPE_B, TYPE_A), (TYPE_B, TYPE_B))

def N22TwoPalindromeTest(e):
    '''
    A pair of palindrome forms (P, Q) with P.Q = e, or None if e is not a
    product of two palindromes. With e = x^a y^b z^c the cases give
        AA: a even and gcd(a/2, b) | c
        BB: b even and gcd(a, b/2) | c
        AB, BA: gcd(a, b) | c
    (gcd(0,0) = 0 divides only 0). Among the solvable cases the pair with
    the smallest largest exponent is returned.
    '''
    _RequireRank2(e)
    alpha, beta, gamma = N2.N22Components(e)
    best = None
    for kind in _CASES:
        pair = _CasePair(kind, alpha, beta, gamma)
        if (pair is None): continue
        if (N2.Mul(pair[0].element(), pair[1].element()) != e):
            raise BE.InvariantBreach("two-palindrome case {} gives a wrong product for {}".
                    format(kind, (alpha, beta, gamma)))
        size = max(pair[0].maxParameter(), pair[1].maxParameter())
        if (best is None or size < best[0]):
            best = (size, pair)
    return None if best is None else best[1]

_N22 = WD.GroupContext(2, 2)

def N22Decompose(e, target=None):
    '''
    At most 3 palindromes for e = x^a y^b z^c in N(2,2):
        x^a y^(b-c) x^a . x^(-a-2) . x y^c x
    A palindrome e gives its single witness. Empty factors are dropped.
    '''
    _RequireRank2(e)
    if (target is None):
        target = N2.ToWord(e)
    form = N22PalindromeForm(e)
    if (form is not None):
        factors = [form.word()]
    else:
        alpha, beta, gamma = N2.N22Components(e)
        factors = [WD.Word(((1, alpha), (2, beta-gamma), (1, alpha))),
                   WD.Generator(1, -alpha-2),
                   WD.Word(((1, 1), (2, gamma), (1, 1)))]
    factors = [p for p in factors if not p.isEmpty()]
    return PC.RequireVerified(PC.Factorization(_N22, target, factors), "N(2,2) decomposition")

def N22ExactLength(e, target=None):
    '''
    Exact palindromic length of e in N(2,2), with witness
    '''
    _RequireRank2(e)
    if (target is None):
        target = N2.ToWord(e)
    if (e.isIdentity()):
        factors = []
    else:
        form = N22PalindromeForm(e)
        if (form is not None):
            factors = [form.word()]
        else:
            pair = N22TwoPalindromeTest(e)
            if (pair is not None):
                factors = [p.word() for p in pair]
            else:
                factors = list(N22Decompose(e, target).factors)
                if (len(factors) != 3):
                    raise BE.InvariantBreach("element {} outside two palindromes decomposed into {:d}".
                            format(N2.N22Components(e), len(factors)))
    factors = [p for p in factors if not p.isEmpty()]
    witness = PC.RequireVerified(PC.Factorization(_N22, target, factors), "N(2,2) exact length")
    return LengthCertificate(_N22, target, witness.count(), CK.N22_METHOD, witness, exact=True)

#############################################################################
# N(n,2)

def _CommutatorBlock(u, i, alpha):
    '''
    Palindromes for [u, x_i] x_i^alpha, at most 3 (internal function)
    '''
    if (u.isEmpty()):
        return [WD.Generator(i, alpha)] if alpha != 0 else []
    return PC.CommutatorPalindromeFactorization(u, WD.Generator(i), beta=alpha, a=i)

def NN2Decompose(e, target=None):
    '''
    At most 3(n-1) palindromes for e in N(n,2): blocks [v_j, x_j] x_j^a_j
    for j <= n-2 (3 each), and the N(2,2) decomposition on <x_(n-1), x_n>.
    '''
    n = e.n
    if (n == 2):
        return N22Decompose(e, target)
    ctx = WD.GroupContext(n, 2)
    if (target is None):
        target = N2.ToWord(e)
    alpha = e.getAlpha()
    factors = []
    if (n == 1):
        factors = [WD.Generator(1, alpha[0])]
    else:
        v = N2.CommutatorGrouping(e)
        for j in range(1, n-1):
            factors += _CommutatorBlock(v[j-1], j, alpha[j-1])
        last = N2.N22Element(alpha[n-2], alpha[n-1], e.betaEntry(n, n-1))
        sub = N22Decompose(last)
        factors += [WD.RelabelWord(p, {1: n-1, 2: n}) for p in sub.factors]
    factors = [p for p in factors if not p.isEmpty()]
    return PC.RequireVerified(PC.Factorization(ctx, target, factors), "N(n,2) decomposition")

#############################################################################
# N(n,r)

@functools.lru_cache(maxsize=64)
def _BracketColumns(n, k):
    '''
    Left-normed brackets [x_i1, ..., x_ik] with i1 > i2, and the degree k
    parts of their series (internal function, cached)
    '''
    ctx = WD.GroupContext(n, k)
    brackets = []
    for idx in itertools.product(range(n, 0, -1), repeat=k):
        if (idx[0] <= idx[1]): continue
        word = WD.LeftNormedWord([WD.Generator(i) for i in idx])
        comp = MG.HomogeneousComponent(MG.EvalWord(word, ctx), k)
        brackets.append((idx, comp))
    return tuple(brackets)

def LayerDecompose(d, k, ctx):
    '''
    Words a_1..a_n (in the (k-1)-th term of the lower central series) with
    d = [a_1, x_1] ... [a_n, x_n] in N(n,k), for d in the k-th term.
    The degree k part of d's series is written as an integer combination of
    left-normed brackets; brackets ending in x_i are collected into a_i.
    '''
    if (ctx.r != k or k < 2):
        raise MembershipError("layer step needs class r = k >= 2, got k={:d} in {}".format(k, ctx))
    n = ctx.n
    s = MG.EvalWord(d, ctx)
    low = [m for m in s.items() if 0 < len(m[0]) < k]
    if (low):
        raise MembershipError("{:s} has terms of degree < {:d}".format(WD.FormatWord(d), k))

    a = [WD.EMPTY]*n
    if (not s.isZero() and len(s) > 1):
        target = MG.HomogeneousComponent(s, k)
        brackets = _BracketColumns(n, k)
        rows = sorted(set(m for _, comp in brackets for m, _ in comp.items()) |
                      set(m for m, _ in target.items()), key=MG.MonomialKey)
        A = [[comp.coefficient(m) for _, comp in brackets] for m in rows]
        b = [[target.coefficient(m)] for m in rows]
        try:
            coef = HN.SolveIntegerSystem(A, b)
        except HN.NoIntegerSolution as exc:
            raise BE.InvariantBreach("layer system unsolvable: " + str(exc))

        for (idx, _), c in zip(brackets, coef):
            if (c == 0): continue
            piece = WD.LeftNormedWord([WD.Generator(idx[0], c)] + [WD.Generator(i) for i in idx[1:-1]])
            last = idx[-1]
            a[last-1] = WD.Concat(a[last-1], piece)

    check = WD.ConcatAll([WD.CommutatorWord(a[i], WD.Generator(i+1)) for i in range(n)])
    if (not MG.EqualInGroup(check, d, ctx)):
        raise BE.InvariantBreach("layer identity fails for {:s} in class {:d}".format(WD.FormatWord(d), k))
    return a

def CommutatorFormWord(u, alpha):
    '''
    The word [u_1, x_1] x_1^a_1 ... [u_n, x_n] x_n^a_n
    '''
    parts = []
    for i, (ui, ai) in enumerate(zip(u, alpha)):
        parts.append(WD.CommutatorWord(ui, WD.Generator(i+1)))
        parts.append(WD.Generator(i+1, ai))
    return WD.ConcatAll(parts)

def CommutatorFormDecompose(w, ctx):
    '''
    Words u_i and integers a_i with w = prod [u_i, x_i] x_i^a_i in N(n,r),
    by induction on the class: class 1 is the abelianization; for class c
    the class c-1 form is lifted, its residual d (in the c-th term) is split
    by LayerDecompose and merged as u_i <- u_i a_i, the [a_i, x_i] being central.
    '''
    n = ctx.n
    alpha = WD.ExponentSums(w, n)
    u = [WD.EMPTY]*n
    with ML.LogLevel("commutator form"):
        for c in range(2, ctx.r+1):
            cctx = ctx.withClass(c)
            lift = CommutatorFormWord(u, alpha)
            d = WD.Concat(WD.Invert(lift), w)
            a = LayerDecompose(d, c, cctx)
            u = [WD.Concat(ui, ai) for ui, ai in zip(u, a)]
            ML.LogMessage("class {:d}: residual of {:d} syllables, |u_i| = {}".
                    format(c, len(d), [len(ui) for ui in u]), severity=-1)
    if (ctx.r > 1 and not MG.EqualInGroup(CommutatorFormWord(u, alpha), w, ctx)):
        raise BE.InvariantBreach("commutator form does not reproduce {:s}".format(WD.FormatWord(w)))
    return u, list(alpha)

def NNRDecompose(w, ctx):
    '''
    At most 3n palindromes for w in N(n,r): the commutator form, each block
    [u_i, x_i] x_i^a_i written as 3 palindromes
    '''
    if (ctx.r == 1):
        return AbelianDecompose(w, ctx.n)
    u, alpha = CommutatorFormDecompose(w, ctx)
    factors = []
    for i in range(ctx.n):
        factors += _CommutatorBlock(u[i], i+1, alpha[i])
    factors = [p for p in factors if not p.isEmpty()]
    return PC.RequireVerified(PC.Factorization(ctx, w, factors), "N(n,r) decomposition")

#############################################################################
# Dispatchers

def DecomposeAny(w, ctx):
    '''
    Best constructive decomposition for the context
    '''
    WD.CheckAlphabet(w, ctx.n)
    if (ctx.r == 1):
        return AbelianDecompose(w, ctx.n)
    if (ctx.r == 2):
        return NN2Decompose(N2.FromWord(w, ctx), target=w)
    return NNRDecompose(w, ctx)

def ExactOrBracketLength(w, ctx):
    '''
    Exact length in N(n,1) and N(2,2); elsewhere the bracket
    [parity bound, constructive upper bound]
    '''
    WD.CheckAlphabet(w, ctx.n)
    if (ctx.r == 1):
        witness = AbelianExactDecompose(w, ctx.n)
        return LengthCertificate(ctx, w, TrivialityLowerBound(w, ctx), CK.PARITY_METHOD, witness, exact=True)
    if (ctx.n == 2 and ctx.r == 2):
        return N22ExactLength(N2.FromWord(w, ctx), target=w)
    witness = DecomposeAny(w, ctx)
    return LengthCertificate(ctx, w, TrivialityLowerBound(w, ctx), CK.PARITY_METHOD, witness)
