'''
Palindrome calculus: constructors that turn commutator and conjugation
identities into explicit palindrome factorizations, and the verifier that
certifies a factorization g = p1 p2 ... pk in N(n,r).

The constructors work on words only. Their outputs hold in the free
group, hence in every N(n,r), and every constructor checks its own
output at word level before returning it.
'''
from . import pwexception as BE
from . import words as WD
from . import magnus as MG
from . import nil2 as N2
from . import certkeys as CK

#############################################################################

class NotPalindromeError(BE.DomainError):
    '''
    A palindrome was required
    '''
    def __init__(self, cause):
        BE.DomainError.__init__(self, "Not a palindrome: " + cause)

class PreconditionError(BE.DomainError):
    '''
    Constructor precondition violated
    '''
    def __init__(self, cause):
        BE.DomainError.__init__(self, "Precondition failed: " + cause)

def _RequirePalindrome(w, what):
    if (not WD.IsPalindromeWord(w)):
        raise NotPalindromeError("{:s} = {:s}".format(what, WD.FormatWord(w)))

def _CheckTelescopes(factors, target, what):
    '''
    Factor product must equal the target as a reduced word (internal function)
    '''
    if (WD.ConcatAll(factors) != target):
        raise BE.InvariantBreach("{:s} does not multiply to {:s}".format(what, WD.FormatWord(target)))

#############################################################################

class Factorization:
    '''
    A target word and an ordered list of palindrome factors.
    'verified' is only ever set by VerifyFactorization; 'reason' holds the
    diagnostic of the last verification ("" when verified).
    '''
    def __init__(self, ctx, target, factors):
        self.ctx = ctx
        self.target = target
        self.factors = tuple(factors)
        self.verified = False
        self.reason = "not verified"

    def count(self):
        return len(self.factors)

    def product(self):
        return WD.ConcatAll(self.factors)

    def _stamped(self, verified, reason):
        f = Factorization(self.ctx, self.target, self.factors)
        f.verified = verified
        f.reason = reason
        return f

    def __str__(self):
        return "{:s} = {:s}".format(WD.FormatWord(self.target),
                " . ".join("(" + WD.FormatWord(p) + ")" for p in self.factors) or "1")

def EqualInContext(a, b, ctx, oracle=CK.AUTO_ORACLE):
    '''
    Group equality with a choice of exact oracle: truncated series
    (any class) or class 2 collection (r <= 2). "auto" takes collection
    when r <= 2.
    '''
    if (oracle == CK.AUTO_ORACLE):
        oracle = CK.NIL2_ORACLE if ctx.r <= 2 else CK.MAGNUS_ORACLE
    if (oracle == CK.MAGNUS_ORACLE):
        return MG.EqualInGroup(a, b, ctx)
    if (oracle == CK.NIL2_ORACLE):
        if (ctx.r == 1):
            return WD.ExponentSums(a, ctx.n) == WD.ExponentSums(b, ctx.n)
        if (ctx.r == 2):
            return N2.FromWordN(a, ctx.n) == N2.FromWordN(b, ctx.n)
        raise N2.ClassError(ctx)
    raise BE.DomainError("Unknown oracle '{:s}'".format(oracle))

def VerifyFactorization(f, oracle=CK.AUTO_ORACLE):
    '''
    Returns a copy of f with the verified flag set if every factor is a
    palindrome word and the product equals the target in N(n,r).
    Otherwise the flag is false and 'reason' says what failed.
    '''
    n = f.ctx.n
    words = (f.target,) + f.factors
    for idx, w in enumerate(words):
        if (w.maxGenerator() > n):
            what = "target" if idx == 0 else "factor {:d}".format(idx-1)
            return f._stamped(False, "{:s} uses a generator outside x1..x{:d}".format(what, n))
    for idx, p in enumerate(f.factors):
        if (not WD.IsPalindromeWord(p)):
            return f._stamped(False, "factor {:d} not a palindrome".format(idx))
    if (not EqualInContext(f.product(), f.target, f.ctx, oracle)):
        return f._stamped(False, "product mismatch")
    return f._stamped(True, "")

def RequireVerified(f, what, oracle=CK.AUTO_ORACLE):
    '''
    Verify a factorization built by this package; failure is a bug
    '''
    f = VerifyFactorization(f, oracle)
    if (not f.verified):
        raise BE.InvariantBreach("{:s}: {:s} ({:s})".format(what, f.reason, str(f)))
    return f

#############################################################################

def PowerPalindrome(p, m):
    '''
    p^m for a palindrome p; again a palindrome
    '''
    _RequirePalindrome(p, "p")
    return WD.Power(p, m)

def ConjugateFactorization(u, ps):
    '''
    Palindromes whose product is u^-1 (p1 ... pk) u.
    k even: k factors, alternately u^-1 p rev(u^-1) and rev(u) p u.
    k = 1: the two factors u^-1 p rev(u^-1), rev(u) u.
    k odd > 1: the k-1 alternating factors, then u^-1 rev(u^-1), rev(u) pk u.
    '''
    ps = list(ps)
    for idx, p in enumerate(ps):
        _RequirePalindrome(p, "factor {:d}".format(idx))
    uInv = WD.Invert(u)
    uRev = WD.Reverse(u)
    uInvRev = WD.Reverse(uInv)

    k = len(ps)
    if (k == 1):
        factors = [WD.ConcatAll((uInv, ps[0], uInvRev)), WD.Concat(uRev, u)]
    else:
        even = ps if k % 2 == 0 else ps[:-1]
        factors = []
        for idx, p in enumerate(even):
            if (idx % 2 == 0):
                factors.append(WD.ConcatAll((uInv, p, uInvRev)))
            else:
                factors.append(WD.ConcatAll((uRev, p, u)))
        if (k % 2 == 1):
            factors.append(WD.Concat(uInv, uInvRev))
            factors.append(WD.ConcatAll((uRev, ps[-1], u)))

    _CheckTelescopes(factors, WD.ConcatAll([uInv] + ps + [u]), "conjugate factorization")
    return factors

def CommutatorPalindromeFactorization(u, p, beta=0, a=None):
    '''
    Three palindromes with product [u, p]:
        u^-1 p^-1 rev(u^-1), rev(u) u, p
    With beta != 0 (p = a^alpha) the target is [u, a^alpha] a^beta and the
    third factor becomes a^(alpha+beta).
    '''
    _RequirePalindrome(p, "p")
    if (beta != 0 or a is not None):
        if (p.isEmpty()):
            if (a is None):
                raise PreconditionError("generator a is needed when p is empty")
            alpha = 0
        elif (len(p) != 1):
            raise PreconditionError("p = {:s} must be a generator power".format(WD.FormatWord(p)))
        else:
            gen, alpha = p.getSyllables()[0]
            if (a is None):
                a = gen
            elif (a != gen):
                raise PreconditionError("p = {:s} is not a power of x{:d}".format(WD.FormatWord(p), a))
        last = WD.Generator(a, alpha+beta)
        target = WD.Concat(WD.CommutatorWord(u, p), WD.Generator(a, beta))
    else:
        last = p
        target = WD.CommutatorWord(u, p)

    uInv = WD.Invert(u)
    factors = [WD.ConcatAll((uInv, WD.Invert(p), WD.Reverse(uInv))),
               WD.Concat(WD.Reverse(u), u),
               last]
    _CheckTelescopes(factors, target, "commutator factorization")
    return factors

def CommutatorTwoPalindromesFactorization(u, p, q):
    '''
    Four palindromes with product [u, pq] = (u^-1 q^-1 p^-1 u) p q
    '''
    _RequirePalindrome(p, "p")
    _RequirePalindrome(q, "q")
    factors = ConjugateFactorization(u, [WD.Invert(q), WD.Invert(p)]) + [p, q]
    _CheckTelescopes(factors, WD.CommutatorWord(u, WD.Concat(p, q)), "commutator factorization")
    return factors

def CommutatorPalindromePowerFactorization(u, p, a, alpha, beta):
    '''
    Four palindromes with product [u, p a^alpha] a^beta:
    u^-1 (a^-alpha p^-1) u conjugated into two palindromes, then p, a^(alpha+beta)
    '''
    _RequirePalindrome(p, "p")
    factors = ConjugateFactorization(u, [WD.Generator(a, -alpha), WD.Invert(p)])
    factors += [p, WD.Generator(a, alpha+beta)]
    target = WD.Concat(WD.CommutatorWord(u, WD.Concat(p, WD.Generator(a, alpha))), WD.Generator(a, beta))
    _CheckTelescopes(factors, target, "commutator factorization")
    return factors

def CentralPowerFactorization(p1, p2, m, ctx):
    '''
    If g = p1 p2 is central, g^m = p1^m p2^m (two palindromes)
    '''
    _RequirePalindrome(p1, "p1")
    _RequirePalindrome(p2, "p2")
    if (not MG.IsCentral(WD.Concat(p1, p2), ctx)):
        raise PreconditionError("p1 p2 is not central in N({:d},{:d})".format(ctx.n, ctx.r))
    return [WD.Power(p1, m), WD.Power(p2, m)]
