'''
Free group words over a fixed basis x1..xn.

A word is stored as a tuple of syllables (generator, exponent), always
freely reduced: adjacent syllables have distinct generators and no
exponent is zero. Words are immutable; all operations return new words.

Text grammar:
    word   := factor*
    factor := atom power?
    atom   := GEN | '(' word ')' | '[' word ',' word ']'
    power  := '^' '-'? DIGIT+
    GEN    := 'x' DIGIT+
"1" alone denotes the identity. Commutators follow [g,h] = g^-1 h^-1 g h.
'''
import re

from . import pwexception as BE

# Largest reduced word a power may expand to, and deepest bracket nesting
# the parser accepts
MAX_SYLLABLES = 1000000
MAX_NESTING = 100

#############################################################################

class WordSyntaxError(BE.DomainError):
    '''
    Text does not conform to the word grammar
    '''
    def __init__(self, cause, text, position):
        BE.DomainError.__init__(self, "Syntax error at position {:d}: {:s} in '{:s}'".
                format(position, cause, text))
        self.position = position

class GeneratorRangeError(BE.DomainError):
    '''
    Generator index outside 1..n
    '''
    def __init__(self, index, n, position=None):
        descr = "Generator x{:d} out of range 1..{:d}".format(index, n)
        if (position is not None):
            descr += " at position {:d}".format(position)
        BE.DomainError.__init__(self, descr)

class WordTooLong(BE.DomainError):
    '''
    A power would expand beyond MAX_SYLLABLES syllables
    '''
    def __init__(self, count):
        BE.DomainError.__init__(self, "Word of {:d} syllables exceeds the limit of {:d}".
                format(count, MAX_SYLLABLES))

class ContextError(BE.DomainError):
    '''
    Invalid rank or class
    '''
    def __init__(self, cause):
        BE.DomainError.__init__(self, "Invalid group context: " + cause)

#############################################################################

class GroupContext:
    '''
    Rank n and nilpotency class r of the free nilpotent group N(n,r).
    '''
    def __init__(self, n, r):
        if (not isinstance(n, int)) or n < 1:
            raise ContextError("rank n must be an integer >= 1, got {}".format(n))
        if (not isinstance(r, int)) or r < 1:
            raise ContextError("class r must be an integer >= 1, got {}".format(r))
        self.n = n
        self.r = r

    def withClass(self, r):
        '''
        Same rank, other class (for the projections N(n,r) -> N(n,r')).
        '''
        return GroupContext(self.n, r)

    def __eq__(self, other):
        return isinstance(other, GroupContext) and self.n == other.n and self.r == other.r

    def __hash__(self):
        return hash((self.n, self.r))

    def __repr__(self):
        return "GroupContext(n={:d}, r={:d})".format(self.n, self.r)

def _Reduce(syllables):
    '''
    Freely reduce a sequence of (generator, exponent) pairs
    (internal function)
    '''
    out = []
    for gen, exp in syllables:
        if (exp == 0): continue
        if (out and out[-1][0] == gen):
            exp += out[-1][1]
            if (exp == 0):
                out.pop()
            else:
                out[-1] = (gen, exp)
        else:
            out.append((gen, exp))
    return tuple(out)

class Word:
    '''
    Freely reduced word in x1..xn, immutable.
    '''
    def __init__(self, syllables=()):
        for syl in syllables:
            if (len(syl) != 2 or not isinstance(syl[0], int) or syl[0] < 1
                    or not isinstance(syl[1], int)):
                raise BE.DomainError("Invalid syllable {}".format(syl))
        self._syl = _Reduce(syllables)

    def getSyllables(self):
        return self._syl

    def isEmpty(self):
        return len(self._syl) == 0

    def letterLength(self):
        '''
        Length as a sequence of letters x_i^{+-1}
        '''
        return sum(abs(e) for _, e in self._syl)

    def maxGenerator(self):
        '''
        Largest generator index used (0 for the identity)
        '''
        return max((g for g, _ in self._syl), default=0)

    def maxExponent(self):
        '''
        Largest absolute syllable exponent (0 for the identity)
        '''
        return max((abs(e) for _, e in self._syl), default=0)

    def __len__(self):
        return len(self._syl)

    def __iter__(self):
        return iter(self._syl)

    def __eq__(self, other):
        return isinstance(other, Word) and self._syl == other._syl

    def __hash__(self):
        return hash(self._syl)

    def __mul__(self, other):
        return Concat(self, other)

    def __pow__(self, m):
        return Power(self, m)

    def __str__(self):
        return FormatWord(self)

    def __repr__(self):
        return "Word('{:s}')".format(FormatWord(self))

EMPTY = Word()

def WrapReduced(syllables):
    '''
    Word from a syllable tuple that is already freely reduced; no checks
    '''
    w = object.__new__(Word)
    w._syl = syllables
    return w

#############################################################################

def Generator(i, e=1):
    '''
    The word x_i^e
    '''
    return Word(((i, e),))

def Concat(a, b):
    '''
    Freely reduced product a.b
    '''
    if (not a._syl): return b
    if (not b._syl): return a
    return WrapReduced(_Reduce(a._syl + b._syl))

def ConcatAll(words):
    '''
    Freely reduced product of a sequence of words
    '''
    syl = []
    for w in words:
        syl.extend(w._syl)
    return WrapReduced(_Reduce(syl))

def Invert(w):
    '''
    Inverse word
    '''
    return WrapReduced(tuple((g, -e) for g, e in reversed(w._syl)))

def Reverse(w):
    '''
    Reverse word: syllables in reverse order, exponents unchanged.
    Reversal of a reduced word is reduced.
    '''
    return WrapReduced(tuple(reversed(w._syl)))

def IsPalindromeWord(w):
    '''
    True if the word reads the same forwards and backwards.
    The empty word counts as a palindrome.
    '''
    syl = w._syl
    return syl == syl[::-1]

def MakePalindrome(u, a, alpha):
    '''
    The palindrome u a^alpha reverse(u)
    '''
    return ConcatAll((u, Generator(a, alpha), Reverse(u)))

def CommutatorWord(u, v):
    '''
    Commutator [u,v] = u^-1 v^-1 u v
    '''
    return ConcatAll((Invert(u), Invert(v), u, v))

def LeftNormedWord(words):
    '''
    Left-normed commutator [w1, w2, ..., wk] = [[...[w1, w2], ...], wk].
    A single word is returned unchanged.
    '''
    words = list(words)
    if (len(words) == 0):
        return EMPTY
    out = words[0]
    for w in words[1:]:
        out = CommutatorWord(out, w)
    return out

def Power(w, m):
    '''
    Reduced w^m for any integer m
    '''
    if (m == 0 or not w._syl):
        return EMPTY
    if (m < 0):
        w = Invert(w)
        m = -m
    if (len(w._syl) == 1):
        g, e = w._syl[0]
        return WrapReduced(((g, e*m),))
    if (len(w._syl)*m > MAX_SYLLABLES):
        raise WordTooLong(len(w._syl)*m)
    return WrapReduced(_Reduce(w._syl*m))

def RelabelWord(w, mapping):
    '''
    Substitute generators: x_i -> x_mapping[i]
    '''
    return Word(tuple((mapping[g], e) for g, e in w._syl))

def ExponentSums(w, n):
    '''
    Exponent sum of every generator (abelianization), as a tuple of length n
    '''
    sums = [0]*n
    for g, e in w._syl:
        if (g > n):
            raise GeneratorRangeError(g, n)
        sums[g-1] += e
    return tuple(sums)

def CheckAlphabet(w, n):
    '''
    Raise GeneratorRangeError if w uses a generator beyond x_n
    '''
    g = w.maxGenerator()
    if (g > n):
        raise GeneratorRangeError(g, n)

#############################################################################
# Text format

_TOKEN_RE = re.compile(r"\s*(?:(x)(\d+)|(\d+)|(\S))")

def _Tokenize(text):
    '''
    Split text into (kind, value, position) tokens (internal function)
    '''
    tokens = []
    pos = 0
    while (pos < len(text)):
        m = _TOKEN_RE.match(text, pos)
        if (m is None):
            break # trailing whitespace
        if (m.group(1)):
            tokens.append(("GEN", int(m.group(2)), m.start(1)))
        elif (m.group(3)):
            tokens.append(("NUM", int(m.group(3)), m.start(3)))
        else:
            c = m.group(4)
            if (c not in "()[],^-"):
                raise WordSyntaxError("unexpected character '{:s}'".format(c), text, m.start(4))
            tokens.append((c, c, m.start(4)))
        pos = m.end()
    tokens.append(("END", None, len(text)))
    return tokens

class _Parser:
    '''
    Recursive descent parser for the word grammar (internal class)
    '''
    def __init__(self, text, n):
        self.text = text
        self.n = n
        self.tokens = _Tokenize(text)
        self.idx = 0
        self.depth = 0

    def peek(self):
        return self.tokens[self.idx]

    def take(self, kind, what):
        tok = self.tokens[self.idx]
        if (tok[0] != kind):
            found = "end of input" if tok[0] == "END" else "'{}'".format(tok[1])
            raise WordSyntaxError("expected {:s}, found {:s}".format(what, found), self.text, tok[2])
        self.idx += 1
        return tok

    def parseWord(self):
        parts = []
        while (self.peek()[0] in ("GEN", "(", "[")):
            parts.append(self.parseFactor())
        return ConcatAll(parts)

    def parseFactor(self):
        atom = self.parseAtom()
        if (self.peek()[0] == "^"):
            self.idx += 1
            sign = 1
            if (self.peek()[0] == "-"):
                self.idx += 1
                sign = -1
            m = self.take("NUM", "exponent")[1]
            atom = Power(atom, sign*m)
        return atom

    def parseAtom(self):
        tok = self.peek()
        if (tok[0] == "GEN"):
            self.idx += 1
            if (tok[1] < 1 or tok[1] > self.n):
                raise GeneratorRangeError(tok[1], self.n, tok[2])
            return Generator(tok[1])
        if (tok[0] in ("(", "[")):
            self.depth += 1
            if (self.depth > MAX_NESTING):
                raise WordSyntaxError("brackets nested deeper than {:d}".format(MAX_NESTING), self.text, tok[2])
            self.idx += 1
            if (tok[0] == "("):
                w = self.parseWord()
                self.take(")", "')'")
            else:
                u = self.parseWord()
                self.take(",", "','")
                v = self.parseWord()
                self.take("]", "']'")
                w = CommutatorWord(u, v)
            self.depth -= 1
            return w
        raise WordSyntaxError("unexpected '{}'".format(tok[1]), self.text, tok[2])

def ParseWord(text, ctx):
    '''
    Parse text into a freely reduced Word; generator indices must be <= ctx.n.
    Raises WordSyntaxError, GeneratorRangeError or WordTooLong.
    '''
    if (not isinstance(text, str)):
        raise BE.DomainError("Word must be given as text, got {}".format(type(text).__name__))
    if (text.strip() == "1"):
        return EMPTY
    parser = _Parser(text, ctx.n)
    w = parser.parseWord()
    tok = parser.peek()
    if (tok[0] != "END"):
        raise WordSyntaxError("unexpected '{}'".format(tok[1]), text, tok[2])
    return w

def FormatSyllable(g, e):
    '''
    Text for x_g^e, exponent 1 elided
    '''
    if (e == 1):
        return "x{:d}".format(g)
    return "x{:d}^{:d}".format(g, e)

def FormatWord(w):
    '''
    Text for a word; the identity prints as "1"
    '''
    if (not w._syl):
        return "1"
    return " ".join(FormatSyllable(g, e) for g, e in w._syl)
