'''
Command line tool 'palwidth'.

    palwidth <verb> --n N --r R [options] WORD...
    palwidth lemma-check SUBJECT [--bound B] [--samples S] [--seed S]

Exit status: 0 success, 1 bad input (including input too large to
process), 2 internal invariant breached or lemma-check failure.
Results go to stdout (or --out), diagnostics to stderr.
'''
import sys
import json
import argparse

import numpy as np
import progressbar as pb

from . import pwexception as BE
from . import messagelogger as ML
from . import certkeys as CK
from . import words as WD
from . import magnus as MG
from . import nil2 as N2
from . import palcalc as PC
from . import decompose as DC
from . import search as SR

#############################################################################

class UsageError(BE.DomainError):
    '''
    Command line does not parse
    '''
    def __init__(self, cause):
        BE.DomainError.__init__(self, "Usage: " + cause)

class _Parser(argparse.ArgumentParser):
    '''
    Argument parser that raises instead of exiting
    '''
    def error(self, message):
        raise UsageError(message)

#############################################################################
# Certificates

def CertificateToDict(cert):
    '''
    JSON certificate of a LengthCertificate
    '''
    f = cert.witness
    return {CK.N_KEY: cert.ctx.n,
            CK.R_KEY: cert.ctx.r,
            CK.TARGET_KEY: WD.FormatWord(cert.target),
            CK.FACTORS_KEY: [WD.FormatWord(p) for p in f.factors],
            CK.VERIFIED_KEY: f.verified,
            CK.LOWER_KEY: cert.lower,
            CK.LOWER_METHOD_KEY: cert.lowerMethod,
            CK.UPPER_KEY: cert.upper,
            CK.EXACT_KEY: cert.exact}

def CertificateFromDict(d):
    '''
    Re-verify a JSON certificate. Returns the LengthCertificate rebuilt from
    scratch: the factorization is verified again and the lower bound is
    recomputed by its method. Raises DomainError if anything disagrees.
    '''
    missing = [k for k in CK.CERT_KEYS if k not in d]
    if (missing):
        raise BE.DomainError("Certificate lacks keys: " + ", ".join(missing))
    for k in (CK.N_KEY, CK.R_KEY, CK.LOWER_KEY, CK.UPPER_KEY):
        if (not isinstance(d[k], int) or isinstance(d[k], bool)):
            raise BE.DomainError("Certificate key '{:s}' must be an integer".format(k))
    if (not isinstance(d[CK.TARGET_KEY], str)):
        raise BE.DomainError("Certificate key '{:s}' must be a word".format(CK.TARGET_KEY))
    if (not isinstance(d[CK.FACTORS_KEY], list) or not all(isinstance(t, str) for t in d[CK.FACTORS_KEY])):
        raise BE.DomainError("Certificate key '{:s}' must be a list of words".format(CK.FACTORS_KEY))
    if (not isinstance(d[CK.LOWER_METHOD_KEY], str)):
        raise BE.DomainError("Certificate key '{:s}' must be a method name".format(CK.LOWER_METHOD_KEY))
    ctx = WD.GroupContext(d[CK.N_KEY], d[CK.R_KEY])
    target = WD.ParseWord(d[CK.TARGET_KEY], ctx)
    factors = [WD.ParseWord(t, ctx) for t in d[CK.FACTORS_KEY]]
    f = PC.VerifyFactorization(PC.Factorization(ctx, target, factors))
    if (not f.verified):
        raise BE.DomainError("Certificate does not verify: " + f.reason)
    if (d[CK.UPPER_KEY] != f.count()):
        raise BE.DomainError("Upper bound {} differs from the {:d} factors".format(d[CK.UPPER_KEY], f.count()))

    method = d[CK.LOWER_METHOD_KEY]
    if (method == CK.PARITY_METHOD):
        lower = DC.TrivialityLowerBound(target, ctx)
    elif (method == CK.N22_METHOD):
        if (ctx.n != 2 or ctx.r != 2):
            raise BE.DomainError("Lower bound method '{}' only applies in N(2,2)".format(method))
        lower = DC.N22ExactLength(N2.FromWord(target, ctx), target).lower
    else:
        raise BE.DomainError("Lower bound method '{}' cannot be re-derived".format(method))
    if (d[CK.LOWER_KEY] > lower):
        raise BE.DomainError("Lower bound {} not supported by method '{}' (gives {:d})".
                format(d[CK.LOWER_KEY], method, lower))
    exact = bool(d[CK.EXACT_KEY])
    if (exact and d[CK.LOWER_KEY] != f.count()):
        raise BE.DomainError("Exact length claimed with bracket {}..{:d}".format(d[CK.LOWER_KEY], f.count()))
    return DC.LengthCertificate(ctx, target, d[CK.LOWER_KEY], method, f, exact=exact)

def _CertificateText(cert):
    lines = [str(cert.upper) if cert.exact else "[{:d}, {:d}]".format(cert.lower, cert.upper)]
    lines += [WD.FormatWord(p) for p in cert.witness.factors]
    return lines

#############################################################################
# Lemma replays

class LemmaReport:
    '''
    Outcome of a lemma-check sweep
    '''
    def __init__(self, subject, checked, failures, details=None):
        self.subject = subject
        self.checked = checked
        self.failures = failures
        self.details = details or dict()

    def holds(self):
        return len(self.failures) == 0

    def toDict(self):
        d = {CK.SUBJECT_KEY: self.subject, CK.HOLDS_KEY: self.holds(),
             CK.CHECKED_KEY: self.checked, CK.FAILURES_KEY: self.failures}
        d.update(self.details)
        return d

    def __str__(self):
        return "{:s}: holds={} checked={:d}".format(self.subject, self.holds(), self.checked)

def _Progress(it):
    if (ML.GetVerbosity() >= 1):
        return pb.progressbar(it, redirect_stdout=True)
    return it

def _RandomWord(rng, n, maxLength):
    length = int(rng.integers(0, maxLength+1))
    gens = rng.integers(1, n+1, size=length)
    signs = rng.choice((-1, 1), size=length)
    return WD.Word(tuple((int(g), int(s)) for g, s in zip(gens, signs)))

def _RandomN22(rng, bound):
    a, b, c = (int(v) for v in rng.integers(-bound, bound+1, size=3))
    return N2.N22Element(a, b, c)

def CheckN1(maxRank=6):
    '''
    x1 ... xn needs exactly n palindromes in N(n,1)
    '''
    failures = []
    for n in range(1, maxRank+1):
        ctx = WD.GroupContext(n, 1)
        w = WD.ConcatAll([WD.Generator(i) for i in range(1, n+1)])
        count = DC.DecomposeAny(w, ctx).count()
        lower = DC.ParityLowerBound(w, ctx)
        if (count != n or lower != n):
            failures.append({CK.N_KEY: n, "factors": count, "parity": lower})
    return LemmaReport(CK.N1_SUBJECT, maxRank, failures)

def CheckL1(bound=CK.DEFAULT_L1_BOUND):
    report = SR.ExhaustiveL1Check(bound)
    return LemmaReport(CK.L1_SUBJECT, report.pairsChecked, [list(c) for c in report.counterexamples],
                       {"bound": bound})

def CheckT21(boxAB=CK.DEFAULT_T21_BOX_AB, boxC=CK.DEFAULT_T21_BOX_C):
    '''
    Exact N(2,2) lengths over the box: at most 3, 3 attained, all witnesses
    verified, and equal to the table built from classified palindromes
    '''
    progress = ML.GetVerbosity() >= 1
    exact = SR.N22LengthSweep(boxAB, boxC, progress)
    table = SR.ClassifiedLengthTable(boxAB, boxC, progress=progress)
    keys = [CK.ALPHA_COL, CK.BETA_COL, CK.GAMMA_COL]
    merged = exact.merge(table, on=keys, suffixes=("_exact", "_table"))
    lx = CK.LENGTH_COL + "_exact"
    lt = CK.LENGTH_COL + "_table"
    failures = []
    for row in merged[merged[lx] != merged[lt]].itertuples(index=False):
        failures.append({"point": [int(row[0]), int(row[1]), int(row[2])],
                         "exact": int(getattr(row, lx)), "table": int(getattr(row, lt))})
    if (int(exact[CK.LENGTH_COL].max()) != 3):
        failures.append({"max_length": int(exact[CK.LENGTH_COL].max())})
    if (not exact[CK.VERIFIED_KEY].all()):
        failures.append({"unverified": int((~exact[CK.VERIFIED_KEY]).sum())})
    counts = exact[CK.LENGTH_COL].value_counts().sort_index()
    return LemmaReport(CK.T21_SUBJECT, len(merged), failures,
                       {"length_counts": {str(k): int(v) for k, v in counts.items()}})

def CheckN3(samples=CK.DEFAULT_N3_SAMPLES, seed=CK.DEFAULT_SEED,
            ranks=CK.DEFAULT_N3_RANKS, bound=CK.DEFAULT_N3_EXPONENT):
    '''
    Random N(n,2) elements decompose into at most 3(n-1) palindromes
    '''
    rng = np.random.default_rng(seed)
    failures = []
    checked = 0
    for n in ranks:
        with ML.LogLevel("n3"):
            ML.LogMessage("rank {:d}".format(n))
            for _ in _Progress(range(samples)):
                alpha = [int(v) for v in rng.integers(-bound, bound+1, size=n)]
                beta = {(i, j): int(rng.integers(-bound, bound+1)) for i in range(2, n+1) for j in range(1, i)}
                e = N2.Nil2Element(alpha, beta)
                count = DC.NN2Decompose(e).count()
                checked += 1
                if (count > 3*(n-1)):
                    failures.append({CK.N_KEY: n, "element": N2.FormatNil2(e), "factors": count})
    return LemmaReport(CK.N3_SUBJECT, checked, failures)

def CheckN2(samples=CK.DEFAULT_N2_SAMPLES, seed=CK.DEFAULT_SEED,
            contexts=CK.DEFAULT_N2_CONTEXTS, maxLength=CK.DEFAULT_N2_WORD_LENGTH):
    '''
    Random words of N(n,r) decompose into at most 3n palindromes
    '''
    rng = np.random.default_rng(seed)
    failures = []
    checked = 0
    for n, r in contexts:
        ctx = WD.GroupContext(n, r)
        with ML.LogLevel("n2"):
            ML.LogMessage("context N({:d},{:d})".format(n, r))
            for _ in _Progress(range(samples)):
                w = _RandomWord(rng, n, maxLength)
                count = DC.NNRDecompose(w, ctx).count()
                checked += 1
                if (count > 3*n):
                    failures.append({CK.N_KEY: n, CK.R_KEY: r, CK.WORD_KEY: WD.FormatWord(w), "factors": count})
    return LemmaReport(CK.N2_SUBJECT, checked, failures)

def CheckCor21(samples=CK.DEFAULT_COR21_SAMPLES, seed=CK.DEFAULT_SEED, bound=CK.DEFAULT_N3_EXPONENT):
    '''
    Length in N(2,1) of the image never exceeds the length in N(2,2), and
    witness palindromes stay palindromes in the quotient
    '''
    rng = np.random.default_rng(seed)
    failures = []
    for _ in _Progress(range(samples)):
        e = _RandomN22(rng, bound)
        cert = DC.N22ExactLength(e)
        abelian = DC.AbelianExactDecompose(cert.target, 2).count()
        projected = PC.VerifyFactorization(PC.Factorization(WD.GroupContext(2, 1), cert.target,
                                                            cert.witness.factors))
        if (abelian > cert.upper or not projected.verified):
            failures.append({"element": N2.FormatNil2(e), "abelian": abelian, "n22": cert.upper})
    return LemmaReport(CK.COR21_SUBJECT, samples, failures)

#############################################################################

def _BuildParser():
    parser = _Parser(prog="palwidth", description="Palindromic width of free nilpotent groups")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--out", default="", help="Write output to this file instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0, help="More messages on stderr")
    common.add_argument("--log", default="", help="Message log file")
    group = _Parser(add_help=False, parents=[common])
    group.add_argument("--n", type=int, required=True, help="Rank")
    group.add_argument("--r", type=int, required=True, help="Nilpotency class")

    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb, nWords, descr in ((CK.NORMALIZE_VERB, 1, "Normal form (r <= 2)"),
                                (CK.MUL_VERB, 2, "Product of two words"),
                                (CK.INV_VERB, 1, "Inverse"),
                                (CK.EVAL_VERB, 1, "Truncated power series"),
                                (CK.DECOMPOSE_VERB, 1, "Palindrome decomposition"),
                                (CK.LENGTH_VERB, 1, "Palindromic length certificate")):
        sub = verbs.add_parser(verb, parents=[group], help=descr)
        sub.add_argument("words", nargs=nWords, help="Word(s), e.g. \"x1^2 [x2,x1]\"")

    sub = verbs.add_parser(CK.SEARCH_VERB, parents=[group], help="Bounded search for a shortest product")
    sub.add_argument("words", nargs=1)
    sub.add_argument("--max-syllables", type=int, default=CK.DEFAULT_MAX_SYLLABLES)
    sub.add_argument("--max-exponent", type=int, default=CK.DEFAULT_MAX_EXPONENT)
    sub.add_argument("--max-factors", type=int, default=CK.DEFAULT_MAX_FACTORS)

    sub = verbs.add_parser(CK.VERIFY_VERB, parents=[common], help="Re-verify a JSON certificate")
    sub.add_argument("file", help="Certificate file, '-' for stdin")

    sub = verbs.add_parser(CK.LEMMA_VERB, parents=[common], help="Replay a result over a sweep")
    sub.add_argument("subject", choices=CK.LEMMA_SUBJECTS)
    sub.add_argument("--bound", type=int, default=None,
                     help="n1: largest rank (1..{:d}); l1: parameter bound (0..{:d}); t21: box (1..{:d})".
                     format(CK.MAX_N1_RANK, CK.MAX_L1_BOUND, CK.MAX_T21_BOX_AB))
    sub.add_argument("--samples", type=int, default=None, help="Random samples (0..{:d})".format(CK.MAX_SAMPLES))
    sub.add_argument("--seed", type=int, default=CK.DEFAULT_SEED)
    return parser

def _Context(args):
    return WD.GroupContext(args.n, args.r)

def _Words(args, ctx):
    return [WD.ParseWord(t, ctx) for t in args.words]

def _ElementText(w, ctx):
    '''
    Normal form for r <= 2, reduced word above
    '''
    if (ctx.r == 1):
        return N2.FormatNil2(N2.Nil2Element(WD.ExponentSums(w, ctx.n)))
    if (ctx.r == 2):
        return N2.FormatNil2(N2.FromWord(w, ctx))
    return WD.FormatWord(w)

def _Normalize(args):
    ctx = _Context(args)
    w, = _Words(args, ctx)
    if (ctx.r > 2):
        raise BE.DomainError("No normal form for class r={:d}; use 'eval'".format(ctx.r))
    text = _ElementText(w, ctx)
    return {CK.N_KEY: ctx.n, CK.R_KEY: ctx.r, CK.NORMAL_FORM_KEY: text}, [text], 0

def _Arith(args):
    ctx = _Context(args)
    ws = _Words(args, ctx)
    w = WD.Concat(*ws) if args.verb == CK.MUL_VERB else WD.Invert(ws[0])
    text = _ElementText(w, ctx)
    return {CK.N_KEY: ctx.n, CK.R_KEY: ctx.r, CK.WORD_KEY: WD.FormatWord(w), CK.NORMAL_FORM_KEY: text}, [text], 0

def _Eval(args):
    ctx = _Context(args)
    w, = _Words(args, ctx)
    s = MG.EvalWord(w, ctx)
    text = MG.FormatSeries(s)
    terms = [[list(m), c] for m, c in s.items()]
    return {CK.N_KEY: ctx.n, CK.R_KEY: ctx.r, CK.SERIES_KEY: text, CK.TERMS_KEY: terms}, [text], 0

def _Decompose(args):
    ctx = _Context(args)
    w, = _Words(args, ctx)
    f = DC.DecomposeAny(w, ctx)
    lower = DC.TrivialityLowerBound(w, ctx)
    cert = DC.LengthCertificate(ctx, w, lower, CK.PARITY_METHOD, f, exact=(lower == f.count()))
    lines = ["{:d} palindromes".format(f.count())] + [WD.FormatWord(p) for p in f.factors]
    return CertificateToDict(cert), lines, 0

def _Length(args):
    ctx = _Context(args)
    w, = _Words(args, ctx)
    cert = DC.ExactOrBracketLength(w, ctx)
    return CertificateToDict(cert), _CertificateText(cert), 0

def _Search(args):
    ctx = _Context(args)
    w, = _Words(args, ctx)
    b = SR.SearchBounds(args.max_syllables, args.max_exponent, args.max_factors)
    cert = SR.RestrictedPalindromicLength(w, ctx, b)
    bounds = {"max_syllables": b.maxSyllables, "max_exponent": b.maxExponent, "max_factors": b.maxFactors}
    if (cert is None):
        return ({CK.FOUND_KEY: False, CK.BOUNDS_KEY: bounds},
                ["no product of at most {:d} bounded palindromes".format(b.maxFactors)], 0)
    d = CertificateToDict(cert)
    d[CK.FOUND_KEY] = True
    d[CK.BOUNDS_KEY] = bounds
    return d, _CertificateText(cert), 0

def _Verify(args):
    try:
        if (args.file == "-"):
            d = json.load(sys.stdin)
        else:
            with open(args.file, "r") as f:
                d = json.load(f)
    except (OSError, ValueError) as exc:
        raise BE.DomainError("Cannot read certificate '{}': {}".format(args.file, exc))
    if (not isinstance(d, dict)):
        raise BE.DomainError("Certificate must be a JSON object")
    cert = CertificateFromDict(d)
    return CertificateToDict(cert), ["verified"] + _CertificateText(cert), 0

def _Bounded(name, value, default, low, high):
    '''
    Option value, or the default when absent; must lie in low..high
    '''
    if (value is None):
        return default
    if (value < low or value > high):
        raise UsageError("{:s} must be in {:d}..{:d}, got {:d}".format(name, low, high, value))
    return value

def _LemmaCheck(args):
    subject = args.subject
    kw = dict()
    if (subject == CK.N1_SUBJECT):
        report = CheckN1(_Bounded("--bound", args.bound, 6, 1, CK.MAX_N1_RANK))
    elif (subject == CK.L1_SUBJECT):
        report = CheckL1(_Bounded("--bound", args.bound, CK.DEFAULT_L1_BOUND, 0, CK.MAX_L1_BOUND))
    elif (subject == CK.T21_SUBJECT):
        box = _Bounded("--bound", args.bound, CK.DEFAULT_T21_BOX_AB, 1, CK.MAX_T21_BOX_AB)
        report = CheckT21(box, CK.DEFAULT_T21_BOX_C if args.bound is None else box*box)
    else:
        if (args.samples is not None):
            kw["samples"] = _Bounded("--samples", args.samples, None, 0, CK.MAX_SAMPLES)
        if (subject == CK.N3_SUBJECT):
            report = CheckN3(seed=args.seed, **kw)
        elif (subject == CK.N2_SUBJECT):
            report = CheckN2(seed=args.seed, **kw)
        else:
            report = CheckCor21(seed=args.seed, **kw)
    return report.toDict(), [str(report)], 0 if report.holds() else 2

_VERBS = {CK.NORMALIZE_VERB: _Normalize,
          CK.MUL_VERB: _Arith,
          CK.INV_VERB: _Arith,
          CK.EVAL_VERB: _Eval,
          CK.DECOMPOSE_VERB: _Decompose,
          CK.LENGTH_VERB: _Length,
          CK.SEARCH_VERB: _Search,
          CK.VERIFY_VERB: _Verify,
          CK.LEMMA_VERB: _LemmaCheck}

def _Emit(text, out, stdout):
    if (out):
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        stdout.write(text)

def Run(argv, stdout=None):
    '''
    Execute one command; returns the exit status
    '''
    if (stdout is None):
        stdout = sys.stdout
    try:
        args = _BuildParser().parse_args(argv)
        ML.SetVerbosity(args.verbose)
        if (args.log):
            ML.SetLogFile(args.log)
        ML.LogMessage("palwidth {:s}".format(" ".join(argv)), severity=-1)
        data, lines, status = _VERBS[args.verb](args)
        if (args.json):
            text = json.dumps(data, indent=2) + "\n"
        else:
            text = "".join(line + "\n" for line in lines)
        _Emit(text, args.out, stdout)
        return status
    except BE.InvariantBreach as exc:
        ML.LogMessage(str(exc), severity=1)
        return 2
    except BE.DomainError as exc:
        ML.LogMessage(str(exc), severity=1)
        return 1
    except OSError as exc:
        ML.LogMessage("I/O error: {}".format(exc), severity=1)
        return 1
    except (OverflowError, MemoryError, RecursionError, ValueError) as exc:
        # input too large for the machinery rather than malformed
        ML.LogMessage("Input out of range: {}: {}".format(type(exc).__name__, exc), severity=1)
        return 1

def Main():
    sys.exit(Run(sys.argv[1:]))

if __name__ == "__main__":
    Main()
