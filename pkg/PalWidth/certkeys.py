'''
Keys, labels and defaults shared by the library and the command line
'''

# JSON certificate keys
N_KEY="n"
R_KEY="r"
TARGET_KEY="target"
FACTORS_KEY="factors"
VERIFIED_KEY="verified"
LOWER_KEY="lower_bound"
LOWER_METHOD_KEY="lower_method"
UPPER_KEY="upper_bound"
EXACT_KEY="exact"

CERT_KEYS=(N_KEY, R_KEY, TARGET_KEY, FACTORS_KEY, VERIFIED_KEY,
           LOWER_KEY, LOWER_METHOD_KEY, UPPER_KEY, EXACT_KEY)

# Lower bound methods
PARITY_METHOD="parity"
N22_METHOD="n22-classification"
EXHAUSTIVE_METHOD="exhaustive"

LOWER_METHODS=(PARITY_METHOD, N22_METHOD, EXHAUSTIVE_METHOD)

# Oracles for group equality
MAGNUS_ORACLE="magnus"
NIL2_ORACLE="nil2"
AUTO_ORACLE="auto"

# Verbs
NORMALIZE_VERB="normalize"
MUL_VERB="mul"
INV_VERB="inv"
EVAL_VERB="eval"
DECOMPOSE_VERB="decompose"
LENGTH_VERB="length"
VERIFY_VERB="verify"
SEARCH_VERB="search"
LEMMA_VERB="lemma-check"

# Lemma-check subjects
N1_SUBJECT="n1"
L1_SUBJECT="l1"
T21_SUBJECT="t21"
N3_SUBJECT="n3"
N2_SUBJECT="n2"
COR21_SUBJECT="cor21"

LEMMA_SUBJECTS=(N1_SUBJECT, L1_SUBJECT, T21_SUBJECT, N3_SUBJECT,
                N2_SUBJECT, COR21_SUBJECT)

# Default search bounds
DEFAULT_MAX_SYLLABLES=3
DEFAULT_MAX_EXPONENT=4
DEFAULT_MAX_FACTORS=3

# Default sweep sizes
DEFAULT_L1_BOUND=5
DEFAULT_T21_BOX_AB=6
DEFAULT_T21_BOX_C=36
DEFAULT_N3_SAMPLES=1000
DEFAULT_N3_RANKS=(2, 3, 4, 5, 6)
DEFAULT_N3_EXPONENT=100
DEFAULT_N2_SAMPLES=200
DEFAULT_N2_CONTEXTS=((2, 3), (3, 3), (2, 4))
DEFAULT_N2_WORD_LENGTH=12
DEFAULT_COR21_SAMPLES=1000
DEFAULT_SEED=1

# Table columns for sweeps
ALPHA_COL="alpha"
BETA_COL="beta"
GAMMA_COL="gamma"
LENGTH_COL="length"

# Other JSON output keys
NORMAL_FORM_KEY="normal_form"
WORD_KEY="word"
SERIES_KEY="series"
TERMS_KEY="terms"
SUBJECT_KEY="subject"
HOLDS_KEY="holds"
CHECKED_KEY="checked"
FAILURES_KEY="failures"
FOUND_KEY="found"
BOUNDS_KEY="bounds"

# Largest lemma-check parameters the command line accepts
MAX_N1_RANK=32
MAX_L1_BOUND=20
MAX_T21_BOX_AB=12
MAX_SAMPLES=1000000
